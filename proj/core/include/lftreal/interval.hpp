#pragma once

#include <iosfwd>
#include <string>

#include "lftreal/rational.hpp"

namespace lftreal {

/// Closed rational interval [lo, hi] with lo <= hi.
class Interval {
 public:
  /// Throws std::invalid_argument when lo > hi.
  Interval(Rational lo, Rational hi);
  static Interval point(const Rational& q) { return Interval(q, q); }
  /// Interval spanned by two endpoints given in either order.
  static Interval hull(const Rational& a, const Rational& b);
  static Interval unit() { return Interval(Rational(-1), Rational(1)); }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / Rational(2); }

  bool contains(const Rational& q) const { return lo_ <= q && q <= hi_; }
  bool intersects(const Interval& other) const {
    return lo_ <= other.hi_ && other.lo_ <= hi_;
  }

  friend bool operator==(const Interval&, const Interval&) = default;

  std::string to_string() const;

 private:
  Rational lo_;
  Rational hi_;
};

/// True iff outer.lo <= inner.lo and inner.hi <= outer.hi.
bool is_subset(const Interval& inner, const Interval& outer);

std::ostream& operator<<(std::ostream& os, const Interval& interval);

}  // namespace lftreal
