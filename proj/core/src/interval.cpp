#include "lftreal/interval.hpp"

#include <ostream>
#include <stdexcept>

namespace lftreal {

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) {
    throw std::invalid_argument("interval bounds out of order: [" + lo_.to_string() + ", " +
                                hi_.to_string() + "]");
  }
}

Interval Interval::hull(const Rational& a, const Rational& b) {
  return a <= b ? Interval(a, b) : Interval(b, a);
}

std::string Interval::to_string() const {
  return "[" + lo_.to_string() + ", " + hi_.to_string() + "]";
}

bool is_subset(const Interval& inner, const Interval& outer) {
  return outer.lo() <= inner.lo() && inner.hi() <= outer.hi();
}

std::ostream& operator<<(std::ostream& os, const Interval& interval) {
  return os << interval.to_string();
}

}  // namespace lftreal
