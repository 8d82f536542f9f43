#pragma once

#include <iosfwd>
#include <string>

#include "lftreal/interval.hpp"
#include "lftreal/rational.hpp"

namespace lftreal {

/// The Möbius map x -> (a*x + b) / (c*x + d), identified with its coefficient
/// matrix ((a, b), (c, d)). Boundedness and refinement are predicates, not
/// invariants: any four rationals form a Mobius value.
struct Mobius {
  Rational a, b, c, d;

  static Mobius identity() { return {1, 0, 0, 1}; }

  /// Coefficient-wise equality. Two matrices that differ by a nonzero scalar
  /// denote the same map but compare unequal here; use same_map for that.
  friend bool operator==(const Mobius&, const Mobius&) = default;

  std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, const Mobius& mu);

/// Throws SingularAt when c*x + d = 0.
Rational apply(const Mobius& mu, const Rational& x);

/// Matrix product; as maps, compose(outer, inner)(x) = outer(inner(x)).
Mobius compose(const Mobius& outer, const Mobius& inner);

/// Adjugate ((d, -b), (-c, a)). Throws SingularMatrix when det = 0.
Mobius inverse(const Mobius& mu);

Rational determinant(const Mobius& mu);

/// True iff the two matrices are nonzero scalar multiples of each other.
bool same_map(const Mobius& lhs, const Mobius& rhs);

/// Denominator sign test: d+c and d-c are both positive or both negative.
bool is_bounded(const Mobius& mu);

/// Bounded, and the four sums a+b+c+d, a-b-c+d, -a-b+c+d, -a+b-c+d are all
/// >= 0 or all <= 0. These are den(±1) ± num(±1), so the test holds exactly
/// when the map sends [-1,1] into itself; the boundary cases L(-1) = -1 and
/// R(1) = 1 need the non-strict comparisons.
bool is_refining(const Mobius& mu);

/// Bounded and image([-1,1]) ⊆ [-1,1].
bool maps_into_unit(const Mobius& mu);

/// Emission condition: mu is bounded and mu([-1,1]) ⊆ phi([-1,1]), decided by
/// cross-multiplied endpoint inequalities. `phi` is expected to be a digit or
/// another map whose denominators at ±1 are positive.
bool emits(const Mobius& mu, const Mobius& phi);

/// Image of [-1,1]; a bounded map is monotone there, so the endpoints are
/// mu(-1) and mu(1). Throws NotBounded.
Interval image(const Mobius& mu);

/// |mu(-1) - mu(1)|. Throws NotBounded.
Rational diameter(const Mobius& mu);

}  // namespace lftreal
