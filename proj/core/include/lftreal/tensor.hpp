#pragma once

#include <iosfwd>
#include <string>

#include "lftreal/interval.hpp"
#include "lftreal/mobius.hpp"
#include "lftreal/rational.hpp"

namespace lftreal {

/// The quadratic map (x, y) -> (a*x*y + b*x + c*y + d) / (e*x*y + f*x + g*y + h),
/// identified with its 2x2x2 coefficient array. The first four coefficients
/// form the numerator, the last four the denominator.
struct Tensor {
  Rational a, b, c, d, e, f, g, h;

  friend bool operator==(const Tensor&, const Tensor&) = default;

  std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, const Tensor& xi);

/// Throws SingularAt when the denominator vanishes at (x, y).
Rational apply(const Tensor& xi, const Rational& x, const Rational& y);

/// (mu ∘ xi)(x, y) = mu(xi(x, y)): the matrix acts on the numerator and
/// denominator rows.
Tensor compose(const Mobius& mu, const Tensor& xi);

/// (xi ∘ mu on the first argument)(x, y) = xi(mu(x), y).
Tensor compose_left(const Tensor& xi, const Mobius& mu);

/// (xi ∘ mu on the second argument)(x, y) = xi(x, mu(y)).
Tensor compose_right(const Tensor& xi, const Mobius& mu);

/// True iff the two coefficient arrays are nonzero scalar multiples.
bool same_map(const Tensor& lhs, const Tensor& rhs);

/// The four corner denominators of the unit square share one strict sign.
bool is_bounded(const Tensor& xi);

/// Bounded, and at every corner of the unit square denominator ± numerator
/// are all >= 0 or all <= 0.
bool is_refining(const Tensor& xi);

/// Bounded and image([-1,1]^2) ⊆ [-1,1].
bool maps_into_unit(const Tensor& xi);

/// Emission condition: xi is bounded and its four unit-square corner values
/// lie in phi([-1,1]), decided by cross-multiplied inequalities.
bool emits(const Tensor& xi, const Mobius& phi);

/// Hull of the values at the four corners of x_range × y_range. For a tensor
/// bounded on the unit square this is the exact image of any sub-box.
/// Throws NotBounded, or OutOfUnitInterval when a range leaves [-1,1].
Interval image(const Tensor& xi, const Interval& x_range, const Interval& y_range);
Interval image(const Tensor& xi);

/// Width of image(xi, x_range, y_range).
Rational diameter(const Tensor& xi, const Interval& x_range, const Interval& y_range);

}  // namespace lftreal
