#include "lftreal/tensor.hpp"

#include <algorithm>
#include <array>
#include <ostream>

#include "lftreal/errors.hpp"

namespace lftreal {

std::string Tensor::to_string() const {
  std::string out = "tensor(";
  const std::array<const Rational*, 8> coeffs{&a, &b, &c, &d, &e, &f, &g, &h};
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i != 0) out += ",";
    out += coeffs[i]->to_string();
  }
  return out + ")";
}

std::ostream& operator<<(std::ostream& os, const Tensor& xi) { return os << xi.to_string(); }

Rational apply(const Tensor& xi, const Rational& x, const Rational& y) {
  const Rational xy = x * y;
  Rational den = xi.e * xy + xi.f * x + xi.g * y + xi.h;
  if (den.is_zero()) throw SingularAt("(" + x.to_string() + ", " + y.to_string() + ")");
  return (xi.a * xy + xi.b * x + xi.c * y + xi.d) / den;
}

Tensor compose(const Mobius& mu, const Tensor& xi) {
  return {mu.a * xi.a + mu.b * xi.e, mu.a * xi.b + mu.b * xi.f, mu.a * xi.c + mu.b * xi.g,
          mu.a * xi.d + mu.b * xi.h, mu.c * xi.a + mu.d * xi.e, mu.c * xi.b + mu.d * xi.f,
          mu.c * xi.c + mu.d * xi.g, mu.c * xi.d + mu.d * xi.h};
}

// Substituting x := (p*x + q) / (r*x + s) into n1*x*y + n2*x + n3*y + n4 and
// multiplying through by (r*x + s):
//   x*y: p*n1 + r*n3   x: p*n2 + r*n4   y: q*n1 + s*n3   1: q*n2 + s*n4
Tensor compose_left(const Tensor& xi, const Mobius& mu) {
  const auto& [p, q, r, s] = mu;
  return {p * xi.a + r * xi.c, p * xi.b + r * xi.d, q * xi.a + s * xi.c, q * xi.b + s * xi.d,
          p * xi.e + r * xi.g, p * xi.f + r * xi.h, q * xi.e + s * xi.g, q * xi.f + s * xi.h};
}

// Same substitution on y:
//   x*y: p*n1 + r*n2   x: q*n1 + s*n2   y: p*n3 + r*n4   1: q*n3 + s*n4
Tensor compose_right(const Tensor& xi, const Mobius& mu) {
  const auto& [p, q, r, s] = mu;
  return {p * xi.a + r * xi.b, q * xi.a + s * xi.b, p * xi.c + r * xi.d, q * xi.c + s * xi.d,
          p * xi.e + r * xi.f, q * xi.e + s * xi.f, p * xi.g + r * xi.h, q * xi.g + s * xi.h};
}

bool same_map(const Tensor& lhs, const Tensor& rhs) {
  const std::array<const Rational*, 8> u{&lhs.a, &lhs.b, &lhs.c, &lhs.d,
                                         &lhs.e, &lhs.f, &lhs.g, &lhs.h};
  const std::array<const Rational*, 8> v{&rhs.a, &rhs.b, &rhs.c, &rhs.d,
                                         &rhs.e, &rhs.f, &rhs.g, &rhs.h};
  bool u_zero = true;
  bool v_zero = true;
  for (std::size_t i = 0; i < 8; ++i) {
    u_zero = u_zero && u[i]->is_zero();
    v_zero = v_zero && v[i]->is_zero();
    for (std::size_t j = i + 1; j < 8; ++j) {
      if (*u[i] * *v[j] != *u[j] * *v[i]) return false;
    }
  }
  return !u_zero && !v_zero;
}

namespace {

// Numerator and denominator at the corners, in the order (1,1), (-1,-1),
// (-1,1), (1,-1) used by the inequality lists.
struct Corners {
  std::array<Rational, 4> num;
  std::array<Rational, 4> den;
};

Corners corners(const Tensor& xi) {
  const auto& [a, b, c, d, e, f, g, h] = xi;
  return {{a + b + c + d, a - b - c + d, -a - b + c + d, -a + b - c + d},
          {e + f + g + h, e - f - g + h, -e - f + g + h, -e + f - g + h}};
}

}  // namespace

bool is_bounded(const Tensor& xi) {
  const auto& [a, b, c, d, e, f, g, h] = xi;
  const std::array<Rational, 4> dens{e + f + g + h, e - f - g + h, -e - f + g + h,
                                     -e + f - g + h};
  return std::all_of(dens.begin(), dens.end(), [](const Rational& v) { return v.sign() > 0; }) ||
         std::all_of(dens.begin(), dens.end(), [](const Rational& v) { return v.sign() < 0; });
}

bool is_refining(const Tensor& xi) {
  if (!is_bounded(xi)) return false;
  const auto& [a, b, c, d, e, f, g, h] = xi;
  const std::array<Rational, 8> sums{
      a + b + c + d + e + f + g + h,  -a - b - c - d + e + f + g + h,
      a - b - c + d + e - f - g + h,  -a + b + c - d + e - f - g + h,
      -a - b + c + d - e - f + g + h, a + b - c - d - e - f + g + h,
      -a + b - c + d - e + f - g + h, a - b + c - d - e + f - g + h};
  return std::all_of(sums.begin(), sums.end(), [](const Rational& v) { return v.sign() >= 0; }) ||
         std::all_of(sums.begin(), sums.end(), [](const Rational& v) { return v.sign() <= 0; });
}

bool maps_into_unit(const Tensor& xi) {
  return is_bounded(xi) && is_subset(image(xi), Interval::unit());
}

bool emits(const Tensor& xi, const Mobius& phi) {
  if (!is_bounded(xi)) return false;
  const Corners k = corners(xi);
  const Rational lower_gap = phi.b - phi.a;  // phi(-1) = lower_gap / lower_den
  const Rational lower_den = phi.d - phi.c;
  const Rational upper_num = phi.a + phi.b;  // phi(1) = upper_num / upper_den
  const Rational upper_den = phi.c + phi.d;
  // Checked in the order (-1,-1), (-1,1), (1,-1), (1,1).
  for (std::size_t i : {1, 2, 3, 0}) {
    const Rational& n = k.num[i];
    const Rational& m = k.den[i];
    if (!(m * m * lower_gap <= m * n * lower_den)) return false;
    if (!(m * n * upper_den <= m * m * upper_num)) return false;
  }
  return true;
}

Interval image(const Tensor& xi, const Interval& x_range, const Interval& y_range) {
  if (!is_bounded(xi)) throw NotBounded(xi.to_string());
  const Interval unit = Interval::unit();
  if (!is_subset(x_range, unit)) throw OutOfUnitInterval(x_range.to_string());
  if (!is_subset(y_range, unit)) throw OutOfUnitInterval(y_range.to_string());
  const std::array<Rational, 4> values{
      apply(xi, x_range.lo(), y_range.lo()), apply(xi, x_range.lo(), y_range.hi()),
      apply(xi, x_range.hi(), y_range.lo()), apply(xi, x_range.hi(), y_range.hi())};
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return Interval(*lo, *hi);
}

Interval image(const Tensor& xi) { return image(xi, Interval::unit(), Interval::unit()); }

Rational diameter(const Tensor& xi, const Interval& x_range, const Interval& y_range) {
  return image(xi, x_range, y_range).width();
}

}  // namespace lftreal
