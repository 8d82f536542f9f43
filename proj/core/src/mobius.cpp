#include "lftreal/mobius.hpp"

#include <array>
#include <ostream>

#include "lftreal/errors.hpp"

namespace lftreal {

std::string Mobius::to_string() const {
  return "mobius(" + a.to_string() + "," + b.to_string() + "," + c.to_string() + "," +
         d.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const Mobius& mu) { return os << mu.to_string(); }

Rational apply(const Mobius& mu, const Rational& x) {
  Rational den = mu.c * x + mu.d;
  if (den.is_zero()) throw SingularAt(x.to_string());
  return (mu.a * x + mu.b) / den;
}

Mobius compose(const Mobius& outer, const Mobius& inner) {
  return {outer.a * inner.a + outer.b * inner.c, outer.a * inner.b + outer.b * inner.d,
          outer.c * inner.a + outer.d * inner.c, outer.c * inner.b + outer.d * inner.d};
}

Mobius inverse(const Mobius& mu) {
  if (determinant(mu).is_zero()) throw SingularMatrix();
  return {mu.d, -mu.b, -mu.c, mu.a};
}

Rational determinant(const Mobius& mu) { return mu.a * mu.d - mu.b * mu.c; }

bool same_map(const Mobius& lhs, const Mobius& rhs) {
  const std::array<const Rational*, 4> u{&lhs.a, &lhs.b, &lhs.c, &lhs.d};
  const std::array<const Rational*, 4> v{&rhs.a, &rhs.b, &rhs.c, &rhs.d};
  bool u_zero = true;
  bool v_zero = true;
  for (std::size_t i = 0; i < 4; ++i) {
    u_zero = u_zero && u[i]->is_zero();
    v_zero = v_zero && v[i]->is_zero();
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (*u[i] * *v[j] != *u[j] * *v[i]) return false;
    }
  }
  return !u_zero && !v_zero;
}

bool is_bounded(const Mobius& mu) {
  const Rational plus = mu.d + mu.c;
  const Rational minus = mu.d - mu.c;
  return (plus.sign() > 0 && minus.sign() > 0) || (plus.sign() < 0 && minus.sign() < 0);
}

bool is_refining(const Mobius& mu) {
  if (!is_bounded(mu)) return false;
  const auto& [a, b, c, d] = mu;
  const std::array<Rational, 4> sums{a + b + c + d, a - b - c + d, -a - b + c + d,
                                     -a + b - c + d};
  bool all_nonnegative = true;
  bool all_nonpositive = true;
  for (const auto& s : sums) {
    all_nonnegative = all_nonnegative && s.sign() >= 0;
    all_nonpositive = all_nonpositive && s.sign() <= 0;
  }
  return all_nonnegative || all_nonpositive;
}

bool maps_into_unit(const Mobius& mu) {
  return is_bounded(mu) && is_subset(image(mu), Interval::unit());
}

bool emits(const Mobius& mu, const Mobius& phi) {
  if (!is_bounded(mu)) return false;
  const auto& [a, b, c, d] = mu;
  const Rational& p00 = phi.a;
  const Rational& p01 = phi.b;
  const Rational& p10 = phi.c;
  const Rational& p11 = phi.d;
  const Rational dmc = d - c;
  const Rational dpc = d + c;
  const Rational cpd = c + d;
  return dmc * dmc * (p01 - p00) <= dmc * (b - a) * (p11 - p10) &&
         dmc * (b - a) * (p10 + p11) <= dmc * dmc * (p00 + p01) &&
         dpc * cpd * (p01 - p00) <= dpc * (a + b) * (p11 - p10) &&
         dpc * (a + b) * (p10 + p11) <= dpc * cpd * (p00 + p01);
}

Interval image(const Mobius& mu) {
  if (!is_bounded(mu)) throw NotBounded(mu.to_string());
  return Interval::hull(apply(mu, Rational(-1)), apply(mu, Rational(1)));
}

Rational diameter(const Mobius& mu) { return image(mu).width(); }

}  // namespace lftreal
