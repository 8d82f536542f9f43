#include "lftreal/reals.hpp"

#include <stdexcept>

#include "lftreal/digit.hpp"
#include "lftreal/errors.hpp"

namespace lftreal {

Interval bounds_at(const DigitStream& alpha, std::size_t k) {
  Mobius prefix = Mobius::identity();
  DigitStream cur = alpha;
  for (std::size_t i = 0; i < k; ++i) {
    auto [digit, rest] = cur.next();
    prefix = compose(prefix, digit_matrix(digit));
    cur = std::move(rest);
  }
  return image(prefix);
}

Approximation decode_approx(const DigitStream& alpha, std::size_t k) {
  return {bounds_at(alpha, k), k};
}

std::size_t depth_for(const Rational& eps) {
  if (eps.sign() <= 0) throw std::invalid_argument("precision must be positive");
  const Integer k = ceil(Rational(2) / eps) - 1;
  return k <= 0 ? 0 : k.get_ui();
}

Approximation decode_to_eps(const DigitStream& alpha, const Rational& eps) {
  return decode_approx(alpha, depth_for(eps));
}

DigitStream encode(const Rational& q) {
  const Digit d = select_digit(q);
  Rational next = apply(digit_inverse(d), q);
  if (next == q) return repeat(d);
  return DigitStream::lazy([d, next = std::move(next)]() -> std::pair<Digit, DigitStream> {
    return {d, encode(next)};
  });
}

Separation compare_to_eps(const DigitStream& lhs, const DigitStream& rhs, const Rational& eps) {
  const Rational half = eps / Rational(2);
  const Interval a = decode_to_eps(lhs, half).bounds;
  const Interval b = decode_to_eps(rhs, half).bounds;
  if (a.hi() < b.lo()) return Separation::less;
  if (b.hi() < a.lo()) return Separation::greater;
  return Separation::overlapping;
}

namespace {

Integer pow10(unsigned exponent) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, exponent);
  return out;
}

// Round half away from zero.
Integer round_nearest(const Rational& q) {
  const Rational shifted = abs(q) + Rational(Integer(1), Integer(2));
  const Integer magnitude = floor(shifted);
  return q.sign() < 0 ? Integer(-magnitude) : magnitude;
}

std::string fixed_point(const Integer& scaled, unsigned places) {
  const bool negative = scaled < 0;
  std::string digits = Integer(negative ? -scaled : scaled).get_str();
  if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
  const std::string out =
      digits.substr(0, digits.size() - places) + "." + digits.substr(digits.size() - places);
  return negative ? "-" + out : out;
}

// Two significant digits, rounded up: 0.016394 -> "1.7e-2".
std::string scientific_upper(const Rational& value) {
  if (value.is_zero()) return "0";
  int exponent = 0;
  Rational scaled = value;
  while (scaled < Rational(1)) {
    scaled *= Rational(10);
    --exponent;
  }
  while (Rational(10) <= scaled) {
    scaled /= Rational(10);
    ++exponent;
  }
  Integer mantissa = ceil(scaled * Rational(10));
  if (mantissa == 100) {
    mantissa = 10;
    ++exponent;
  }
  const std::string m = mantissa.get_str();
  return m.substr(0, 1) + "." + m.substr(1) + "e" + std::to_string(exponent);
}

}  // namespace

std::string render_decimal(const Approximation& approx) {
  const Rational mid = approx.bounds.midpoint();
  const Rational half = approx.bounds.width() / Rational(2);

  unsigned places = 6;
  if (!half.is_zero()) {
    unsigned e = 0;
    while (half < Rational(Integer(1), pow10(e))) ++e;
    places = std::max(places, e + 1);
  }
  const Integer scale = pow10(places);
  const Integer scaled = round_nearest(mid * Rational(scale));
  const Rational rounding = abs(Rational(scaled, scale) - mid);

  return fixed_point(scaled, places) + " ± " + scientific_upper(half + rounding) +
         " (k=" + std::to_string(approx.depth) + ")";
}

}  // namespace lftreal
