#include "lftreal/digit.hpp"

#include <ostream>

#include "lftreal/errors.hpp"

namespace lftreal {

namespace {

const std::array<Mobius, 3>& matrices() {
  static const std::array<Mobius, 3> table = [] {
    const Rational half(Integer(1), Integer(2));
    const Rational three_halves(Integer(3), Integer(2));
    return std::array<Mobius, 3>{
        Mobius{half, -half, half, three_halves},
        Mobius{half, half, -half, three_halves},
        Mobius{1, 0, 0, 3},
    };
  }();
  return table;
}

const std::array<Mobius, 3>& inverses() {
  static const std::array<Mobius, 3> table{inverse(matrices()[0]), inverse(matrices()[1]),
                                           inverse(matrices()[2])};
  return table;
}

std::size_t index(Digit digit) { return static_cast<std::size_t>(digit); }

}  // namespace

char to_char(Digit digit) {
  switch (digit) {
    case Digit::L: return 'L';
    case Digit::R: return 'R';
    case Digit::M: return 'M';
  }
  return '?';
}

std::optional<Digit> digit_from_char(char ch) {
  switch (ch) {
    case 'L': return Digit::L;
    case 'R': return Digit::R;
    case 'M': return Digit::M;
    default: return std::nullopt;
  }
}

std::ostream& operator<<(std::ostream& os, Digit digit) { return os << to_char(digit); }

const Mobius& digit_matrix(Digit digit) { return matrices()[index(digit)]; }

const Mobius& digit_inverse(Digit digit) { return inverses()[index(digit)]; }

Rational redundancy() {
  std::optional<Rational> best;
  for (Digit i : kDigits) {
    const Rational left = apply(digit_matrix(i), Rational(-1));
    for (Digit j : kDigits) {
      const Rational right = apply(digit_matrix(j), Rational(1));
      if (left == right) continue;
      const Rational gap = abs(left - right);
      if (!best || gap < *best) best = gap;
    }
  }
  return *best;
}

Digit select_digit(const Rational& q) {
  if (q < Rational(-1) || Rational(1) < q) throw OutOfUnitInterval(q.to_string());
  const Rational third(Integer(1), Integer(3));
  if (abs(q) <= third) return Digit::M;
  return q.sign() < 0 ? Digit::L : Digit::R;
}

}  // namespace lftreal
