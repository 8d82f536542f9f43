#pragma once

#include <array>
#include <iosfwd>
#include <optional>

#include "lftreal/mobius.hpp"
#include "lftreal/rational.hpp"

namespace lftreal {

/// One of the three refining digit maps whose images [-1,0], [0,1] and
/// [-1/3,1/3] cover [-1,1] with overlap.
enum class Digit : unsigned char { L, R, M };

inline constexpr std::array<Digit, 3> kDigits{Digit::L, Digit::R, Digit::M};

char to_char(Digit digit);
std::optional<Digit> digit_from_char(char ch);
std::ostream& operator<<(std::ostream& os, Digit digit);

/// L = ((1/2, -1/2), (1/2, 3/2)), R = ((1/2, 1/2), (-1/2, 3/2)), M = ((1, 0), (0, 3)).
const Mobius& digit_matrix(Digit digit);

/// Adjugate of digit_matrix(digit).
const Mobius& digit_inverse(Digit digit);

/// Minimum nonzero gap |phi_i(-1) - phi_j(1)| over ordered digit pairs,
/// computed from the digit matrices. Equals 1/3.
Rational redundancy();

/// Digit whose image contains q: M when |q| <= 1/3, otherwise L or R by sign.
/// Throws OutOfUnitInterval.
Digit select_digit(const Rational& q);

}  // namespace lftreal
