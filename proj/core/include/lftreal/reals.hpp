#pragma once

#include <cstddef>
#include <string>

#include "lftreal/interval.hpp"
#include "lftreal/rational.hpp"
#include "lftreal/stream.hpp"

namespace lftreal {

/// Certified enclosure of the real denoted by a stream after `depth` digits.
/// Width is at most 2 / (depth + 1) and bounds lie inside [-1,1].
struct Approximation {
  Interval bounds;
  std::size_t depth;
};

/// Image of [-1,1] under alpha_0 ∘ ... ∘ alpha_{k-1}; [-1,1] for k = 0.
Interval bounds_at(const DigitStream& alpha, std::size_t k);

Approximation decode_approx(const DigitStream& alpha, std::size_t k);

/// Least depth k with 2 / (k + 1) <= eps. Throws std::invalid_argument unless
/// eps > 0.
std::size_t depth_for(const Rational& eps);

Approximation decode_to_eps(const DigitStream& alpha, const Rational& eps);

/// Deterministic digit expansion of q via select_digit. Once the orbit hits a
/// fixed point the tail is a periodic literal. Throws OutOfUnitInterval.
DigitStream encode(const Rational& q);

enum class Separation { less, greater, overlapping };

/// Decodes both streams to eps / 2 and reports whether the enclosures are
/// strictly ordered.
Separation compare_to_eps(const DigitStream& lhs, const DigitStream& rhs, const Rational& eps);

/// Midpoint with an explicit upper bound on its distance to every point of
/// the enclosure, e.g. "0.333333 ± 1.7e-2 (k=60)". The bound includes the
/// decimal rounding of the midpoint.
std::string render_decimal(const Approximation& approx);

}  // namespace lftreal
