#pragma once

#include <cstddef>
#include <functional>

#include "lftreal/digit.hpp"
#include "lftreal/fuel.hpp"
#include "lftreal/mobius.hpp"
#include "lftreal/stream.hpp"

namespace lftreal {

/// Result of one absorb-until-emit round of the homographic algorithm.
///
/// If the round started from (mu, alpha) then
///   next_map = digit_inverse(emitted) ∘ mu ∘ alpha_0 ∘ ... ∘ alpha_{absorbed-1}
///   rest     = alpha with the first `absorbed` digits dropped
/// and the pre-emission map passed the emission test for `emitted`.
struct EmitStep {
  Digit emitted;
  Mobius next_map;
  DigitStream rest;
  Integer absorbed;
};

/// ceil(6 * |det mu| * X^2) with X = max(1/|c+d|, 1/|d-c|): after this many
/// absorptions a map sending [-1,1] into itself has image diameter below 1/3,
/// so some digit accepts it. Throws NotBounded.
Integer h_fuel_bound(const Mobius& mu);

/// Absorption limit for one emission starting from `mu`.
Integer h_fuel_limit(const Mobius& mu, const FuelPolicy& policy);

/// Tests L, R, M in that order before every absorption, so the returned
/// `absorbed` is the least count at which any digit can be emitted.
/// Throws NonProductive once the fuel limit is reached without emission.
EmitStep h_step(Mobius mu, DigitStream alpha, const FuelPolicy& policy);

/// Called with the absorption count of every emission.
using EmitObserver = std::function<void(const Integer& absorbed)>;

/// Lazy output stream of repeated h_step rounds; each pull runs one round and
/// rethrows its NonProductive.
DigitStream homographic(Mobius mu, DigitStream alpha, FuelPolicy policy,
                        EmitObserver observer = {});

/// Checks to `depth` digits that homographic(mu, alpha) satisfies the
/// branch equation selected by the ordered emission tests on mu:
///   emits(mu, d) for the first such d  =>  out ≅ d :: homographic(d⁻¹ ∘ mu, alpha)
///   no digit emits                    =>  out ≅ homographic(mu ∘ hd alpha, tl alpha)
bool h_cofixed_check(const Mobius& mu, const DigitStream& alpha, const FuelPolicy& policy,
                     std::size_t depth);

}  // namespace lftreal
