#pragma once

#include <cstddef>
#include <string_view>
#include <optional>

#include "lftreal/digit.hpp"
#include "lftreal/fuel.hpp"
#include "lftreal/homographic.hpp"
#include "lftreal/stream.hpp"
#include "lftreal/tensor.hpp"

namespace lftreal {

/// Result of one absorb-until-emit round of the quadratic algorithm. Both
/// inputs advance in lockstep, so `absorbed` digits were taken from each.
struct QEmitStep {
  Digit emitted;
  Tensor next_tensor;
  DigitStream rest_left;
  DigitStream rest_right;
  Integer absorbed;
};

/// Field-operation tensors.
namespace tensors {
/// x * y
const Tensor& mul();
/// x + y; partial on [-1,1]^2
const Tensor& add();
/// x / y; partial, undefined where y = 0
const Tensor& div();
/// (x + y) / 2
const Tensor& avg();

/// Looks up "mul", "add", "div" or "avg".
std::optional<Tensor> by_name(std::string_view name);
/// Inverse of by_name for the four constants, by coefficient equality.
std::optional<std::string_view> name_of(const Tensor& xi);
}  // namespace tensors

/// Absorption count after which a tensor sending the square into [-1,1] is
/// guaranteed to emit:
///   ceil(6 * (Kx + Ky) / Dmin^2)
/// where Dmin is the least corner |denominator| on the unit square and Kx, Ky
/// bound the numerators of the partial derivatives there (sums of absolute
/// coefficients of the quadratics (ay+b)(gy+h) - (cy+d)(ey+f) and
/// (ax+c)(fx+h) - (bx+d)(ex+g)). Throws NotBounded.
Integer q_fuel_bound(const Tensor& xi);

Integer q_fuel_limit(const Tensor& xi, const FuelPolicy& policy);

/// Ordered L, R, M emission tests before each lockstep absorption
/// xi := compose_right(compose_left(xi, hd alpha), hd beta).
/// Throws NonProductive once the fuel limit is reached without emission.
QEmitStep q_step(Tensor xi, DigitStream alpha, DigitStream beta, const FuelPolicy& policy);

DigitStream quadratic(Tensor xi, DigitStream alpha, DigitStream beta, FuelPolicy policy,
                      EmitObserver observer = {});

/// Depth-bounded check of the branch equation selected by the ordered
/// emission tests on xi, as h_cofixed_check does for Möbius maps.
bool q_cofixed_check(const Tensor& xi, const DigitStream& alpha, const DigitStream& beta,
                     const FuelPolicy& policy, std::size_t depth);

}  // namespace lftreal
