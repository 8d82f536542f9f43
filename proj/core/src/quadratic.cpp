#include "lftreal/quadratic.hpp"

#include <array>
#include <numeric>

#include "lftreal/errors.hpp"
#include "gallop.hpp"

namespace lftreal {

namespace tensors {

const Tensor& mul() {
  static const Tensor t{1, 0, 0, 0, 0, 0, 0, 1};
  return t;
}

const Tensor& add() {
  static const Tensor t{0, 1, 1, 0, 0, 0, 0, 1};
  return t;
}

const Tensor& div() {
  static const Tensor t{0, 1, 0, 0, 0, 0, 1, 0};
  return t;
}

const Tensor& avg() {
  static const Tensor t{0, 1, 1, 0, 0, 0, 0, 2};
  return t;
}

std::optional<Tensor> by_name(std::string_view name) {
  if (name == "mul") return mul();
  if (name == "add") return add();
  if (name == "div") return div();
  if (name == "avg") return avg();
  return std::nullopt;
}

std::optional<std::string_view> name_of(const Tensor& xi) {
  if (xi == mul()) return "mul";
  if (xi == add()) return "add";
  if (xi == div()) return "div";
  if (xi == avg()) return "avg";
  return std::nullopt;
}

}  // namespace tensors

namespace {

std::optional<Digit> first_emitting(const Tensor& xi) {
  for (Digit d : kDigits) {
    if (emits(xi, digit_matrix(d))) return d;
  }
  return std::nullopt;
}

Tensor absorb(const Tensor& xi, Digit x, Digit y) {
  return compose_right(compose_left(xi, digit_matrix(x)), digit_matrix(y));
}

constexpr std::size_t kMaxJointPeriod = 64;

Mobius product(const std::vector<Digit>& cycle, std::size_t length) {
  Mobius out = Mobius::identity();
  for (std::size_t i = 0; i < length; ++i) out = compose(out, digit_matrix(cycle[i % cycle.size()]));
  return out;
}

// Both streams purely periodic: the joint period and the maps absorbed over it.
struct JointPeriod {
  std::size_t length;
  std::pair<Mobius, Mobius> maps;
};

std::optional<JointPeriod> joint_period(const DigitStream& alpha, const DigitStream& beta) {
  auto a = alpha.period();
  if (!a) return std::nullopt;
  auto b = beta.period();
  if (!b) return std::nullopt;
  const std::size_t length = std::lcm(a->size(), b->size());
  if (length > kMaxJointPeriod) return std::nullopt;
  return JointPeriod{length, {product(*a, length), product(*b, length)}};
}

}  // namespace

Integer q_fuel_bound(const Tensor& xi) {
  if (!is_bounded(xi)) throw NotBounded(xi.to_string());
  const auto& [a, b, c, d, e, f, g, h] = xi;
  const Rational kx = abs(a * g - c * e) + abs(a * h + b * g - c * f - d * e) + abs(b * h - d * f);
  const Rational ky = abs(a * f - b * e) + abs(a * h + c * f - b * g - d * e) + abs(c * h - d * g);
  const std::array<Rational, 4> dens{e + f + g + h, e - f - g + h, -e - f + g + h,
                                     -e + f - g + h};
  Rational dmin = abs(dens[0]);
  for (const auto& v : dens) dmin = min(dmin, abs(v));
  return ceil(Rational(6) * (kx + ky) / (dmin * dmin));
}

Integer q_fuel_limit(const Tensor& xi, const FuelPolicy& policy) {
  const bool applies = policy.mode == FuelPolicy::Mode::analytic && maps_into_unit(xi);
  return policy.limit(applies ? std::optional(q_fuel_bound(xi)) : std::nullopt,
                      kDefaultQuadraticCap);
}

QEmitStep q_step(Tensor xi, DigitStream alpha, DigitStream beta, const FuelPolicy& policy) {
  const Integer limit = q_fuel_limit(xi, policy);
  for (Integer absorbed = 0;; ++absorbed) {
    if (auto d = first_emitting(xi)) {
      return {*d, compose(digit_inverse(*d), xi), std::move(alpha), std::move(beta), absorbed};
    }
    if (absorbed == limit) throw NonProductive(absorbed, xi);
    if (auto joint = joint_period(alpha, beta); joint && limit - absorbed > joint->length) {
      using Maps = std::pair<Mobius, Mobius>;
      const Integer length(joint->length);
      auto [next, periods] = detail::gallop(
          xi, joint->maps, Integer((limit - absorbed) / length),
          [](const Tensor& t, const Maps& m) {
            return compose_right(compose_left(t, m.first), m.second);
          },
          [](const Maps& m) {
            return Maps{compose(m.first, m.first), compose(m.second, m.second)};
          },
          [](const Tensor& t) { return first_emitting(t).has_value(); });
      if (periods > 0) {
        xi = std::move(next);
        absorbed += periods * length - 1;
        continue;
      }
    }
    auto [x, alpha_rest] = alpha.next();
    auto [y, beta_rest] = beta.next();
    xi = absorb(xi, x, y);
    alpha = std::move(alpha_rest);
    beta = std::move(beta_rest);
  }
}

DigitStream quadratic(Tensor xi, DigitStream alpha, DigitStream beta, FuelPolicy policy,
                      EmitObserver observer) {
  return DigitStream::lazy([xi = std::move(xi), alpha = std::move(alpha), beta = std::move(beta),
                            policy,
                            observer = std::move(observer)]() -> std::pair<Digit, DigitStream> {
    QEmitStep step = q_step(xi, alpha, beta, policy);
    if (observer) observer(step.absorbed);
    return {step.emitted, quadratic(std::move(step.next_tensor), std::move(step.rest_left),
                                    std::move(step.rest_right), policy, observer)};
  });
}

bool q_cofixed_check(const Tensor& xi, const DigitStream& alpha, const DigitStream& beta,
                     const FuelPolicy& policy, std::size_t depth) {
  const DigitStream out = quadratic(xi, alpha, beta, policy);
  if (auto d = first_emitting(xi)) {
    const DigitStream expected =
        cons(*d, quadratic(compose(digit_inverse(*d), xi), alpha, beta, policy));
    return bisim_upto(out, expected, depth);
  }
  auto [x, alpha_rest] = alpha.next();
  auto [y, beta_rest] = beta.next();
  return bisim_upto(out, quadratic(absorb(xi, x, y), alpha_rest, beta_rest, policy), depth);
}

}  // namespace lftreal
