#include "lftreal/homographic.hpp"

#include <optional>

#include "lftreal/errors.hpp"
#include "gallop.hpp"

namespace lftreal {

namespace {

std::optional<Digit> first_emitting(const Mobius& mu) {
  for (Digit d : kDigits) {
    if (emits(mu, digit_matrix(d))) return d;
  }
  return std::nullopt;
}

Mobius product(const std::vector<Digit>& digits) {
  Mobius out = Mobius::identity();
  for (Digit d : digits) out = compose(out, digit_matrix(d));
  return out;
}

}  // namespace

Integer h_fuel_bound(const Mobius& mu) {
  if (!is_bounded(mu)) throw NotBounded(mu.to_string());
  const Rational x = max(Rational(1) / abs(mu.c + mu.d), Rational(1) / abs(mu.d - mu.c));
  return ceil(Rational(6) * abs(determinant(mu)) * x * x);
}

Integer h_fuel_limit(const Mobius& mu, const FuelPolicy& policy) {
  const bool applies = policy.mode == FuelPolicy::Mode::analytic && maps_into_unit(mu);
  return policy.limit(applies ? std::optional(h_fuel_bound(mu)) : std::nullopt,
                      kDefaultHomographicCap);
}

EmitStep h_step(Mobius mu, DigitStream alpha, const FuelPolicy& policy) {
  const Integer limit = h_fuel_limit(mu, policy);
  for (Integer absorbed = 0;; ++absorbed) {
    if (auto d = first_emitting(mu)) {
      return {*d, compose(digit_inverse(*d), mu), std::move(alpha), absorbed};
    }
    if (absorbed == limit) throw NonProductive(absorbed, mu);
    // A purely periodic input is unchanged by dropping whole periods, so
    // those can be absorbed in bulk.
    if (auto cycle = alpha.period(); cycle && limit - absorbed > cycle->size()) {
      const Integer length(cycle->size());
      auto [next, periods] = detail::gallop(
          mu, product(*cycle), Integer((limit - absorbed) / length),
          [](const Mobius& m, const Mobius& p) { return compose(m, p); },
          [](const Mobius& p) { return compose(p, p); },
          [](const Mobius& m) { return first_emitting(m).has_value(); });
      if (periods > 0) {
        mu = std::move(next);
        absorbed += periods * length - 1;
        continue;
      }
    }
    auto [x, rest] = alpha.next();
    mu = compose(mu, digit_matrix(x));
    alpha = std::move(rest);
  }
}

DigitStream homographic(Mobius mu, DigitStream alpha, FuelPolicy policy, EmitObserver observer) {
  return DigitStream::lazy([mu = std::move(mu), alpha = std::move(alpha), policy,
                            observer = std::move(observer)]() -> std::pair<Digit, DigitStream> {
    EmitStep step = h_step(mu, alpha, policy);
    if (observer) observer(step.absorbed);
    return {step.emitted,
            homographic(std::move(step.next_map), std::move(step.rest), policy, observer)};
  });
}

bool h_cofixed_check(const Mobius& mu, const DigitStream& alpha, const FuelPolicy& policy,
                     std::size_t depth) {
  const DigitStream out = homographic(mu, alpha, policy);
  if (auto d = first_emitting(mu)) {
    const DigitStream expected =
        cons(*d, homographic(compose(digit_inverse(*d), mu), alpha, policy));
    return bisim_upto(out, expected, depth);
  }
  auto [x, rest] = alpha.next();
  return bisim_upto(out, homographic(compose(mu, digit_matrix(x)), rest, policy), depth);
}

}  // namespace lftreal
