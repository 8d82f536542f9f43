#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>

#include "lftreal/errors.hpp"
#include "lftreal/mobius.hpp"
#include "lftreal/rational.hpp"
#include "lftreal/tensor.hpp"

namespace lftreal {

/// Per-emission absorption limits for the homographic and quadratic
/// transformers.
///
/// In capped mode every emission may absorb at most `cap` digits. In analytic
/// mode the limit is the closed-form productivity bound of the current map
/// when that map sends [-1,1] (or the square) into [-1,1], clipped to `cap`
/// if one is set; maps outside that class fall back to `cap`, or to the
/// algorithm's default cap when there is none.
struct FuelPolicy {
  enum class Mode { analytic, capped };

  Mode mode = Mode::capped;
  std::optional<std::size_t> cap = 1;

  /// Productivity bound only, with no ceiling.
  static FuelPolicy analytic();
  /// Throws std::invalid_argument when cap is zero.
  static FuelPolicy analytic(std::size_t cap);
  static FuelPolicy capped(std::size_t cap);

  /// Limit for a map whose productivity bound is `bound` (nullopt when the
  /// bound does not apply).
  Integer limit(const std::optional<Integer>& bound, std::size_t default_cap) const;
};

inline constexpr std::size_t kDefaultHomographicCap = 1'000'000;
inline constexpr std::size_t kDefaultQuadraticCap = 10'000;

/// An emission search ran out of fuel. Carries the number of digits absorbed
/// and the map reached at that point. `context` is free-form text that callers
/// may attach while the exception propagates (empty until then).
class NonProductive : public Error {
 public:
  using State = std::variant<Mobius, Tensor>;

  NonProductive(Integer absorbed, State state);

  const Integer& absorbed() const noexcept { return absorbed_; }
  const State& state() const noexcept { return state_; }

  const std::string& context() const noexcept { return context_; }
  void set_context(std::string context) { context_ = std::move(context); }

 private:
  Integer absorbed_;
  State state_;
  std::string context_;
};

}  // namespace lftreal
