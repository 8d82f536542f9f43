#pragma once

#include <utility>
#include <vector>

#include "lftreal/rational.hpp"

namespace lftreal::detail {

// Given that fits(state) is false and fits is monotone along
// state, apply(state, step), apply(apply(state, step), step), ..., returns the
// largest t <= max_steps such that fits fails after t steps, together with
// the state reached. Uses O(log t) applications of repeated squares of step.
template <class State, class Step, class Apply, class Square, class Fits>
std::pair<State, Integer> gallop(State state, Step step, const Integer& max_steps, Apply apply,
                                 Square square, Fits fits) {
  std::vector<Step> powers{std::move(step)};
  Integer taken = 0;
  Integer stride = 1;
  for (;;) {
    if (max_steps - taken < stride) break;
    State candidate = apply(state, powers.back());
    if (fits(candidate)) break;
    state = std::move(candidate);
    taken += stride;
    powers.push_back(square(powers.back()));
    stride *= 2;
  }
  while (powers.size() > 1) {
    powers.pop_back();
    stride /= 2;
    if (max_steps - taken < stride) continue;
    State candidate = apply(state, powers.back());
    if (fits(candidate)) continue;
    state = std::move(candidate);
    taken += stride;
  }
  return {std::move(state), taken};
}

}  // namespace lftreal::detail
