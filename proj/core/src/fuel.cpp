#include "lftreal/fuel.hpp"

#include <algorithm>
#include <stdexcept>

namespace lftreal {

namespace {

std::string describe(const NonProductive::State& state) {
  std::string text = std::visit([](const auto& map) { return map.to_string(); }, state);
  constexpr std::size_t kMaxLength = 240;
  if (text.size() > kMaxLength) text = text.substr(0, kMaxLength) + "...";
  return text;
}

}  // namespace

FuelPolicy FuelPolicy::analytic() { return {Mode::analytic, std::nullopt}; }

FuelPolicy FuelPolicy::analytic(std::size_t cap) {
  if (cap == 0) throw std::invalid_argument("fuel cap must be at least 1");
  return {Mode::analytic, cap};
}

FuelPolicy FuelPolicy::capped(std::size_t cap) {
  if (cap == 0) throw std::invalid_argument("fuel cap must be at least 1");
  return {Mode::capped, cap};
}

Integer FuelPolicy::limit(const std::optional<Integer>& bound, std::size_t default_cap) const {
  if (mode == Mode::analytic && bound) {
    return cap ? std::min(*bound, Integer(*cap)) : *bound;
  }
  return Integer(cap.value_or(default_cap));
}

NonProductive::NonProductive(Integer absorbed, State state)
    : Error("no digit emitted after absorbing " + absorbed.get_str() +
            " digits; current map " + describe(state)),
      absorbed_(std::move(absorbed)),
      state_(std::move(state)) {}

}  // namespace lftreal
