#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lftreal/digit.hpp"

namespace lftreal {

namespace detail {
class StreamNode;
}

/// A lazy, possibly infinite sequence of digits observed by pulling.
///
/// A DigitStream is a cheap handle to an immutable node. Generator nodes
/// compute their head and tail on the first pull and memoize the result, so
/// pulling the same handle again yields the same digit without recomputation.
///
/// Thread safety: handles may be copied and sent between threads. Concurrent
/// pulls on the same node are serialized by a per-node mutex; the first puller
/// runs the computation and later pullers observe the memoized result. A pull
/// that throws leaves the node unevaluated, and the next pull retries.
class DigitStream {
 public:
  /// Produces the head digit and the remaining stream. Called at most once per
  /// successful evaluation.
  using Thunk = std::function<std::pair<Digit, DigitStream>()>;

  /// A default-constructed stream is the constant stream M M M ..., which
  /// denotes 0.
  DigitStream();

  /// Generator stream evaluated on first pull.
  static DigitStream lazy(Thunk thunk);

  std::pair<Digit, DigitStream> next() const;
  Digit head() const { return next().first; }
  DigitStream tail() const { return next().second; }

  std::vector<Digit> take(std::size_t n) const;
  DigitStream drop(std::size_t n) const;

  /// One period of the digits from here on if this handle is known to be
  /// purely periodic, as for a literal already inside its cycle.
  std::optional<std::vector<Digit>> period() const;

  /// True iff both handles refer to the same node.
  bool same_node(const DigitStream& other) const { return node_ == other.node_; }

 private:
  friend class detail::StreamNode;
  friend DigitStream cons(Digit head, DigitStream tail);
  friend DigitStream literal(std::vector<Digit> prefix, std::vector<Digit> cycle);

  explicit DigitStream(std::shared_ptr<detail::StreamNode> node) : node_(std::move(node)) {}

  std::shared_ptr<detail::StreamNode> node_;
};

DigitStream cons(Digit head, DigitStream tail);

/// Eventually periodic stream prefix ++ cycle ++ cycle ++ ...
/// Throws std::invalid_argument when cycle is empty.
DigitStream literal(std::vector<Digit> prefix, std::vector<Digit> cycle);

DigitStream repeat(Digit digit);

/// Digits of an eventually periodic stream, prefix ++ cycle ++ cycle ++ ...
struct LiteralDigits {
  std::vector<Digit> prefix;
  std::vector<Digit> cycle;

  bool operator==(const LiteralDigits&) const = default;
};

/// Parses PREFIX [ '(' CYCLE ')*' ] over {L, R, M}, for example "LR(M)*" or
/// "(LR)*". The cycle is required and must be nonempty. Throws ParseError at
/// the offending offset.
LiteralDigits parse_literal(std::string_view text);
DigitStream parse_stream(std::string_view text);

/// Builds the stream s0.head, s1.head, ... with (head, s_{i+1}) = step(s_i).
template <class State, class Step>
DigitStream unfold(State state, Step step) {
  return DigitStream::lazy([state = std::move(state), step]() -> std::pair<Digit, DigitStream> {
    auto [digit, next_state] = step(state);
    return {digit, unfold(std::move(next_state), step)};
  });
}

/// Agreement on the first k digits.
bool bisim_upto(const DigitStream& lhs, const DigitStream& rhs, std::size_t k);

std::string to_string(std::span<const Digit> digits);

}  // namespace lftreal
