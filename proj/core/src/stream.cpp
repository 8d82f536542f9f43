#include "lftreal/stream.hpp"

#include <mutex>
#include <optional>
#include <stdexcept>

#include "lftreal/errors.hpp"

namespace lftreal {

namespace detail {

class StreamNode {
 public:
  virtual ~StreamNode() = default;

  virtual std::pair<Digit, DigitStream> next() = 0;

  /// Constant-time drop when the node supports it.
  virtual std::optional<DigitStream> skip(std::size_t /*n*/) { return std::nullopt; }

  virtual std::optional<std::vector<Digit>> period() const { return std::nullopt; }

 protected:
  static const std::shared_ptr<StreamNode>& node_of(const DigitStream& s) { return s.node_; }
  static DigitStream wrap(std::shared_ptr<StreamNode> node) { return DigitStream(std::move(node)); }

  /// Moves the memoized tail out of this node, leaving it empty.
  virtual DigitStream detach_tail() { return DigitStream(std::shared_ptr<StreamNode>()); }

  /// Releases a chain of uniquely owned evaluated nodes without recursing
  /// through their destructors.
  static void release_chain(DigitStream tail) {
    while (tail.node_ && tail.node_.use_count() == 1) {
      DigitStream after = tail.node_->detach_tail();
      tail = std::move(after);
    }
  }
};

namespace {

struct LiteralData {
  std::vector<Digit> prefix;
  std::vector<Digit> cycle;
};

class LiteralNode final : public StreamNode {
 public:
  LiteralNode(std::shared_ptr<const LiteralData> data, std::size_t pos)
      : data_(std::move(data)), pos_(pos) {}

  std::pair<Digit, DigitStream> next() override {
    return {at(pos_), wrap(std::make_shared<LiteralNode>(data_, normalize(pos_ + 1)))};
  }

  std::optional<DigitStream> skip(std::size_t n) override {
    return wrap(std::make_shared<LiteralNode>(data_, normalize(pos_ + n)));
  }

  std::optional<std::vector<Digit>> period() const override {
    const std::size_t p = data_->prefix.size();
    if (pos_ < p) return std::nullopt;
    const auto& cycle = data_->cycle;
    std::vector<Digit> out(cycle.begin() + (pos_ - p), cycle.end());
    out.insert(out.end(), cycle.begin(), cycle.begin() + (pos_ - p));
    return out;
  }

 private:
  Digit at(std::size_t pos) const {
    return pos < data_->prefix.size() ? data_->prefix[pos]
                                      : data_->cycle[pos - data_->prefix.size()];
  }

  // Positions inside the cycle are kept in [prefix, prefix + cycle).
  std::size_t normalize(std::size_t pos) const {
    const std::size_t p = data_->prefix.size();
    return pos < p ? pos : p + (pos - p) % data_->cycle.size();
  }

  std::shared_ptr<const LiteralData> data_;
  std::size_t pos_;
};

class ConsNode final : public StreamNode {
 public:
  ConsNode(Digit head, DigitStream tail) : head_(head), tail_(std::move(tail)) {}
  ~ConsNode() override { release_chain(std::move(tail_)); }

  std::pair<Digit, DigitStream> next() override { return {head_, tail_}; }

 protected:
  DigitStream detach_tail() override { return std::move(tail_); }

 private:
  Digit head_;
  DigitStream tail_;
};

class LazyNode final : public StreamNode {
 public:
  explicit LazyNode(DigitStream::Thunk thunk) : thunk_(std::move(thunk)) {}
  ~LazyNode() override {
    if (tail_) release_chain(std::move(*tail_));
  }

  std::pair<Digit, DigitStream> next() override {
    std::lock_guard<std::mutex> lock(mutex_);
    if (!tail_) {
      auto [digit, rest] = thunk_();
      head_ = digit;
      tail_.emplace(std::move(rest));
      thunk_ = nullptr;
    }
    return {head_, *tail_};
  }

 protected:
  DigitStream detach_tail() override {
    if (!tail_) return wrap(nullptr);
    DigitStream out = std::move(*tail_);
    tail_.reset();
    return out;
  }

 private:
  std::mutex mutex_;
  DigitStream::Thunk thunk_;
  Digit head_ = Digit::M;
  std::optional<DigitStream> tail_;
};

}  // namespace
}  // namespace detail

DigitStream::DigitStream() : DigitStream(repeat(Digit::M)) {}

DigitStream DigitStream::lazy(Thunk thunk) {
  return DigitStream(std::make_shared<detail::LazyNode>(std::move(thunk)));
}

std::pair<Digit, DigitStream> DigitStream::next() const { return node_->next(); }

std::optional<std::vector<Digit>> DigitStream::period() const { return node_->period(); }

std::vector<Digit> DigitStream::take(std::size_t n) const {
  std::vector<Digit> out;
  out.reserve(n);
  DigitStream cur = *this;
  for (std::size_t i = 0; i < n; ++i) {
    auto [digit, rest] = cur.next();
    out.push_back(digit);
    cur = std::move(rest);
  }
  return out;
}

DigitStream DigitStream::drop(std::size_t n) const {
  if (n == 0) return *this;
  if (auto fast = node_->skip(n)) return *fast;
  DigitStream cur = *this;
  for (std::size_t i = 0; i < n; ++i) cur = cur.tail();
  return cur;
}

DigitStream cons(Digit head, DigitStream tail) {
  return DigitStream(std::make_shared<detail::ConsNode>(head, std::move(tail)));
}

DigitStream literal(std::vector<Digit> prefix, std::vector<Digit> cycle) {
  if (cycle.empty()) throw std::invalid_argument("literal stream needs a nonempty cycle");
  auto data = std::make_shared<const detail::LiteralData>(
      detail::LiteralData{std::move(prefix), std::move(cycle)});
  return DigitStream(std::make_shared<detail::LiteralNode>(std::move(data), 0));
}

DigitStream repeat(Digit digit) { return literal({}, {digit}); }

LiteralDigits parse_literal(std::string_view text) {
  std::vector<Digit> prefix;
  std::vector<Digit> cycle;
  std::size_t pos = 0;
  for (; pos < text.size() && text[pos] != '('; ++pos) {
    auto digit = digit_from_char(text[pos]);
    if (!digit) throw ParseError(pos, "expected digit L, R or M or '('");
    prefix.push_back(*digit);
  }
  if (pos == text.size()) throw ParseError(pos, "expected '(' starting the repeating cycle");
  ++pos;
  for (; pos < text.size() && text[pos] != ')'; ++pos) {
    auto digit = digit_from_char(text[pos]);
    if (!digit) throw ParseError(pos, "expected digit L, R or M or ')'");
    cycle.push_back(*digit);
  }
  if (pos == text.size()) throw ParseError(pos, "expected ')*' closing the cycle");
  if (cycle.empty()) throw ParseError(pos, "cycle must not be empty");
  ++pos;
  if (pos == text.size() || text[pos] != '*') throw ParseError(pos, "expected '*' after cycle");
  ++pos;
  if (pos != text.size()) throw ParseError(pos, "trailing characters after cycle");
  return {std::move(prefix), std::move(cycle)};
}

DigitStream parse_stream(std::string_view text) {
  LiteralDigits parts = parse_literal(text);
  return literal(std::move(parts.prefix), std::move(parts.cycle));
}

bool bisim_upto(const DigitStream& lhs, const DigitStream& rhs, std::size_t k) {
  DigitStream a = lhs;
  DigitStream b = rhs;
  for (std::size_t i = 0; i < k; ++i) {
    if (a.same_node(b)) return true;
    auto [x, a_rest] = a.next();
    auto [y, b_rest] = b.next();
    if (x != y) return false;
    a = std::move(a_rest);
    b = std::move(b_rest);
  }
  return true;
}

std::string to_string(std::span<const Digit> digits) {
  std::string out;
  out.reserve(digits.size());
  for (Digit d : digits) out.push_back(to_char(d));
  return out;
}

}  // namespace lftreal
