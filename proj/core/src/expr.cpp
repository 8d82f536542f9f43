#include "lftreal/expr.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lftreal/errors.hpp"
#include "lftreal/homographic.hpp"
#include "lftreal/quadratic.hpp"

namespace lftreal {

namespace {

bool children_equal(const ExprPtr& lhs, const ExprPtr& rhs) {
  return lhs == rhs || (lhs && rhs && *lhs == *rhs);
}

}  // namespace

bool operator==(const Expr& lhs, const Expr& rhs) {
  if (lhs.node.index() != rhs.node.index()) return false;
  return std::visit(
      [&](const auto& l) -> bool {
        using T = std::decay_t<decltype(l)>;
        const T& r = std::get<T>(rhs.node);
        if constexpr (std::is_same_v<T, EncodeExpr>) {
          return l.value == r.value;
        } else if constexpr (std::is_same_v<T, StreamExpr>) {
          return l.digits == r.digits;
        } else if constexpr (std::is_same_v<T, HomExpr>) {
          return l.map == r.map && children_equal(l.arg, r.arg);
        } else {
          return l.tensor == r.tensor && children_equal(l.left, r.left) &&
                 children_equal(l.right, r.right);
        }
      },
      lhs.node);
}

ExprPtr make_encode(Rational value) {
  return std::make_shared<const Expr>(Expr{EncodeExpr{std::move(value)}});
}

ExprPtr make_stream(LiteralDigits digits) {
  if (digits.cycle.empty()) throw std::invalid_argument("stream literal needs a nonempty cycle");
  return std::make_shared<const Expr>(Expr{StreamExpr{std::move(digits)}});
}

ExprPtr make_hom(Mobius map, ExprPtr arg) {
  if (!arg) throw std::invalid_argument("null subexpression");
  return std::make_shared<const Expr>(Expr{HomExpr{std::move(map), std::move(arg)}});
}

ExprPtr make_quad(Tensor tensor, ExprPtr left, ExprPtr right) {
  if (!left || !right) throw std::invalid_argument("null subexpression");
  return std::make_shared<const Expr>(
      Expr{QuadExpr{std::move(tensor), std::move(left), std::move(right)}});
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr parse_all() {
    ExprPtr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("expected end of input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) const {
    if (pos_ >= text_.size()) {
      std::string message = "unexpected end of input, " + expected;
      if (depth_ > 0) message += " (unbalanced parentheses)";
      throw ParseError(pos_, message);
    }
    throw ParseError(pos_, expected + ", found '" + std::string(1, text_[pos_]) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
    if (c == '(') ++depth_;
    if (c == ')') --depth_;
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Rational rational() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-' ||
            text_[pos_] == '/')) {
      ++pos_;
    }
    if (pos_ == start) fail("expected a rational p or p/q");
    try {
      return Rational::parse(text_.substr(start, pos_ - start));
    } catch (const ParseError& e) {
      throw ParseError(start + e.offset(), "malformed rational");
    }
  }

  std::vector<Rational> coefficients(std::size_t count) {
    std::vector<Rational> out;
    for (std::size_t i = 0; i < count; ++i) {
      if (i > 0) expect(',');
      out.push_back(rational());
    }
    return out;
  }

  // Either bare coefficients or the wrapped form name(...), e.g. mobius(1,0,0,1).
  std::vector<Rational> matrix_literal(std::string_view wrapper, std::size_t count) {
    const std::size_t save = pos_;
    if (identifier() == wrapper) {
      expect('(');
      auto out = coefficients(count);
      expect(')');
      return out;
    }
    pos_ = save;
    return coefficients(count);
  }

  Mobius mobius_literal() {
    auto c = matrix_literal("mobius", 4);
    return {c[0], c[1], c[2], c[3]};
  }

  Tensor tensor_literal() {
    const std::size_t save = pos_;
    const std::string name = identifier();
    if (auto named = tensors::by_name(name)) return *named;
    pos_ = save;
    auto c = matrix_literal("tensor", 8);
    return {c[0], c[1], c[2], c[3], c[4], c[5], c[6], c[7]};
  }

  ExprPtr stream_literal() {
    const std::size_t start = ++pos_;
    const std::size_t close = text_.find('"', start);
    if (close == std::string_view::npos) {
      pos_ = text_.size();
      fail("expected closing '\"' of the stream literal");
    }
    try {
      LiteralDigits digits = parse_literal(text_.substr(start, close - start));
      pos_ = close + 1;
      return make_stream(std::move(digits));
    } catch (const ParseError& e) {
      throw ParseError(start + e.offset(), "malformed stream literal");
    }
  }

  ExprPtr expr() {
    skip_space();
    if (peek('"')) return stream_literal();
    const std::size_t start = pos_;
    const std::string name = identifier();
    if (name.empty()) fail("expected an expression");

    if (name == "enc") {
      expect('(');
      Rational value = rational();
      expect(')');
      return make_encode(std::move(value));
    }
    if (name == "hom") {
      expect('(');
      Mobius map = mobius_literal();
      expect(';');
      ExprPtr arg = expr();
      expect(')');
      return make_hom(std::move(map), std::move(arg));
    }
    if (name == "neg") {
      expect('(');
      ExprPtr arg = expr();
      expect(')');
      return make_hom(Mobius{-1, 0, 0, 1}, std::move(arg));
    }
    if (name == "quad") {
      expect('(');
      Tensor tensor = tensor_literal();
      expect(';');
      ExprPtr left = expr();
      expect(';');
      ExprPtr right = expr();
      expect(')');
      return make_quad(std::move(tensor), std::move(left), std::move(right));
    }
    if (auto named = tensors::by_name(name)) {
      expect('(');
      ExprPtr left = expr();
      expect(';');
      ExprPtr right = expr();
      expect(')');
      return make_quad(*named, std::move(left), std::move(right));
    }
    pos_ = start;
    fail("expected enc, hom, neg, quad, mul, add, div, avg or a quoted stream literal");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

std::string join(std::initializer_list<const Rational*> values) {
  std::string out;
  for (const Rational* v : values) {
    if (!out.empty()) out += ',';
    out += v->to_string();
  }
  return out;
}

std::string literal_text(const LiteralDigits& digits) {
  return to_string(digits.prefix) + "(" + to_string(digits.cycle) + ")*";
}

}  // namespace

ExprPtr parse_expr(std::string_view text) { return Parser(text).parse_all(); }

std::string print_expr(const Expr& expr) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, EncodeExpr>) {
          return "enc(" + n.value.to_string() + ")";
        } else if constexpr (std::is_same_v<T, StreamExpr>) {
          return "\"" + literal_text(n.digits) + "\"";
        } else if constexpr (std::is_same_v<T, HomExpr>) {
          const Mobius& m = n.map;
          return "hom(" + join({&m.a, &m.b, &m.c, &m.d}) + "; " + print_expr(*n.arg) + ")";
        } else {
          const Tensor& t = n.tensor;
          const auto name = tensors::name_of(t);
          const std::string args = print_expr(*n.left) + "; " + print_expr(*n.right) + ")";
          if (name) return std::string(*name) + "(" + args;
          return "quad(" + join({&t.a, &t.b, &t.c, &t.d, &t.e, &t.f, &t.g, &t.h}) + "; " + args;
        }
      },
      expr.node);
}

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "digits") return OutputFormat::digits;
  if (name == "decimal") return OutputFormat::decimal;
  if (name == "interval") return OutputFormat::interval;
  if (name == "all") return OutputFormat::all;
  return std::nullopt;
}

void RunConfig::validate() const {
  if (digits.has_value() == precision.has_value()) {
    throw std::invalid_argument("exactly one of digits and precision must be set");
  }
  if (precision && precision->sign() <= 0) throw std::invalid_argument("precision must be positive");
  if (fuel_cap && *fuel_cap == 0) throw std::invalid_argument("fuel cap must be at least 1");
}

namespace {

struct Stats {
  Integer total = 0;
  Integer max = 0;
};

// Attaches `context` to a NonProductive escaping a pull, unless a deeper
// subexpression already claimed it.
DigitStream tagged(DigitStream inner, std::shared_ptr<const std::string> context) {
  return DigitStream::lazy([inner = std::move(inner),
                            context = std::move(context)]() -> std::pair<Digit, DigitStream> {
    try {
      auto [digit, rest] = inner.next();
      return {digit, tagged(std::move(rest), context)};
    } catch (NonProductive& e) {
      if (e.context().empty()) e.set_context(*context);
      throw;
    }
  });
}

class Builder {
 public:
  Builder(const RunConfig& cfg, std::shared_ptr<Stats> stats)
      : cfg_(cfg), stats_(std::move(stats)) {}

  DigitStream build(const Expr& expr) const {
    return std::visit(
        [&](const auto& n) -> DigitStream {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, EncodeExpr>) {
            return encode(n.value);
          } else if constexpr (std::is_same_v<T, StreamExpr>) {
            return literal(n.digits.prefix, n.digits.cycle);
          } else if constexpr (std::is_same_v<T, HomExpr>) {
            DigitStream out = homographic(n.map, build(*n.arg),
                                          policy(kDefaultHomographicCap), observer());
            return tagged(std::move(out), context(expr));
          } else {
            DigitStream out = quadratic(n.tensor, build(*n.left), build(*n.right),
                                        policy(kDefaultQuadraticCap), observer());
            return tagged(std::move(out), context(expr));
          }
        },
        expr.node);
  }

 private:
  FuelPolicy policy(std::size_t default_cap) const {
    const std::size_t cap = cfg_.fuel_cap.value_or(default_cap);
    return cfg_.fuel_mode == FuelPolicy::Mode::analytic ? FuelPolicy::analytic(cap)
                                                         : FuelPolicy::capped(cap);
  }

  EmitObserver observer() const {
    return [stats = stats_](const Integer& absorbed) {
      stats->total += absorbed;
      if (stats->max < absorbed) stats->max = absorbed;
    };
  }

  static std::shared_ptr<const std::string> context(const Expr& expr) {
    return std::make_shared<const std::string>(print_expr(expr));
  }

  const RunConfig& cfg_;
  std::shared_ptr<Stats> stats_;
};

}  // namespace

EvalReport eval(const Expr& expr, const RunConfig& cfg) {
  cfg.validate();
  auto stats = std::make_shared<Stats>();
  const DigitStream out = Builder(cfg, stats).build(expr);
  const std::size_t k = cfg.digits ? *cfg.digits : depth_for(*cfg.precision);

  EvalReport report{to_string(out.take(k)), decode_approx(out, k), 0, 0};
  report.total_absorbed = stats->total;
  report.max_absorbed = stats->max;
  return report;
}

std::string format_report(const EvalReport& report, OutputFormat format) {
  const std::string interval = report.approx.bounds.to_string();
  const std::string decimal = render_decimal(report.approx);
  switch (format) {
    case OutputFormat::digits:
      return report.digits + "\n";
    case OutputFormat::decimal:
      return decimal + "\n";
    case OutputFormat::interval:
      return interval + "\n";
    case OutputFormat::all:
      break;
  }
  return "digits:   " + report.digits + "\n" + "interval: " + interval + "\n" +
         "decimal:  " + decimal + "\n" + "absorbed: total " + report.total_absorbed.get_str() +
         ", max per emission " + report.max_absorbed.get_str() + "\n";
}

}  // namespace lftreal
