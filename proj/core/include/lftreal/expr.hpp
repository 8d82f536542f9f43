#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "lftreal/fuel.hpp"
#include "lftreal/mobius.hpp"
#include "lftreal/rational.hpp"
#include "lftreal/reals.hpp"
#include "lftreal/stream.hpp"
#include "lftreal/tensor.hpp"

namespace lftreal {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct EncodeExpr {
  Rational value;
};

struct StreamExpr {
  LiteralDigits digits;
};

struct HomExpr {
  Mobius map;
  ExprPtr arg;
};

struct QuadExpr {
  Tensor tensor;
  ExprPtr left;
  ExprPtr right;
};

/// Expression over exact reals in [-1,1]. Children are never null.
struct Expr {
  std::variant<EncodeExpr, StreamExpr, HomExpr, QuadExpr> node;
};

/// Structural equality through children.
bool operator==(const Expr& lhs, const Expr& rhs);

ExprPtr make_encode(Rational value);
ExprPtr make_stream(LiteralDigits digits);
ExprPtr make_hom(Mobius map, ExprPtr arg);
ExprPtr make_quad(Tensor tensor, ExprPtr left, ExprPtr right);

/// Grammar, with ';' between arguments and ',' between coefficients:
///
///   expr   := enc(RAT) | "LITERAL" | hom(MAP; expr) | neg(expr)
///           | quad(TENSOR; expr; expr) | mul(expr; expr) | add(expr; expr)
///           | div(expr; expr) | avg(expr; expr)
///   MAP    := RAT,RAT,RAT,RAT | mobius(RAT,RAT,RAT,RAT)
///   TENSOR := mul | add | div | avg | 8 comma-separated RATs | tensor(...)
///
/// LITERAL is a stream literal such as LR(M)*. neg(e) becomes
/// hom(-1,0,0,1; e). Throws ParseError with the offset and what was expected.
ExprPtr parse_expr(std::string_view text);

/// Canonical text accepted by parse_expr. Named tensors print by name.
std::string print_expr(const Expr& expr);

enum class OutputFormat { digits, decimal, interval, all };

std::optional<OutputFormat> parse_format(std::string_view name);

struct RunConfig {
  /// Exactly one of digits or precision is set.
  std::optional<std::size_t> digits;
  std::optional<Rational> precision;
  FuelPolicy::Mode fuel_mode = FuelPolicy::Mode::analytic;
  /// Applies to every transformer when set; otherwise each algorithm uses its
  /// default cap.
  std::optional<std::size_t> fuel_cap;
  OutputFormat format = OutputFormat::all;

  /// Throws std::invalid_argument when the config is not well formed.
  void validate() const;
};

struct EvalReport {
  std::string digits;
  Approximation approx;
  Integer total_absorbed = 0;
  Integer max_absorbed = 0;
};

/// Pulls the requested digits. A NonProductive raised anywhere in the tree
/// carries the printed subexpression whose transformer ran out of fuel as its
/// context.
EvalReport eval(const Expr& expr, const RunConfig& cfg);

/// Lines printed for the requested format. Ends with a newline.
std::string format_report(const EvalReport& report, OutputFormat format);

}  // namespace lftreal
