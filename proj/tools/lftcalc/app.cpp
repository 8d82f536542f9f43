#include "app.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

#include "lftreal/errors.hpp"
#include "lftreal/expr.hpp"
#include "lftreal/fuel.hpp"

namespace lftcalc {

namespace {

constexpr std::size_t kDefaultDigits = 30;

struct Options {
  std::string expression;
  std::optional<std::size_t> digits;
  std::optional<std::string> precision;
  std::optional<std::size_t> fuel_cap;
  std::string fuel_mode = "analytic";
  std::string format = "all";
};

void configure(CLI::App& app, Options& opts) {
  app.add_option("expression", opts.expression,
                 "Expression to evaluate, or - to read it from standard input")
      ->required();
  auto* digits = app.add_option("--digits", opts.digits, "Number of output digits to emit");
  app.add_option("--prec", opts.precision, "Enclosure width target P/Q")->excludes(digits);
  app.add_option("--fuel-cap", opts.fuel_cap, "Absorption cap per emission")
      ->check(CLI::PositiveNumber);
  app.add_option("--fuel-mode", opts.fuel_mode, "analytic or capped")
      ->check(CLI::IsMember({"analytic", "capped"}));
  app.add_option("--format", opts.format, "digits, decimal, interval or all")
      ->check(CLI::IsMember({"digits", "decimal", "interval", "all"}));
}

lftreal::RunConfig to_config(const Options& opts) {
  lftreal::RunConfig cfg;
  if (opts.precision) {
    cfg.precision = lftreal::Rational::parse(*opts.precision);
  } else {
    cfg.digits = opts.digits.value_or(kDefaultDigits);
  }
  cfg.fuel_mode = opts.fuel_mode == "capped" ? lftreal::FuelPolicy::Mode::capped
                                             : lftreal::FuelPolicy::Mode::analytic;
  cfg.fuel_cap = opts.fuel_cap;
  cfg.format = *lftreal::parse_format(opts.format);
  cfg.validate();
  return cfg;
}

}  // namespace

int run_app(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact real arithmetic on [-1,1] with lazy digit streams", "lftcalc"};
  Options opts;
  configure(app, opts);
  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  std::string text = opts.expression;
  if (text == "-") text.assign(std::istreambuf_iterator<char>(in), {});

  try {
    const lftreal::RunConfig cfg = to_config(opts);
    const lftreal::ExprPtr expr = lftreal::parse_expr(text);
    const lftreal::EvalReport report = lftreal::eval(*expr, cfg);
    out << lftreal::format_report(report, cfg.format);
    return kExitOk;
  } catch (const lftreal::ParseError& e) {
    err << "lftcalc: " << e.what() << "\n";
    return kExitInput;
  } catch (const lftreal::NonProductive& e) {
    err << "lftcalc: non-productive";
    if (!e.context().empty()) err << " in " << e.context();
    err << ": no digit after " << e.absorbed() << " absorptions\n";
    return kExitNonProductive;
  } catch (const lftreal::OutOfUnitInterval& e) {
    err << "lftcalc: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "lftcalc: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "lftcalc: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace lftcalc
