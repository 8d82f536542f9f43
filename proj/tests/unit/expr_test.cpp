#include <gtest/gtest.h>

#include <sstream>

#include "app.hpp"
#include "generators.hpp"
#include "lftreal/errors.hpp"
#include "lftreal/expr.hpp"
#include "lftreal/quadratic.hpp"

using namespace lftreal;

namespace {

Rational q(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = lftcalc::run_app(args, in, out, err);
  return {code, out.str(), err.str()};
}

ExprPtr random_expr(gen::Rng& rng, int depth) {
  const long pick = gen::uniform(rng, 0, depth > 0 ? 4 : 1);
  switch (pick) {
    case 0:
      return make_encode(gen::unit_rational(rng));
    case 1:
      return make_stream({gen::random_digits(rng, static_cast<std::size_t>(gen::uniform(rng, 0, 4))),
                          gen::random_digits(rng, static_cast<std::size_t>(gen::uniform(rng, 1, 3)))});
    case 2:
      return make_hom(gen::any_mobius(rng), random_expr(rng, depth - 1));
    case 3:
      return make_quad(*tensors::by_name(std::array{"mul", "add", "div", "avg"}[gen::uniform(rng, 0, 3)]),
                       random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    default:
      return make_quad(gen::any_tensor(rng), random_expr(rng, depth - 1),
                       random_expr(rng, depth - 1));
  }
}

}  // namespace

TEST(Expr, ParseSugar) {
  const ExprPtr e = parse_expr("mul(enc(1/3); enc(-2/5))");
  EXPECT_EQ(*e, *make_quad(tensors::mul(), make_encode(q(1, 3)), make_encode(q(-2, 5))));
  EXPECT_EQ(*parse_expr("quad(mul; enc(1/3); enc(-2/5))"), *e);
  EXPECT_EQ(*parse_expr("quad(1,0,0,0,0,0,0,1; enc(1/3); enc(-2/5))"), *e);
  EXPECT_EQ(*parse_expr("quad(tensor(1,0,0,0,0,0,0,1); enc(1/3); enc(-2/5))"), *e);
}

TEST(Expr, ParseHomAndNeg) {
  const ExprPtr half = parse_expr("hom(1,0,0,2; enc(1/2))");
  EXPECT_EQ(*half, *make_hom(Mobius{1, 0, 0, 2}, make_encode(q(1, 2))));
  EXPECT_EQ(*parse_expr("hom(mobius(1,0,0,2); enc(1/2))"), *half);
  EXPECT_EQ(*parse_expr(" neg ( \"LR(M)*\" ) "),
            *make_hom(Mobius{-1, 0, 0, 1}, make_stream({{Digit::L, Digit::R}, {Digit::M}})));
}

TEST(Expr, ParseErrors) {
  try {
    parse_expr("mul(enc(1/3)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 12u);
    EXPECT_NE(std::string(e.what()).find("unbalanced"), std::string::npos);
  }
  try {
    parse_expr("hom(1,0,0; enc(0))");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 9u);
  }
  try {
    parse_expr("\"LRX(M)*\"");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 3u);
  }
  for (const char* bad : {"", "enc()", "enc(1/0)", "foo(enc(0))", "enc(0) extra", "mul(enc(0); enc(0);)",
                          "\"(M)*", "quad(sub; enc(0); enc(0))"}) {
    EXPECT_THROW(parse_expr(bad), ParseError) << bad;
  }
}

TEST(Expr, PrintParseRoundTrip) {
  gen::Rng rng(91);
  for (int i = 0; i < 500; ++i) {
    const ExprPtr e = random_expr(rng, 3);
    const std::string text = print_expr(*e);
    EXPECT_EQ(*parse_expr(text), *e) << text;
    EXPECT_EQ(print_expr(*parse_expr(text)), text);
  }
  EXPECT_EQ(print_expr(*parse_expr("neg(enc(1/2))")), "hom(-1,0,0,1; enc(1/2))");
  EXPECT_EQ(print_expr(*parse_expr("quad(0,1,1,0,0,0,0,2;\"(L)*\";enc(0))")), "avg(\"(L)*\"; enc(0))");
}

TEST(Expr, EvalExamples) {
  RunConfig cfg;
  cfg.digits = 5;
  EXPECT_EQ(eval(*parse_expr("enc(0)"), cfg).digits, "MMMMM");

  RunConfig prec;
  prec.precision = q(1, 100);
  const EvalReport half = eval(*parse_expr("hom(1,0,0,2; enc(1/2))"), prec);
  EXPECT_TRUE(half.approx.bounds.contains(q(1, 4)));
  EXPECT_LE(half.approx.bounds.width(), q(1, 100));
  EXPECT_EQ(half.digits.size(), 199u);
  EXPECT_GT(half.total_absorbed, 0u);
  EXPECT_GE(half.total_absorbed, half.max_absorbed);
}

TEST(Expr, EvalReportsNonProductiveSubexpression) {
  RunConfig cfg;
  cfg.digits = 10;
  cfg.fuel_mode = FuelPolicy::Mode::capped;
  cfg.fuel_cap = 200;
  try {
    eval(*parse_expr("hom(1,0,0,2; add(enc(3/4); enc(3/4)))"), cfg);
    FAIL();
  } catch (const NonProductive& e) {
    EXPECT_EQ(e.context(), "add(enc(3/4); enc(3/4))");
    EXPECT_EQ(e.absorbed(), 200u);
  }
}

TEST(Expr, ConfigValidation) {
  RunConfig none;
  EXPECT_THROW(none.validate(), std::invalid_argument);
  RunConfig both;
  both.digits = 3;
  both.precision = q(1, 2);
  EXPECT_THROW(both.validate(), std::invalid_argument);
  RunConfig zero_cap;
  zero_cap.digits = 3;
  zero_cap.fuel_cap = 0;
  EXPECT_THROW(zero_cap.validate(), std::invalid_argument);
}

TEST(Cli, DigitsFormat) {
  const RunResult r = run({"enc(0)", "--digits", "5", "--format", "digits"});
  EXPECT_EQ(r.code, lftcalc::kExitOk);
  EXPECT_EQ(r.out, "MMMMM\n");
}

TEST(Cli, AllFormatHasEveryLine) {
  const RunResult r = run({"avg(enc(1/2); enc(1/4))", "--digits", "20"});
  EXPECT_EQ(r.code, 0);
  for (const char* key : {"digits:", "interval:", "decimal:", "absorbed:", "±", "(k=20)"}) {
    EXPECT_NE(r.out.find(key), std::string::npos) << key;
  }
}

TEST(Cli, PrecisionAndStdin) {
  const RunResult r = run({"-", "--prec", "1/1000", "--format", "interval"}, "hom(1,0,0,2; enc(1/2))\n");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.front(), '[');
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"mul(enc(1/3)"}).code, lftcalc::kExitInput);
  EXPECT_EQ(run({"enc(3/2)"}).code, lftcalc::kExitInput);
  EXPECT_EQ(run({"enc(0)", "--digits", "3", "--prec", "1/2"}).code, lftcalc::kExitInput);
  EXPECT_EQ(run({"enc(0)", "--fuel-mode", "eager"}).code, lftcalc::kExitInput);
  EXPECT_EQ(run({"enc(0)", "--prec", "0"}).code, lftcalc::kExitInput);
  EXPECT_EQ(run({"--help"}).code, lftcalc::kExitOk);
  const RunResult np = run({"add(enc(3/4); enc(3/4))", "--fuel-mode", "capped"});
  EXPECT_EQ(np.code, lftcalc::kExitNonProductive);
  EXPECT_NE(np.err.find("add(enc(3/4); enc(3/4))"), std::string::npos);
  EXPECT_NE(np.err.find("10000"), std::string::npos);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"mul(\"LR(ML)*\"; avg(enc(1/2); enc(1/4)))", "--digits", "25"};
  const RunResult first = run(args);
  ASSERT_EQ(first.code, 0) << first.err;
  for (int i = 0; i < 3; ++i) EXPECT_EQ(run(args).out, first.out);
}
