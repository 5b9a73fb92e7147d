#include <gtest/gtest.h>

#include <random>

#include "commtrace/maps.hpp"
#include "commtrace/rings.hpp"
#include "commtrace/text.hpp"

namespace commtrace {
namespace {

TEST(ParseExpression, Examples) {
  EXPECT_EQ(parse_expression("tr(X1)*tr(X2) - tr(X1*X2)"), fundamental_sum(1));
  EXPECT_EQ(parse_expression("tr(X2*X1)"), parse_expression("tr(X1*X2)"));
  EXPECT_THROW(parse_expression("tr()"), ParseError);
}

TEST(ParseExpression, ErrorsCarryPosition) {
  try {
    parse_expression("tr(X1) + tr()");
    FAIL() << "expected a syntax error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 12u);
  }
  for (const char* bad : {"", "tr(X0)", "tr(X1", "2/0*tr(X1)", "tr(Y1)", "tr(X1) tr(X2)", "tr(X1)+"})
    EXPECT_THROW(parse_expression(bad), ParseError) << bad;
}

TEST(ParseExpression, CoefficientsAndWhitespace) {
  const auto e = parse_expression("  -3/6 * tr( X3 * X1 ) * tr(X2)+ 2 ");
  EXPECT_EQ(to_string(e), "-1/2*tr(X1*X3)*tr(X2) + 2");
  EXPECT_TRUE(parse_expression("0").is_zero());
  EXPECT_TRUE(parse_expression("tr(X1) - tr(X1)").is_zero());
}

TEST(ParseExpression, RoundtripsEveryFundamentalSumAndReduction) {
  for (int n = 1; n <= 4; ++n) {
    const auto f = fundamental_sum(n);
    EXPECT_EQ(parse_expression(to_string(f)), f);
  }
  for (int m = 2; m <= 5; ++m) {
    const auto r = reduce_traces(t_lambda(enumerate_set_partitions(m, m).back()), 2);
    EXPECT_EQ(parse_expression(to_string(r)), r);
  }
}

TEST(ParseExpression, RoundtripsRandomExpressions) {
  std::mt19937_64 rng(64);
  std::uniform_int_distribution<int> letter(1, 9), len(1, 4), factors(0, 3), num(-20, 20), den(1, 7);
  for (int trial = 0; trial < 300; ++trial) {
    TraceExpression e;
    for (int t = 0; t < 4; ++t) {
      std::vector<TraceWord> ws;
      for (int f = factors(rng); f > 0; --f) {
        std::vector<int> w(len(rng));
        for (auto& x : w) x = letter(rng);
        ws.emplace_back(std::move(w));
      }
      e += TraceExpression(TraceProduct(std::move(ws)), make_rational(num(rng), den(rng)));
    }
    EXPECT_EQ(parse_expression(to_string(e)), e) << to_string(e);
  }
}

TEST(ParsePolynomial, AllFamilies) {
  EXPECT_EQ(parse_polynomial("x[2;1,3]"), Polynomial(Variable::generic(2, 1, 3)));
  EXPECT_EQ(parse_polynomial("2*x[1,2]^3 - 1/4"),
            pow(Polynomial(Variable::diagonal(1, 2)), 3).scaled(2) -
                Polynomial(Family::Diagonal, make_rational(1, 4)));
  EXPECT_EQ(parse_polynomial("x[1]*x[2]").family(), Family::Abstract);
  EXPECT_EQ(parse_polynomial("7").family(), Family::Abstract);
  EXPECT_EQ(parse_polynomial("7", Family::Generic).family(), Family::Generic);
  EXPECT_THROW(parse_polynomial("x[1]*x[1,1]"), ParseError);
  EXPECT_THROW(parse_polynomial("x[1,1]^"), ParseError);
  EXPECT_THROW(parse_polynomial("x[0,1]"), ParseError);
}

TEST(ParsePolynomial, RoundtripsModuleOutputs) {
  std::vector<Polynomial> outputs;
  const RingConfig cfg(2, 3);
  outputs.push_back(eval_generic(fundamental_sum(2), RingConfig(3, 3)));
  outputs.push_back(eval_generic(parse_expression("tr(X1*X2*X3) - 1/2*tr(X1)*tr(X2*X3)"), cfg));
  outputs.push_back(eval_diagonal(t_lambda(SetPartition({{1}, {2, 3}})), cfg));
  outputs.push_back(orbit_sum(SetPartition({{1, 3}, {2}}), cfg));
  PolyGenerator gen(3);
  for (int t = 0; t < 20; ++t) {
    const auto p = gen.abstract_poly(3);
    outputs.push_back(p);
    outputs.push_back(D_of(p, cfg));
  }
  for (const auto& p : outputs) {
    const auto text = to_string(p);
    EXPECT_EQ(parse_polynomial(text, p.family()), p) << text;
  }
}

}  // namespace
}  // namespace commtrace
