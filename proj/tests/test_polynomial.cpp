#include <gtest/gtest.h>

#include <random>

#include "commtrace/polynomial.hpp"
#include "commtrace/text.hpp"

namespace commtrace {
namespace {

Polynomial d(int i, int j) { return Polynomial(Variable::diagonal(i, j)); }
Polynomial constant(long v, Family f = Family::Diagonal) { return Polynomial(f, Rational(v)); }

Polynomial random_diagonal(std::mt19937_64& rng, int max_terms = 4) {
  std::uniform_int_distribution<int> terms(0, max_terms), index(1, 2), coeff(-5, 5), degree(0, 3);
  std::vector<Polynomial::Term> out;
  const int count = terms(rng);
  for (int t = 0; t < count; ++t) {
    std::vector<Monomial::Factor> factors;
    const int deg = degree(rng);
    for (int k = 0; k < deg; ++k) factors.emplace_back(Variable::diagonal(index(rng), index(rng)), 1u);
    out.emplace_back(Monomial::from_factors(std::move(factors)), make_rational(coeff(rng), 1 + std::abs(coeff(rng))));
  }
  return Polynomial::from_terms(Family::Diagonal, std::move(out));
}

TEST(Rational, StaysReduced) {
  const Rational r = make_rational(6, -4);
  EXPECT_EQ(r.get_num(), -3);
  EXPECT_EQ(r.get_den(), 2);
  EXPECT_EQ(to_string(make_rational(0, 7)), "0");
  EXPECT_EQ(parse_rational("-10/4"), make_rational(-5, 2));
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
  EXPECT_THROW(parse_rational("1/x"), std::invalid_argument);

  // No overflow: 2^200 / 3^100 stays exact.
  Rational big = 1;
  for (int i = 0; i < 200; ++i) big *= 2;
  for (int i = 0; i < 100; ++i) big /= 3;
  EXPECT_EQ(gcd(big.get_num(), big.get_den()), 1);
  EXPECT_GT(big.get_num(), BigInt("1000000000000000000000000000000"));
}

TEST(PolyAdd, Examples) {
  EXPECT_EQ(poly_add(d(1, 1) + constant(1), -d(1, 1)), constant(1));
  const auto p = d(1, 1) * d(2, 2) - constant(3);
  EXPECT_EQ(poly_add(p, Polynomial(Family::Diagonal)), p);
  EXPECT_EQ(poly_add(d(1, 1) + d(1, 2), d(1, 1) - d(1, 2)), d(1, 1).scaled(2));
}

TEST(PolyAdd, FamilyMismatchThrows) {
  EXPECT_THROW(poly_add(d(1, 1), Polynomial(Variable::abstract(1))), std::invalid_argument);
  EXPECT_THROW(poly_mul(d(1, 1), Polynomial(Variable::generic(1, 1, 1))), std::invalid_argument);
}

TEST(PolyMul, Examples) {
  const auto product = poly_mul(d(1, 1) + d(1, 2), d(2, 1) + d(2, 2));
  const auto expected = d(1, 1) * d(2, 1) + d(1, 1) * d(2, 2) + d(1, 2) * d(2, 1) + d(1, 2) * d(2, 2);
  EXPECT_EQ(product, expected);
  EXPECT_EQ(product.size(), 4u);
  const auto p = d(1, 1) - d(2, 2).scaled(make_rational(1, 3));
  EXPECT_EQ(poly_mul(p, constant(1)), p);
  EXPECT_TRUE(poly_mul(p, constant(0)).is_zero());
}

TEST(PolyEval, Examples) {
  Assignment at = {{Variable::diagonal(1, 1), make_rational(2, 3)}, {Variable::diagonal(2, 2), Rational(3)}};
  EXPECT_EQ(poly_eval(d(1, 1) * d(2, 2), at), Rational(2));
  EXPECT_EQ(poly_eval(Polynomial(Family::Diagonal), {}), Rational(0));
  Assignment cancel = {{Variable::diagonal(1, 1), Rational(1)}, {Variable::diagonal(1, 2), Rational(-1)}};
  EXPECT_EQ(poly_eval(pow(d(1, 1) + d(1, 2), 2), cancel), Rational(0));
  EXPECT_THROW(poly_eval(d(3, 1), cancel), std::out_of_range);
}

TEST(LeadingMonomial, Examples) {
  // Variables x[1,1] < x[1,2] < x[2,1] < x[2,2]; exponent vectors (1,0,1,0) vs (0,1,0,1).
  const auto p = d(1, 2) * d(2, 2) + d(1, 1) * d(2, 1);
  EXPECT_EQ(leading_monomial(p), (d(1, 1) * d(2, 1)).terms().front().first);
  EXPECT_EQ(leading_monomial(d(2, 1).scaled(7)), Monomial(Variable::diagonal(2, 1)));
  EXPECT_TRUE(leading_monomial(constant(5)).is_one());
  EXPECT_THROW(leading_monomial(Polynomial(Family::Diagonal)), std::domain_error);
}

TEST(MonomialOrder, GradedThenLexicographic) {
  const Monomial x11(Variable::diagonal(1, 1));
  const Monomial x12(Variable::diagonal(1, 2));
  const Monomial x22sq(Variable::diagonal(2, 2), 2);
  EXPECT_GT(x11, x12);
  EXPECT_GT(x22sq, x11);  // higher degree first
  EXPECT_GT(x11 * x12, Monomial(Variable::diagonal(1, 2), 2));
  EXPECT_LT(Monomial(), x12);
  // Family rank: generic < diagonal < abstract as variables.
  EXPECT_LT(Variable::generic(9, 9, 9), Variable::diagonal(1, 1));
  EXPECT_LT(Variable::diagonal(9, 9), Variable::abstract(1));
}

TEST(MonomialOrder, TotalAndMultiplicative) {
  std::mt19937_64 rng(7);
  std::vector<Monomial> pool;
  for (int t = 0; t < 60; ++t) {
    const auto p = random_diagonal(rng, 1);
    if (!p.is_zero()) pool.push_back(p.terms().front().first);
  }
  for (const auto& a : pool)
    for (const auto& b : pool) {
      const bool lt = a < b, gt = a > b, eq = a == b;
      EXPECT_EQ(int(lt) + int(gt) + int(eq), 1);
      for (const auto& c : pool)
        if (a < b) EXPECT_LT(a * c, b * c);
    }
}

TEST(Polynomial, RingAxiomsRandomized) {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_diagonal(rng), b = random_diagonal(rng), c = random_diagonal(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    const auto ab = a * b;
    for (const auto& [m, coeff] : ab.terms()) {
      EXPECT_NE(coeff, 0);
      EXPECT_EQ(gcd(coeff.get_num(), coeff.get_den()), 1);
    }
  }
}

TEST(Polynomial, EvalIsRingHomomorphism) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> value(-7, 7);
  for (int trial = 0; trial < 100; ++trial) {
    Assignment at;
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j) at[Variable::diagonal(i, j)] = make_rational(value(rng), 1 + std::abs(value(rng)));
    const auto p = random_diagonal(rng), q = random_diagonal(rng);
    EXPECT_EQ(poly_eval(p * q, at), poly_eval(p, at) * poly_eval(q, at));
    EXPECT_EQ(poly_eval(p + q, at), poly_eval(p, at) + poly_eval(q, at));
  }
}

TEST(Polynomial, SelfAliasingArithmetic) {
  auto p = d(1, 1) + constant(2);
  p += p;
  EXPECT_EQ(p, d(1, 1).scaled(2) + constant(4));
  p -= p;
  EXPECT_TRUE(p.is_zero());
}

TEST(Polynomial, Rendering) {
  EXPECT_EQ(to_string(d(1, 1) * d(2, 2).scaled(2) - constant(1).scaled(make_rational(1, 3))),
            "2*x[1,1]*x[2,2] - 1/3");
  EXPECT_EQ(to_string(Polynomial(Family::Diagonal)), "0");
  EXPECT_EQ(to_string(-pow(d(1, 2), 3)), "-x[1,2]^3");
  EXPECT_EQ(to_string(Polynomial(Variable::generic(2, 1, 3))), "x[2;1,3]");
  EXPECT_EQ(to_string(Polynomial(Variable::abstract(4))), "x[4]");
}

TEST(Polynomial, RenderParseRoundtrip) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_diagonal(rng);
    EXPECT_EQ(parse_polynomial(to_string(p), Family::Diagonal), p) << to_string(p);
  }
}

TEST(Variable, RangeValidation) {
  const RingConfig cfg(2, 3);
  EXPECT_NO_THROW(Variable::generic(3, 2, 2, cfg));
  EXPECT_THROW(Variable::generic(4, 1, 1, cfg), std::out_of_range);
  EXPECT_THROW(Variable::diagonal(1, 3, cfg), std::out_of_range);
  EXPECT_THROW(Variable::diagonal(0, 1), std::out_of_range);
  EXPECT_THROW(RingConfig(0, 1), std::invalid_argument);
}

TEST(Rank, MatchesDependencies) {
  const std::vector<Polynomial> polys = {d(1, 1) + d(1, 2), d(1, 1) - d(1, 2), d(1, 1).scaled(3),
                                         Polynomial(Family::Diagonal)};
  EXPECT_EQ(rank(polys), 2u);
}

}  // namespace
}  // namespace commtrace
