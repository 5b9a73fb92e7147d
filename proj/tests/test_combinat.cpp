#include <gtest/gtest.h>

#include <random>

#include "commtrace/combinat.hpp"
#include "oracles.hpp"

namespace commtrace {
namespace {

oracle::Blocks as_blocks(const SetPartition& p) {
  oracle::Blocks out;
  for (const auto& b : p.blocks()) out.insert(std::set<int>(b.begin(), b.end()));
  return out;
}

TEST(Permutations, Examples) {
  const auto s3 = enumerate_permutations(3);
  ASSERT_EQ(s3.size(), 6u);
  int sign_sum = 0;
  for (const auto& p : s3) sign_sum += p.sign();
  EXPECT_EQ(sign_sum, 0);

  const auto s1 = enumerate_permutations(1);
  ASSERT_EQ(s1.size(), 1u);
  EXPECT_EQ(s1.front().sign(), 1);

  // Brute-force count: 24 permutations, 12 of each inversion parity.
  const auto s4 = enumerate_permutations(4);
  ASSERT_EQ(s4.size(), 24u);
  int even = 0;
  for (const auto& p : s4) even += p.sign() == 1;
  EXPECT_EQ(even, 12);

  EXPECT_THROW(enumerate_permutations(0), std::invalid_argument);
}

TEST(Permutations, LexicographicAndDistinct) {
  const auto s4 = enumerate_permutations(4);
  for (std::size_t i = 1; i < s4.size(); ++i) {
    const auto a = s4[i - 1].images(), b = s4[i].images();
    EXPECT_TRUE(std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()));
  }
}

TEST(Permutations, SignMatchesInversionParityAndCycles) {
  for (int k = 1; k <= 6; ++k)
    for (const auto& p : enumerate_permutations(k)) {
      const std::vector<int> images(p.images().begin(), p.images().end());
      EXPECT_EQ(p.sign(), oracle::sign(images));
      std::size_t covered = 0;
      for (const auto& cycle : p.cycles()) {
        covered += cycle.size();
        for (std::size_t t = 0; t < cycle.size(); ++t)
          EXPECT_EQ(p(cycle[t]), cycle[(t + 1) % cycle.size()]);
        EXPECT_EQ(cycle.front(), *std::min_element(cycle.begin(), cycle.end()));
      }
      EXPECT_EQ(covered, static_cast<std::size_t>(k));
    }
}

TEST(Permutations, SignIsMultiplicative) {
  std::mt19937_64 rng(11);
  const auto s5 = enumerate_permutations(5);
  std::uniform_int_distribution<std::size_t> pick(0, s5.size() - 1);
  for (int t = 0; t < 500; ++t) {
    const auto& a = s5[pick(rng)];
    const auto& b = s5[pick(rng)];
    EXPECT_EQ((a * b).sign(), a.sign() * b.sign());
    EXPECT_TRUE((a * a.inverse()).is_identity());
  }
}

TEST(Permutations, CycleNotation) {
  EXPECT_EQ(to_string(Permutation({2, 3, 1, 4})), "(1 2 3)(4)");
  EXPECT_EQ(to_string(Permutation::identity(2)), "(1)(2)");
  EXPECT_THROW(Permutation({1, 1}), std::invalid_argument);
}

TEST(SetPartitions, Examples) {
  const auto p32 = enumerate_set_partitions(3, 2);
  ASSERT_EQ(p32.size(), 4u);
  std::set<oracle::Blocks> got;
  for (const auto& p : p32) got.insert(as_blocks(p));
  EXPECT_EQ(got, oracle::partitions(3, 2));
  for (const char* text : {"{1,2,3}", "{1|2,3}", "{1,2|3}", "{1,3|2}"})
    EXPECT_TRUE(got.count(as_blocks(parse_partition(text)))) << text;

  EXPECT_EQ(enumerate_set_partitions(1, 1).size(), 1u);
  EXPECT_EQ(enumerate_set_partitions(4, 3).size(), 14u);
  EXPECT_EQ(oracle::partitions(4, 3).size(), 14u);
  EXPECT_THROW(enumerate_set_partitions(0, 1), std::invalid_argument);
}

TEST(SetPartitions, RestrictedGrowthOrder) {
  const auto all = enumerate_set_partitions(3, 3);
  std::vector<std::string> names;
  for (const auto& p : all) names.push_back(to_string(p));
  EXPECT_EQ(names, (std::vector<std::string>{"{1,2,3}", "{1,2|3}", "{1,3|2}", "{1|2,3}", "{1|2|3}"}));
}

TEST(SetPartitions, CountsMatchBruteForceAndStirling) {
  for (int m = 1; m <= 7; ++m) {
    const auto all = oracle::partitions(m, m);
    for (int k = 1; k <= m; ++k) {
      const auto got = enumerate_set_partitions(m, k);
      std::size_t expected = 0;
      for (const auto& b : all) expected += static_cast<int>(b.size()) <= k;
      EXPECT_EQ(got.size(), expected) << m << "," << k;
      BigInt sum = 0;
      for (int j = 1; j <= k; ++j) sum += stirling2(m, j);
      EXPECT_EQ(BigInt(static_cast<unsigned long>(got.size())), sum);
    }
  }
}

TEST(SetPartitions, CanonicalFormAndParsing) {
  const SetPartition p({{3, 1}, {2}});
  EXPECT_EQ(to_string(p), "{1,3|2}");
  EXPECT_EQ(parse_partition(" {1,3 | 2} "), p);
  EXPECT_EQ(p.block_of(3), 1);
  EXPECT_THROW(SetPartition({{1, 2}, {2}}), std::invalid_argument);
  EXPECT_THROW(SetPartition({{1, 3}}), std::invalid_argument);
  EXPECT_THROW(parse_partition("{1,,2}"), std::invalid_argument);
  EXPECT_THROW(parse_partition("1|2"), std::invalid_argument);
}

TEST(CanonicalFunction, Examples) {
  const auto f = canonical_function(SetPartition({{1, 3}, {2}}), 2);
  EXPECT_EQ(std::vector<int>(f.letters().begin(), f.letters().end()), (std::vector<int>{1, 2, 1}));
  const auto ones = canonical_function(SetPartition({{1, 2, 3, 4}}), 3);
  EXPECT_EQ(std::vector<int>(ones.letters().begin(), ones.letters().end()), (std::vector<int>{1, 1, 1, 1}));
  const auto id = canonical_function(SetPartition({{1}, {2}, {3}}), 3);
  EXPECT_EQ(std::vector<int>(id.letters().begin(), id.letters().end()), (std::vector<int>{1, 2, 3}));
  EXPECT_THROW(canonical_function(SetPartition({{1}, {2}, {3}}), 2), std::invalid_argument);
}

TEST(FiberPartition, Examples) {
  EXPECT_EQ(fiber_partition(FunctionWord({2, 1, 2}, 2)), SetPartition({{1, 3}, {2}}));
  EXPECT_EQ(fiber_partition(FunctionWord({3, 3, 3}, 3)), SetPartition({{1, 2, 3}}));
  EXPECT_EQ(fiber_partition(FunctionWord({3, 1, 2}, 3)), SetPartition({{1}, {2}, {3}}));
  EXPECT_THROW(FunctionWord({0, 1}, 2), std::invalid_argument);
}

TEST(FiberPartition, RoundtripExhaustive) {
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= 4; ++n)
      for (const auto& p : enumerate_set_partitions(m, n))
        EXPECT_EQ(fiber_partition(canonical_function(p, n)), p);
}

TEST(FiberPartition, OrbitRepresentativesAreCanonicalFunctions) {
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 4; ++n) {
      std::set<std::vector<int>> representatives;
      for (const auto& w : oracle::all_words(m, n)) {
        // Orbit minimum under S_n relabeling, by trying every relabeling.
        std::vector<int> best;
        for (const auto& g : enumerate_permutations(n)) {
          std::vector<int> image;
          for (int v : w) image.push_back(g(v));
          if (best.empty() || image < best) best = image;
        }
        representatives.insert(best);
        const auto rep = canonical_representative(FunctionWord(w, n));
        EXPECT_EQ(std::vector<int>(rep.letters().begin(), rep.letters().end()), best);
      }
      std::set<std::vector<int>> canonical;
      for (const auto& p : enumerate_set_partitions(m, n)) {
        const auto f = canonical_function(p, n);
        canonical.insert(std::vector<int>(f.letters().begin(), f.letters().end()));
      }
      EXPECT_EQ(representatives, canonical) << "m=" << m << " n=" << n;
    }
}

TEST(Coarsenings, Examples) {
  const auto two = coarsenings(SetPartition({{1}, {2}}));
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0], SetPartition({{1}, {2}}));
  EXPECT_EQ(two[1], SetPartition({{1, 2}}));

  const SetPartition top({{1, 2, 3, 4}});
  EXPECT_EQ(coarsenings(top), std::vector<SetPartition>{top});

  const auto all = coarsenings(SetPartition({{1}, {2}, {3}}));
  std::set<oracle::Blocks> got;
  for (const auto& p : all) got.insert(as_blocks(p));
  EXPECT_EQ(all.size(), 5u);
  EXPECT_EQ(got, oracle::partitions(3, 3));
}

TEST(Coarsenings, MatchRefinementFilter) {
  for (int m = 1; m <= 5; ++m)
    for (const auto& p : enumerate_set_partitions(m, m)) {
      std::set<SetPartition> expected;
      for (const auto& q : enumerate_set_partitions(m, m))
        if (p.refines(q)) expected.insert(q);
      const auto got = coarsenings(p);
      EXPECT_EQ(std::set<SetPartition>(got.begin(), got.end()), expected);
      EXPECT_EQ(got.size(), expected.size());
      EXPECT_EQ(got.front(), p);
    }
}

TEST(Stirling, Examples) {
  EXPECT_EQ(stirling2(3, 2), 3);
  EXPECT_EQ(stirling2(7, 1), 1);
  EXPECT_EQ(stirling2(4, 2), 7);
  EXPECT_EQ(stirling2(3, 4), 0);
  EXPECT_EQ(stirling2(3, 0), 0);
  EXPECT_EQ(stirling2(0, 0), 1);
  // Cross-check against enumeration of exact block counts.
  for (int m = 1; m <= 7; ++m) {
    const auto all = oracle::partitions(m, m);
    for (int k = 1; k <= m; ++k) {
      std::size_t exact = 0;
      for (const auto& b : all) exact += static_cast<int>(b.size()) == k;
      EXPECT_EQ(stirling2(m, k), BigInt(static_cast<unsigned long>(exact)));
    }
  }
}

TEST(Stirling, ExplicitFormulaAtLargeArguments) {
  // k! S(m,k) = sum_j (-1)^j C(k,j) (k-j)^m, in exact integers.
  for (int m : {20, 30, 40})
    for (int k : {1, 7, 15, m}) {
      BigInt sum = 0, binom = 1;
      for (int j = 0; j <= k; ++j) {
        BigInt power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(k - j), static_cast<unsigned long>(m));
        sum += (j % 2 ? -1 : 1) * binom * power;
        binom = binom * (k - j) / (j + 1);
      }
      EXPECT_EQ(stirling2(m, k) * factorial(k), sum) << m << "," << k;
    }
}

TEST(CyclePartition, Supports) {
  EXPECT_EQ(cycle_partition(Permutation({3, 2, 1})), SetPartition({{1, 3}, {2}}));
}

}  // namespace
}  // namespace commtrace
