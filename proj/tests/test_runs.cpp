#include <gtest/gtest.h>

#include <random>

#include "genruns/contract.hpp"
#include "genruns/oracles.hpp"
#include "genruns/runs.hpp"
#include "support.hpp"

namespace genruns {
namespace {

using Runs = std::vector<Run>;

TEST(CompareSuffixes, BothOrders) {
  const Text t = text_from_bytes("aab");
  const LceOracle oracle(t.view(), LceBackend::kNaive);
  EXPECT_EQ(compare_suffixes(oracle, 1, 2, SymbolOrder::kForward), std::strong_ordering::less);
  EXPECT_EQ(compare_suffixes(oracle, 1, 2, SymbolOrder::kReverse), std::strong_ordering::greater);
  EXPECT_THROW(compare_suffixes(oracle, 2, 2, SymbolOrder::kForward), ContractViolation);
  const Text ab = text_from_bytes("ab");
  const LceOracle o2(ab.view(), LceBackend::kSparse);
  EXPECT_EQ(compare_suffixes(o2, 2, 1, SymbolOrder::kForward), std::strong_ordering::greater);
  // an exhausted suffix is smaller under both orders
  const Text aa = text_from_bytes("aa");
  const LceOracle o3(aa.view(), LceBackend::kNaive);
  EXPECT_EQ(compare_suffixes(o3, 2, 1, SymbolOrder::kForward), std::strong_ordering::less);
  EXPECT_EQ(compare_suffixes(o3, 2, 1, SymbolOrder::kReverse), std::strong_ordering::less);
}

TEST(NextSmallerSuffix, Aab) {
  const Text t = text_from_bytes("aab");
  const LceOracle oracle(t.view(), LceBackend::kNaive);
  EXPECT_EQ(next_smaller_suffix(oracle, SymbolOrder::kForward), (std::vector<Position>{4, 4, 4}));
  EXPECT_EQ(next_smaller_suffix(oracle, SymbolOrder::kReverse), (std::vector<Position>{2, 3, 4}));
}

TEST(NextSmallerSuffix, RandomAgainstBruteForce) {
  std::mt19937_64 gen(53);
  for (int trial = 0; trial < 300; ++trial) {
    const Text t = text_from_bytes(testing::random_string(gen, gen() % 200, 1 + trial % 5));
    const LceOracle oracle(t.view(), trial % 2 ? LceBackend::kSparse : LceBackend::kNaive);
    for (SymbolOrder order : {SymbolOrder::kForward, SymbolOrder::kReverse}) {
      ASSERT_EQ(next_smaller_suffix(oracle, order), testing::brute_nss(t.view(), order));
    }
  }
}

TEST(LceOracle, BackwardAgreesWithScan) {
  std::mt19937_64 gen(59);
  for (int trial = 0; trial < 60; ++trial) {
    const std::string s = testing::random_string(gen, 1 + gen() % 150, 1 + trial % 3);
    const Text t = text_from_bytes(s);
    const LceOracle sparse(t.view(), LceBackend::kSparse);
    const LceOracle naive(t.view(), LceBackend::kNaive);
    const Position n = t.size();
    for (Position x = 0; x <= n; ++x) {
      for (Position y = 0; y <= n; ++y) {
        Position l = 0;
        while (l < x && l < y && s[x - l - 1] == s[y - l - 1]) ++l;
        ASSERT_EQ(sparse.lcs(x, y), l);
        ASSERT_EQ(naive.lcs(x, y), l);
      }
    }
  }
}

TEST(ComputeRuns, SmallCases) {
  for (LceBackend backend : {LceBackend::kSparse, LceBackend::kNaive}) {
    EXPECT_EQ(compute_runs(text_from_bytes("").view(), backend), Runs{});
    EXPECT_EQ(compute_runs(text_from_bytes("ab").view(), backend), Runs{});
    EXPECT_EQ(compute_runs(text_from_bytes("aa").view(), backend), (Runs{{1, 2, 1}}));
    EXPECT_EQ(compute_runs(text_from_bytes("aab").view(), backend), (Runs{{1, 2, 1}}));
    EXPECT_EQ(compute_runs(text_from_bytes("abcabcababcabb$").view(), backend),
              (Runs{{1, 8, 3}, {4, 13, 5}, {7, 10, 2}, {13, 14, 1}}));
  }
}

TEST(ComputeRuns, AabIsFoundOnlyUnderReverseOrder) {
  // Under the forward order "a" < "ab", so suffix 1 has Lyndon prefix "aab".
  const Text t = text_from_bytes("aab");
  const LceOracle oracle(t.view(), LceBackend::kNaive);
  const auto fwd = next_smaller_suffix(oracle, SymbolOrder::kForward);
  EXPECT_EQ(fwd[0] - 1, 3u);
  const auto rev = next_smaller_suffix(oracle, SymbolOrder::kReverse);
  EXPECT_EQ(rev[0] - 1, 1u);
}

TEST(ComputeRuns, RandomAgainstOracleAndBudget) {
  std::mt19937_64 gen(61);
  for (int trial = 0; trial < 150; ++trial) {
    const std::string s = testing::random_string(gen, gen() % 400, 2 + trial % 4);
    const Text t = text_from_bytes(s);
    const auto expected = oracle::naive_runs(t.view());
    for (LceBackend backend : {LceBackend::kSparse, LceBackend::kNaive}) {
      const LceOracle oracle(t.view(), backend);
      ASSERT_EQ(compute_runs(oracle), expected) << s;
      ASSERT_LE(oracle.queries(), 8ull * t.size());
    }
    ASSERT_LE(expected.size(), t.size());
  }
}

TEST(ComputeRuns, ExplicitTauStillExact) {
  std::mt19937_64 gen(67);
  for (std::uint32_t tau = 1; tau <= 6; ++tau) {
    const Text t = text_from_bytes(testing::random_string(gen, 700, 2));
    IndexOptions options;
    options.tau = tau;
    ASSERT_EQ(compute_runs(t.view(), LceBackend::kSparse, options), oracle::naive_runs(t.view())) << tau;
  }
}

TEST(RunStats, Sums) {
  const auto none = run_stats({});
  EXPECT_EQ(none.count, 0u);
  EXPECT_EQ(none.sum_exponents, 0);
  const auto one = run_stats({{1, 2, 1}});
  EXPECT_EQ(one.count, 1u);
  EXPECT_EQ(one.sum_exponents, 2);
  EXPECT_EQ(one.sum_decimal(), "2.000000");
  const auto example = run_stats({{1, 8, 3}, {4, 13, 5}, {7, 10, 2}, {13, 14, 1}});
  EXPECT_EQ(example.count, 4u);
  EXPECT_EQ(example.sum_exponents, boost::multiprecision::cpp_rational(26, 3));
  EXPECT_EQ(example.sum_decimal(), "8.666667");
  EXPECT_EQ(example.sum_decimal(0), "9");
}

}  // namespace
}  // namespace genruns
