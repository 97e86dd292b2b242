#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "genruns/contract.hpp"
#include "genruns/oracles.hpp"
#include "genruns/sparse_lce.hpp"
#include "support.hpp"

namespace genruns {
namespace {

TEST(ChooseTau, Values) {
  EXPECT_EQ(choose_tau(0), 1u);
  EXPECT_EQ(choose_tau(1), 1u);
  EXPECT_EQ(choose_tau(2), 1u);
  EXPECT_EQ(choose_tau(3), 2u);
  EXPECT_EQ(choose_tau(256), 2u);
  EXPECT_EQ(choose_tau(257), 3u);
  EXPECT_EQ(choose_tau(1u << 20), 3u);
  EXPECT_EQ(choose_tau(1000000), 3u);
  EXPECT_EQ(choose_tau(std::uint64_t{1} << 27), 3u);
  EXPECT_EQ(choose_tau((std::uint64_t{1} << 27) + 1), 4u);
}

TEST(SampleSet, WorkedExampleMembers) {
  const SampleSet sample(15, 2, DifferenceCover::from_elements(4, {0, 1, 3}));
  EXPECT_EQ(sample.members(15), (std::vector<Position>{1, 3, 4, 5, 7, 8, 9, 11, 12, 13, 15}));
  EXPECT_EQ(sample.padded_length(), 15u + 1 + 8);
  const auto all = sample.members(sample.padded_length());
  ASSERT_EQ(all.size(), sample.size());
  for (std::uint32_t j = 0; j < all.size(); ++j) EXPECT_EQ(sample.index_of(all[j]), j);
  for (Position x : all) {
    if (x + 4 <= sample.padded_length()) EXPECT_TRUE(sample.contains(x + 4));
  }
  EXPECT_THROW(SampleSet(15, 2, DifferenceCover::build(5)), std::invalid_argument);
}

TEST(SampleSet, SizeBound) {
  for (std::uint32_t tau = 1; tau <= 5; ++tau) {
    for (Position n : {0u, 1u, 17u, 1000u}) {
      const SampleSet s(n, tau, DifferenceCover::build(tau * tau));
      const std::uint32_t blocks = (s.padded_length() + tau * tau - 1) / (tau * tau);
      EXPECT_LE(s.size(), s.cover().size() * blocks);
    }
  }
}

IndexOptions worked_example_options() {
  IndexOptions options;
  options.tau = 2;
  options.cover = std::vector<std::uint32_t>{0, 1, 3};
  return options;
}

TEST(SparseLceIndex, WorkedExampleLeafSet) {
  const Text t = text_from_bytes("abcabcababcabb$");
  SparseLceBuilder builder(t.view(), SampleSet::for_text(t.size(), worked_example_options()));
  builder.run();
  const auto leaf = builder.trie().find(1);
  ASSERT_TRUE(leaf);
  EXPECT_EQ(builder.trie().find(4), leaf);
  EXPECT_EQ(builder.trie().find(9), leaf);
  std::vector<Position> shifted;
  for (OmNode n : builder.trie().members(*leaf)) shifted.push_back(builder.order().payload(n));
  EXPECT_EQ(shifted, (std::vector<Position>{8, 13, 5}));
}

TEST(SparseLceIndex, WorkedExampleQueries) {
  const Text t = text_from_bytes("abcabcababcabb$");
  for (const IndexOptions& options : {worked_example_options(), IndexOptions{}, IndexOptions{1, {}}}) {
    const auto index = build_index(t.view(), options);
    EXPECT_EQ(index.lce(4, 9), 5u);
    EXPECT_EQ(index.lce(1, 4), 5u);
    EXPECT_EQ(index.lce(3, 15), 0u);
    for (Position i = 1; i <= 15; ++i) EXPECT_EQ(index.lce(i, i), 16 - i);
  }
  const auto index = build_index(t.view(), worked_example_options());
  EXPECT_EQ(index.suffix_order().size(), 11u);
  EXPECT_EQ(index.member_lce(5, 5), 11u);
  // adjacent ranks answer with the single lcp entry between them
  const auto order = index.suffix_order();
  EXPECT_EQ(index.member_lce(order[2], order[3]), index.lcp()[2]);
  EXPECT_EQ(index.sa(2), 0u);
  EXPECT_EQ(index.suffix_order()[index.sa(9) - 1], 9u);
  EXPECT_THROW(index.member_lce(2, 3), ContractViolation);
  EXPECT_THROW(index.lce(0, 3), ContractViolation);
  EXPECT_THROW(index.lce(3, 16), ContractViolation);
}

TEST(SparseLceIndex, TinyTexts) {
  const Text empty = text_from_bytes("");
  const auto e = build_index(empty.view());
  EXPECT_EQ(e.size(), 0u);
  EXPECT_TRUE(e.suffix_order().empty());
  const Text a = text_from_bytes("a");
  const auto ia = build_index(a.view());
  EXPECT_EQ(ia.lce(1, 1), 1u);
  EXPECT_EQ(ia.suffix_order().size(), 1u);
}

// Inserted-so-far members of the padded text, sorted by brute force.
struct PaddedOracle {
  std::string padded;
  explicit PaddedOracle(const std::string& s, Position padded_length)
      : padded(s + std::string(padded_length - s.size(), '\0')) {}
  Position lce(Position x, Position y) const {
    Position l = 0;
    while (x + l <= padded.size() && y + l <= padded.size() && padded[x + l - 1] == padded[y + l - 1]) ++l;
    return l;
  }
  bool less(Position x, Position y) const {
    return padded.compare(x - 1, std::string::npos, padded, y - 1, std::string::npos) < 0;
  }
};

TEST(SparseLceBuilder, EveryStepMatchesBruteForce) {
  std::mt19937_64 gen(31);
  for (int trial = 0; trial < 120; ++trial) {
    const unsigned sigma = std::array<unsigned, 4>{1, 2, 4, 26}[trial % 4];
    const std::string s = testing::random_string(gen, 1 + gen() % 60, sigma);
    IndexOptions options;
    options.tau = 1 + static_cast<std::uint32_t>(trial % 3);
    const Text t = text_from_bytes(s);
    SparseLceBuilder builder(t.view(), SampleSet::for_text(t.size(), options));
    const PaddedOracle oracle(s, builder.sample().padded_length());
    std::vector<Position> inserted;
    while (!builder.done()) {
      inserted.push_back(builder.cursor());
      builder.step();
      std::vector<Position> expected = inserted;
      std::sort(expected.begin(), expected.end(), [&](Position a, Position b) { return oracle.less(a, b); });
      ASSERT_EQ(builder.order().to_vector(), expected) << s;
      std::vector<std::uint32_t> lcps;
      for (std::size_t j = 0; j + 1 < expected.size(); ++j) lcps.push_back(oracle.lce(expected[j], expected[j + 1]));
      ASSERT_EQ(builder.tree().lcp_sequence(), lcps) << s;
      std::vector<OmNode> tree_order = builder.tree().in_order();
      for (std::size_t j = 0; j + 1 < tree_order.size(); ++j) {
        ASSERT_TRUE(builder.order().precedes(tree_order[j], tree_order[j + 1]));
      }
    }
    ASSERT_TRUE(builder.tree().aggregates_consistent());
  }
}

void expect_matches_oracles(const std::string& s, const IndexOptions& options = {}) {
  const Text t = text_from_bytes(s);
  const auto index = build_index(t.view(), options);
  const auto sorted = oracle::naive_sparse_sort(t.view(), index.sample());
  ASSERT_EQ(index.suffix_order(), sorted.order) << s;
  ASSERT_TRUE(std::equal(index.lcp().begin(), index.lcp().end(), sorted.lcp.begin(), sorted.lcp.end())) << s;
  for (std::size_t j = 0; j < sorted.order.size(); ++j) ASSERT_EQ(index.sa(sorted.order[j]), j + 1);
  const auto matrix = oracle::lce_matrix(t.view());
  const Position n = t.size();
  for (Position x = 1; x <= n; ++x) {
    for (Position y = 1; y <= n; ++y) {
      ASSERT_EQ(index.lce(x, y), matrix[(x - 1) * n + (y - 1)]) << s << ' ' << x << ' ' << y;
    }
  }
}

TEST(SparseLceIndex, RandomTextsMatchOracles) {
  std::mt19937_64 gen(41);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned sigma = std::array<unsigned, 4>{1, 2, 4, 26}[trial % 4];
    IndexOptions options;
    if (trial % 5 == 0) options.tau = 1 + static_cast<std::uint32_t>(gen() % 4);
    expect_matches_oracles(testing::random_string(gen, 1 + gen() % 300, sigma), options);
  }
}

TEST(SparseLceIndex, AdversarialFamilies) {
  for (std::size_t n : {1u, 2u, 7u, 64u, 255u, 300u}) {
    expect_matches_oracles(std::string(n, 'a'));
    expect_matches_oracles(testing::repeated("ab", n));
    expect_matches_oracles(testing::fibonacci_word(n));
    expect_matches_oracles(testing::thue_morse(n));
  }
}

TEST(SparseLceIndex, DeterministicBuild) {
  std::mt19937_64 gen(43);
  const Text t = text_from_bytes(testing::random_string(gen, 5000, 3));
  const auto a = build_index(t.view());
  const auto b = build_index(t.view());
  EXPECT_TRUE(std::ranges::equal(a.suffix_order(), b.suffix_order()));
  EXPECT_TRUE(std::ranges::equal(a.lcp(), b.lcp()));
}

TEST(SparseLceIndex, QueryScanIsBoundedByPeriod) {
  std::mt19937_64 gen(47);
  for (unsigned sigma : {1u, 2u, 26u}) {
    const Text t = text_from_bytes(testing::random_string(gen, 4000, sigma));
    ComparisonCounter counter;
    const auto index = build_index(t.view(&counter));
    const std::uint32_t period = index.sample().period();
    std::uniform_int_distribution<Position> pos(1, t.size());
    for (int q = 0; q < 20000; ++q) {
      counter.reset();
      (void)index.lce(pos(gen), pos(gen));
      ASSERT_LT(counter.count, period);
    }
    // sampled pairs need no symbol comparison at all
    counter.reset();
    const auto order = index.suffix_order();
    for (std::size_t j = 0; j + 7 < order.size(); j += 7) (void)index.member_lce(order[j], order[j + 7]);
    EXPECT_EQ(counter.count, 0u);
  }
}

}  // namespace
}  // namespace genruns
