#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "genruns/difference_cover.hpp"
#include "genruns/order_maintenance.hpp"
#include "genruns/rank_min_tree.hpp"
#include "genruns/sparse_trie.hpp"
#include "genruns/static_rmq.hpp"
#include "genruns/symbols.hpp"

namespace genruns {

/// tau = ceil(cbrt(log2 n)) for n >= 2, 1 otherwise.
std::uint32_t choose_tau(std::uint64_t n) noexcept;

struct IndexOptions {
  /// 0 selects choose_tau(n).
  std::uint32_t tau = 0;
  /// Explicit difference cover of [0..tau^2); the simple cover when empty.
  std::optional<std::vector<std::uint32_t>> cover;
};

/// Sampled positions M = { i in [1..N] : i mod tau^2 in D } of the padded text.
/// The padded text is w followed by 1 + 2 tau^2 sentinels, so N = n + 1 + 2 tau^2.
class SampleSet {
 public:
  SampleSet(Position n, std::uint32_t tau, DifferenceCover cover);
  static SampleSet for_text(Position n, const IndexOptions& options = {});

  std::uint32_t tau() const noexcept { return tau_; }
  std::uint32_t period() const noexcept { return period_; }
  const DifferenceCover& cover() const noexcept { return cover_; }
  Position text_length() const noexcept { return n_; }
  Position padded_length() const noexcept { return padded_; }

  bool contains(Position i) const noexcept {
    return i >= 1 && i <= padded_ && cover_.contains(i % period_);
  }
  /// Dense index of a member in [0..size()).
  std::uint32_t index_of(Position member) const noexcept;
  std::uint32_t size() const noexcept { return count_; }

  /// Members inside [1..upto], ascending.
  std::vector<Position> members(Position upto) const;

 private:
  std::uint32_t members_below(Position i) const noexcept;  // members in [1..i)

  Position n_;
  std::uint32_t tau_;
  std::uint32_t period_;
  DifferenceCover cover_;
  Position padded_;
  std::vector<std::uint32_t> residue_rank_;  // #cover elements below each residue
  std::uint32_t count_ = 0;
};

class SparseLceIndex;

/// Right-to-left insertion of the sampled suffixes. Exposed step by step so
/// that the intermediate structures can be inspected.
class SparseLceBuilder {
 public:
  SparseLceBuilder(TextView text, SampleSet sample);

  bool done() const noexcept { return cursor_ == 0; }
  /// Next member to be inserted; 0 when done.
  Position cursor() const noexcept { return cursor_; }
  void step();
  void run() {
    while (!done()) step();
  }
  /// Runs to completion and emits the static index.
  SparseLceIndex finish() &&;

  const SampleSet& sample() const noexcept { return sample_; }
  const OrderMaintenanceList& order() const noexcept { return order_; }
  const RankMinTree& tree() const noexcept { return tree_; }
  const SparseTrie& trie() const noexcept { return trie_; }
  std::optional<OmNode> node_of(Position x) const;

 private:
  OmNode node_at(Position member) const noexcept { return OmNode{node_of_[sample_.index_of(member)]}; }
  RankMinTree::Length inserted_lce(OmNode a, OmNode b) const;
  Position advance(Position from) const noexcept;

  TextView text_;
  SampleSet sample_;
  OrderMaintenanceList order_;
  RankMinTree tree_;
  SparseTrie trie_;
  std::vector<std::uint32_t> node_of_;
  Position cursor_;
};

/// Sparse suffix array, sparse LCP array and RMQ over the sampled positions of
/// w, answering LCE for arbitrary positions with fewer than tau^2 symbol
/// comparisons. Holds a view of the text, which must outlive the index.
class SparseLceIndex {
 public:
  SparseLceIndex() : sample_(0, 1, DifferenceCover::build(1)) {}

  static SparseLceIndex build(TextView text, const IndexOptions& options = {});

  Position size() const noexcept { return text_.size(); }
  const SampleSet& sample() const noexcept { return sample_; }
  TextView text() const noexcept { return text_; }

  /// 1-based rank of x among sampled positions of [1..n]; 0 for others.
  std::uint32_t sa(Position x) const;
  /// Sampled positions of [1..n] in increasing suffix order.
  std::vector<Position> suffix_order() const;
  /// lcp[j] = LCE(suffix_order[j], suffix_order[j + 1]).
  std::span<const std::uint32_t> lcp() const noexcept { return rmq_.values(); }

  /// Longest common prefix of w[x..n] and w[y..n]; 1 <= x, y <= n.
  Position lce(Position x, Position y) const;
  /// LCE restricted to sampled x, y; no symbol comparisons.
  Position member_lce(Position x, Position y) const;

  std::size_t memory_bytes() const noexcept;

 private:
  friend class SparseLceBuilder;
  Position member_lce_unchecked(Position x, Position y) const noexcept;

  TextView text_;
  SampleSet sample_;
  std::vector<std::uint32_t> rank_;  // by member index, members of [1..n] only
  StaticRmq rmq_;
};

inline SparseLceIndex build_index(TextView text, const IndexOptions& options = {}) {
  return SparseLceIndex::build(text, options);
}

}  // namespace genruns
