#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "genruns/order_maintenance.hpp"
#include "genruns/symbols.hpp"

namespace genruns {

struct TrieLeaf {
  std::uint32_t id = 0;
  friend bool operator==(TrieLeaf, TrieLeaf) = default;
};

/// Result of inserting a key. For a new key the lexicographic neighbour
/// leaves and the key-LCP with each are reported (0 when absent).
struct TrieInsertOutcome {
  bool is_new = false;
  TrieLeaf leaf;
  std::optional<TrieLeaf> pred;
  std::optional<TrieLeaf> succ;
  std::uint32_t lcp_pred = 0;
  std::uint32_t lcp_succ = 0;
};

/// Compacted trie over the fixed-length keys w[x..x+span] of the padded text
/// (positions past n read as a sentinel below every symbol). Edges reference
/// the text by position, children are kept sorted by first edge symbol.
///
/// Every leaf owns an ordered set of list nodes, ordered by the list's order
/// relation. The sets share one treap arena indexed by node id; a node belongs
/// to at most one set.
class SparseTrie {
 public:
  /// `expected_members` presizes the leaf-set arrays (list nodes) and the node arrays.
  SparseTrie(TextView text, std::uint32_t span, const OrderMaintenanceList& order,
             std::size_t expected_members = 0);

  /// Inserts the key starting at padded position x (1 <= x <= n).
  TrieInsertOutcome insert_key(Position x);
  /// Leaf holding the key at x, if present. No insertion.
  std::optional<TrieLeaf> find(Position x) const;

  /// Some position whose key is this leaf's key.
  Position leaf_key(TrieLeaf leaf) const;
  std::size_t leaf_count() const noexcept { return leaf_rep_.size(); }
  std::vector<TrieLeaf> leaves_in_order() const;
  std::uint32_t key_length() const noexcept { return span_ + 1; }

  /// Greatest member strictly before `probe` and least member strictly after
  /// it. `probe` must not be a member of any set.
  std::pair<std::optional<OmNode>, std::optional<OmNode>> neighbors(TrieLeaf leaf, OmNode probe) const;
  void add(TrieLeaf leaf, OmNode node);
  std::optional<OmNode> first_member(TrieLeaf leaf) const;
  std::optional<OmNode> last_member(TrieLeaf leaf) const;
  std::vector<OmNode> members(TrieLeaf leaf) const;
  bool is_member(OmNode node) const noexcept {
    return node.id < set_left_.size() && set_left_[node.id] != kAbsent;
  }

  std::size_t node_count() const noexcept { return rep_.size() + leaf_rep_.size(); }

 private:
  static constexpr std::uint32_t kNil = std::numeric_limits<std::uint32_t>::max();
  static constexpr std::uint32_t kAbsent = kNil - 1;  // set_left_ of a non-member
  static constexpr std::uint32_t kLeafBit = 1u << 31;

  std::strong_ordering compare_padded(Position i, Position j) const noexcept;
  static bool is_leaf(std::uint32_t v) noexcept { return (v & kLeafBit) != 0; }
  Position rep_of(std::uint32_t v) const noexcept { return is_leaf(v) ? leaf_rep_[v & ~kLeafBit] : rep_[v]; }
  std::uint32_t depth_of(std::uint32_t v) const noexcept { return is_leaf(v) ? span_ + 1 : depth_[v]; }
  void check_leaf(TrieLeaf leaf) const;
  std::uint32_t new_internal(Position rep, std::uint32_t depth);
  std::uint32_t new_leaf(Position rep);
  std::uint32_t extreme_leaf(std::uint32_t v, bool rightmost) const noexcept;

  bool set_less(std::uint32_t a, std::uint32_t b) const noexcept {
    return order_->precedes_unchecked(OmNode{a}, OmNode{b});
  }
  std::uint32_t set_insert(std::uint32_t t, std::uint32_t x);
  void set_split(std::uint32_t t, std::uint32_t key, std::uint32_t& lo, std::uint32_t& hi);

  TextView text_;
  Position n_;
  std::uint32_t span_;
  const OrderMaintenanceList* order_;

  // Internal nodes by index; child references carry kLeafBit for leaves.
  std::vector<Position> rep_;
  std::vector<std::uint32_t> depth_;
  std::vector<std::vector<std::uint32_t>> children_;
  // Leaves by TrieLeaf::id: a key position and the root of the member set.
  std::vector<Position> leaf_rep_;
  std::vector<std::uint32_t> leaf_set_;

  std::vector<std::uint32_t> set_left_, set_right_;
};

}  // namespace genruns
