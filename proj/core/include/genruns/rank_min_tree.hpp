#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "genruns/order_maintenance.hpp"

namespace genruns {

/// Balanced tree over the nodes of the lexicographic list, kept in list order.
/// Each entry stores the LCE between its suffix and the next entry's suffix
/// (the last entry stores kTop). Subtree size and subtree minimum are
/// aggregated so that both rank and range-minimum take O(log m).
///
/// Balancing is a treap with priorities hashed from the node id, so the shape
/// is deterministic for a given insertion script.
class RankMinTree {
 public:
  using Length = std::uint32_t;
  static constexpr Length kTop = std::numeric_limits<Length>::max();

  RankMinTree() = default;
  explicit RankMinTree(std::size_t expected_size);

  /// Inserts `node` right after `after` (front for std::nullopt). `lcp_left`
  /// replaces after's stored value and must be present iff `after` is;
  /// `lcp_right` becomes the new entry's value and must be present iff the
  /// new entry has a successor.
  void insert(std::optional<OmNode> after, OmNode node, std::optional<Length> lcp_left,
              std::optional<Length> lcp_right);

  /// Number of entries strictly before `node`.
  std::uint32_t rank(OmNode node) const;

  /// Minimum stored value over ranks [from_rank .. to_rank - 1].
  /// Requires from_rank < to_rank < size().
  Length range_min(std::uint32_t from_rank, std::uint32_t to_rank) const;

  /// Stored value of `node`; std::nullopt for the last entry.
  std::optional<Length> stored_lcp(OmNode node) const;

  bool contains(OmNode node) const noexcept {
    return node.id < size_.size() && size_[node.id] != 0;
  }
  std::uint32_t size() const noexcept { return root_ == kNil ? 0 : size_[root_]; }
  std::uint32_t height() const;

  /// In-order node ids.
  std::vector<OmNode> in_order() const;
  /// Stored values in order, without the trailing kTop.
  std::vector<Length> lcp_sequence() const;

  /// Recomputes every aggregate and parent link; false on any mismatch.
  bool aggregates_consistent() const;

 private:
  static constexpr std::uint32_t kNil = std::numeric_limits<std::uint32_t>::max();

  std::uint32_t sz(std::uint32_t x) const noexcept { return x == kNil ? 0 : size_[x]; }
  Length mn(std::uint32_t x) const noexcept { return x == kNil ? kTop : min_[x]; }
  void pull(std::uint32_t x) noexcept;
  void rotate_up(std::uint32_t x) noexcept;
  void ensure_slot(std::uint32_t id);
  std::uint32_t leftmost(std::uint32_t x) const noexcept;
  std::uint32_t rightmost(std::uint32_t x) const noexcept;
  std::uint32_t successor(std::uint32_t x) const noexcept;
  Length query(std::uint32_t x, std::uint32_t lo, std::uint32_t hi) const noexcept;
  static std::uint32_t priority(std::uint32_t id) noexcept;

  std::vector<std::uint32_t> left_, right_, parent_, size_;
  std::vector<Length> min_, lcp_;
  std::uint32_t root_ = kNil;
};

}  // namespace genruns
