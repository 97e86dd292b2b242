#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "genruns/symbols.hpp"

namespace genruns {

/// Handle to a node of an OrderMaintenanceList. Ids are dense, in allocation order.
struct OmNode {
  std::uint32_t id = 0;
  friend bool operator==(OmNode, OmNode) = default;
};

/// Linked list with O(1) order queries between nodes.
///
/// Each node carries a 64-bit tag; `precedes` compares tags. Insertion takes
/// the midpoint of the neighbouring tags. When there is no room, the smallest
/// aligned tag range around the anchor whose density is below the threshold
/// (2/T)^i for a range of 2^i tags is relabelled evenly. That gives O(log m)
/// amortized relabel work per insertion. Nodes are never deleted.
class OrderMaintenanceList {
 public:
  static constexpr std::uint32_t kNil = std::numeric_limits<std::uint32_t>::max();

  OrderMaintenanceList();
  explicit OrderMaintenanceList(std::size_t expected_size);

  /// Inserts a node right after `anchor`, or at the front for std::nullopt.
  OmNode insert_after(std::optional<OmNode> anchor, Position payload);
  /// Inserts a node right before `anchor`.
  OmNode insert_before(OmNode anchor, Position payload);

  /// True iff a is strictly earlier than b.
  bool precedes(OmNode a, OmNode b) const;
  bool precedes_unchecked(OmNode a, OmNode b) const noexcept {
    return label_[a.id + 1] < label_[b.id + 1];
  }

  Position payload(OmNode n) const;

  std::optional<OmNode> next(OmNode n) const;
  std::optional<OmNode> prev(OmNode n) const;
  std::optional<OmNode> front() const;
  std::optional<OmNode> back() const;

  std::size_t size() const noexcept { return payload_.size(); }
  bool contains(OmNode n) const noexcept { return n.id < payload_.size(); }

  /// Payloads from front to back.
  std::vector<Position> to_vector() const;

  /// Number of tag rewrites performed so far by relabelling.
  std::uint64_t relabel_work() const noexcept { return relabel_work_; }

 private:
  // Slot 0 is a header sentinel with tag 0; node id i lives in slot i + 1.
  static constexpr std::uint32_t kHead = 0;
  static constexpr int kUniverseBits = 63;
  static constexpr std::uint64_t kUniverse = std::uint64_t{1} << kUniverseBits;

  std::uint64_t upper_tag(std::uint32_t slot) const noexcept {
    return next_[slot] == kNil ? kUniverse : label_[next_[slot]];
  }
  void relabel_around(std::uint32_t slot);
  void check(OmNode n, const char* what) const;

  std::vector<std::uint32_t> next_;
  std::vector<std::uint32_t> prev_;
  std::vector<std::uint64_t> label_;
  std::vector<Position> payload_;
  std::uint32_t tail_ = kHead;
  std::uint64_t relabel_work_ = 0;
  std::vector<double> density_limit_;
};

inline OmNode om_insert_after(OrderMaintenanceList& list, std::optional<OmNode> anchor, Position payload) {
  return list.insert_after(anchor, payload);
}
inline bool om_precedes(const OrderMaintenanceList& list, OmNode a, OmNode b) {
  return list.precedes(a, b);
}

}  // namespace genruns
