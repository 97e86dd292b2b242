#include "genruns/order_maintenance.hpp"

#include <cmath>

#include "genruns/contract.hpp"

namespace genruns {

namespace {
// Density parameter T in (1, 2). With T = 1.4 a full 2^63 universe holds
// (2/1.4)^63 > 5e9 nodes.
constexpr double kDensityBase = 1.4;
}  // namespace

OrderMaintenanceList::OrderMaintenanceList() : OrderMaintenanceList(0) {}

OrderMaintenanceList::OrderMaintenanceList(std::size_t expected_size) {
  next_.reserve(expected_size + 1);
  prev_.reserve(expected_size + 1);
  label_.reserve(expected_size + 1);
  payload_.reserve(expected_size);
  next_.push_back(kNil);
  prev_.push_back(kNil);
  label_.push_back(0);
  density_limit_.resize(kUniverseBits + 1);
  for (int i = 0; i <= kUniverseBits; ++i) {
    density_limit_[i] = std::pow(2.0 / kDensityBase, i);
  }
}

void OrderMaintenanceList::check(OmNode n, const char* what) const {
  GENRUNS_EXPECTS(contains(n), what);
}

OmNode OrderMaintenanceList::insert_after(std::optional<OmNode> anchor, Position payload) {
  std::uint32_t at = kHead;
  if (anchor) {
    check(*anchor, "order-maintenance anchor is not a node of this list");
    at = anchor->id + 1;
  }
  GENRUNS_EXPECTS(payload_.size() + 1 < kNil, "order-maintenance list is full");

  if (upper_tag(at) - label_[at] < 2) relabel_around(at);

  const auto slot = static_cast<std::uint32_t>(label_.size());
  const std::uint64_t lo = label_[at];
  const std::uint64_t hi = upper_tag(at);
  label_.push_back(lo + (hi - lo) / 2);
  next_.push_back(next_[at]);
  prev_.push_back(at);
  if (next_[at] != kNil) {
    prev_[next_[at]] = slot;
  } else {
    tail_ = slot;
  }
  next_[at] = slot;
  payload_.push_back(payload);
  return OmNode{slot - 1};
}

OmNode OrderMaintenanceList::insert_before(OmNode anchor, Position payload) {
  check(anchor, "order-maintenance anchor is not a node of this list");
  const std::uint32_t before = prev_[anchor.id + 1];
  if (before == kHead) return insert_after(std::nullopt, payload);
  return insert_after(OmNode{before - 1}, payload);
}

void OrderMaintenanceList::relabel_around(std::uint32_t slot) {
  const std::uint64_t tag = label_[slot];
  for (int bits = 1; bits <= kUniverseBits; ++bits) {
    const std::uint64_t width = std::uint64_t{1} << bits;
    const std::uint64_t base = tag & ~(width - 1);
    const std::uint64_t end = base + width;  // exclusive; <= kUniverse

    std::uint32_t first = slot;
    while (prev_[first] != kNil && label_[prev_[first]] >= base) first = prev_[first];
    std::uint64_t count = 1;
    std::uint32_t last = slot;
    while (next_[last] != kNil && label_[next_[last]] < end) {
      last = next_[last];
      ++count;
    }
    for (std::uint32_t s = first; s != slot; s = next_[s]) ++count;

    // Room for the pending insertion too.
    if (static_cast<double>(count + 1) > density_limit_[bits]) continue;

    const std::uint64_t gap = width / (count + 1);
    if (gap < 2) continue;
    // The header keeps tag 0 whenever it falls in the range.
    std::uint64_t t = (first == kHead) ? 0 : base + gap;
    for (std::uint32_t s = first;; s = next_[s]) {
      label_[s] = t;
      ++relabel_work_;
      t += gap;
      if (s == last) break;
    }
    if (upper_tag(slot) - label_[slot] >= 2) return;
  }
  GENRUNS_EXPECTS(false, "order-maintenance tag space exhausted");
}

bool OrderMaintenanceList::precedes(OmNode a, OmNode b) const {
  check(a, "order query on a foreign node");
  check(b, "order query on a foreign node");
  return precedes_unchecked(a, b);
}

Position OrderMaintenanceList::payload(OmNode n) const {
  check(n, "payload of a foreign node");
  return payload_[n.id];
}

std::optional<OmNode> OrderMaintenanceList::next(OmNode n) const {
  check(n, "next of a foreign node");
  const std::uint32_t s = next_[n.id + 1];
  if (s == kNil) return std::nullopt;
  return OmNode{s - 1};
}

std::optional<OmNode> OrderMaintenanceList::prev(OmNode n) const {
  check(n, "prev of a foreign node");
  const std::uint32_t s = prev_[n.id + 1];
  if (s == kHead) return std::nullopt;
  return OmNode{s - 1};
}

std::optional<OmNode> OrderMaintenanceList::front() const {
  if (next_[kHead] == kNil) return std::nullopt;
  return OmNode{next_[kHead] - 1};
}

std::optional<OmNode> OrderMaintenanceList::back() const {
  if (tail_ == kHead) return std::nullopt;
  return OmNode{tail_ - 1};
}

std::vector<Position> OrderMaintenanceList::to_vector() const {
  std::vector<Position> out;
  out.reserve(payload_.size());
  for (std::uint32_t s = next_[kHead]; s != kNil; s = next_[s]) out.push_back(payload_[s - 1]);
  return out;
}

}  // namespace genruns
