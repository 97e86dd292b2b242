#include "genruns/rank_min_tree.hpp"

#include <algorithm>
#include <functional>

#include "genruns/contract.hpp"
#include "genruns/detail/mix.hpp"

namespace genruns {

RankMinTree::RankMinTree(std::size_t expected_size) {
  left_.reserve(expected_size);
  right_.reserve(expected_size);
  parent_.reserve(expected_size);
  size_.reserve(expected_size);
  min_.reserve(expected_size);
  lcp_.reserve(expected_size);
}

std::uint32_t RankMinTree::priority(std::uint32_t id) noexcept { return detail::mix32(id); }

void RankMinTree::ensure_slot(std::uint32_t id) {
  if (id < size_.size()) return;
  const std::size_t n = static_cast<std::size_t>(id) + 1;
  left_.resize(n, kNil);
  right_.resize(n, kNil);
  parent_.resize(n, kNil);
  size_.resize(n, 0);
  min_.resize(n, kTop);
  lcp_.resize(n, kTop);
}

void RankMinTree::pull(std::uint32_t x) noexcept {
  size_[x] = 1 + sz(left_[x]) + sz(right_[x]);
  min_[x] = std::min({lcp_[x], mn(left_[x]), mn(right_[x])});
}

void RankMinTree::rotate_up(std::uint32_t x) noexcept {
  const std::uint32_t p = parent_[x];
  const std::uint32_t g = parent_[p];
  if (left_[p] == x) {
    left_[p] = right_[x];
    if (right_[x] != kNil) parent_[right_[x]] = p;
    right_[x] = p;
  } else {
    right_[p] = left_[x];
    if (left_[x] != kNil) parent_[left_[x]] = p;
    left_[x] = p;
  }
  parent_[p] = x;
  parent_[x] = g;
  if (g == kNil) {
    root_ = x;
  } else if (left_[g] == p) {
    left_[g] = x;
  } else {
    right_[g] = x;
  }
  pull(p);
  pull(x);
}

std::uint32_t RankMinTree::leftmost(std::uint32_t x) const noexcept {
  while (left_[x] != kNil) x = left_[x];
  return x;
}

std::uint32_t RankMinTree::rightmost(std::uint32_t x) const noexcept {
  while (right_[x] != kNil) x = right_[x];
  return x;
}

std::uint32_t RankMinTree::successor(std::uint32_t x) const noexcept {
  if (right_[x] != kNil) return leftmost(right_[x]);
  while (parent_[x] != kNil && right_[parent_[x]] == x) x = parent_[x];
  return parent_[x];
}

void RankMinTree::insert(std::optional<OmNode> after, OmNode node, std::optional<Length> lcp_left,
                         std::optional<Length> lcp_right) {
  GENRUNS_EXPECTS(!contains(node), "node already in the rank/min tree");
  GENRUNS_EXPECTS(!after || contains(*after), "insertion anchor not in the rank/min tree");
  GENRUNS_EXPECTS(after.has_value() == lcp_left.has_value(),
                  "left lcp must be given exactly when there is a predecessor");
  const bool has_successor = after ? successor(after->id) != kNil : root_ != kNil;
  GENRUNS_EXPECTS(has_successor == lcp_right.has_value(),
                  "right lcp must be given exactly when there is a successor");
  GENRUNS_EXPECTS(!lcp_left || *lcp_left != kTop, "lcp value collides with the top marker");
  GENRUNS_EXPECTS(!lcp_right || *lcp_right != kTop, "lcp value collides with the top marker");

  const std::uint32_t x = node.id;
  ensure_slot(x);
  left_[x] = right_[x] = parent_[x] = kNil;
  lcp_[x] = lcp_right.value_or(kTop);

  if (root_ == kNil) {
    root_ = x;
  } else if (!after) {
    const std::uint32_t first = leftmost(root_);
    left_[first] = x;
    parent_[x] = first;
  } else {
    const std::uint32_t a = after->id;
    lcp_[a] = *lcp_left;
    if (right_[a] == kNil) {
      right_[a] = x;
      parent_[x] = a;
    } else {
      const std::uint32_t s = leftmost(right_[a]);
      left_[s] = x;
      parent_[x] = s;
    }
  }
  // `after` lies on the path from x to the root, so one upward pass restores
  // every aggregate touched by both changes.
  for (std::uint32_t y = x; y != kNil; y = parent_[y]) pull(y);

  const std::uint32_t px = priority(x);
  while (parent_[x] != kNil && priority(parent_[x]) < px) rotate_up(x);
}

std::uint32_t RankMinTree::rank(OmNode node) const {
  GENRUNS_EXPECTS(contains(node), "rank of a node not in the tree");
  std::uint32_t x = node.id;
  std::uint32_t r = sz(left_[x]);
  while (parent_[x] != kNil) {
    const std::uint32_t p = parent_[x];
    if (right_[p] == x) r += sz(left_[p]) + 1;
    x = p;
  }
  return r;
}

RankMinTree::Length RankMinTree::query(std::uint32_t x, std::uint32_t lo, std::uint32_t hi) const noexcept {
  Length best = kTop;
  while (x != kNil && lo < hi) {
    if (lo == 0 && hi >= size_[x]) return std::min(best, min_[x]);
    const std::uint32_t ls = sz(left_[x]);
    if (hi <= ls) {
      x = left_[x];
      continue;
    }
    if (lo > ls) {
      lo -= ls + 1;
      hi -= ls + 1;
      x = right_[x];
      continue;
    }
    // The range straddles x: the left part is a suffix of the left subtree,
    // the right part a prefix of the right subtree.
    best = std::min(best, lcp_[x]);
    for (std::uint32_t y = left_[x], a = lo; y != kNil && a < sz(y);) {
      const std::uint32_t yl = sz(left_[y]);
      if (a <= yl) {
        best = std::min({best, lcp_[y], mn(right_[y])});
        y = left_[y];
      } else {
        a -= yl + 1;
        y = right_[y];
      }
    }
    for (std::uint32_t y = right_[x], b = hi - ls - 1; y != kNil && b > 0;) {
      const std::uint32_t yl = sz(left_[y]);
      if (b > yl) {
        best = std::min({best, lcp_[y], mn(left_[y])});
        b -= yl + 1;
        y = right_[y];
      } else {
        y = left_[y];
      }
    }
    return best;
  }
  return best;
}

RankMinTree::Length RankMinTree::range_min(std::uint32_t from_rank, std::uint32_t to_rank) const {
  GENRUNS_EXPECTS(from_rank < to_rank && to_rank < size(), "rank range out of bounds");
  return query(root_, from_rank, to_rank);
}

std::optional<RankMinTree::Length> RankMinTree::stored_lcp(OmNode node) const {
  GENRUNS_EXPECTS(contains(node), "stored lcp of a node not in the tree");
  if (lcp_[node.id] == kTop) return std::nullopt;
  return lcp_[node.id];
}

std::uint32_t RankMinTree::height() const {
  std::function<std::uint32_t(std::uint32_t)> depth = [&](std::uint32_t x) -> std::uint32_t {
    if (x == kNil) return 0;
    return 1 + std::max(depth(left_[x]), depth(right_[x]));
  };
  return depth(root_);
}

std::vector<OmNode> RankMinTree::in_order() const {
  std::vector<OmNode> out;
  if (root_ == kNil) return out;
  out.reserve(size());
  for (std::uint32_t x = leftmost(root_); x != kNil; x = successor(x)) out.push_back(OmNode{x});
  return out;
}

std::vector<RankMinTree::Length> RankMinTree::lcp_sequence() const {
  std::vector<Length> out;
  for (OmNode n : in_order()) out.push_back(lcp_[n.id]);
  if (!out.empty()) out.pop_back();
  return out;
}

bool RankMinTree::aggregates_consistent() const {
  bool ok = true;
  std::function<void(std::uint32_t, std::uint32_t)> visit = [&](std::uint32_t x, std::uint32_t p) {
    if (x == kNil) return;
    if (parent_[x] != p) ok = false;
    visit(left_[x], x);
    visit(right_[x], x);
    if (size_[x] != 1 + sz(left_[x]) + sz(right_[x])) ok = false;
    if (min_[x] != std::min({lcp_[x], mn(left_[x]), mn(right_[x])})) ok = false;
    if (left_[x] != kNil && priority(left_[x]) > priority(x)) ok = false;
    if (right_[x] != kNil && priority(right_[x]) > priority(x)) ok = false;
  };
  visit(root_, kNil);
  if (root_ != kNil && rightmost(root_) != kNil && lcp_[rightmost(root_)] != kTop) ok = false;
  return ok;
}

}  // namespace genruns
