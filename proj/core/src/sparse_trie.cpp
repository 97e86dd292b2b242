#include "genruns/sparse_trie.hpp"

#include <algorithm>

#include "genruns/contract.hpp"
#include "genruns/detail/mix.hpp"

namespace genruns {

namespace {
constexpr std::uint64_t kSetSalt = 0x7e5a11ull << 32;
}

SparseTrie::SparseTrie(TextView text, std::uint32_t span, const OrderMaintenanceList& order,
                       std::size_t expected_members)
    : text_(text), n_(text.size()), span_(span), order_(&order) {
  leaf_rep_.reserve(expected_members);
  leaf_set_.reserve(expected_members);
  set_left_.assign(expected_members, kAbsent);
  set_right_.assign(expected_members, kNil);
  new_internal(0, 0);  // root
}

std::strong_ordering SparseTrie::compare_padded(Position i, Position j) const noexcept {
  const bool pad_i = i > n_;
  const bool pad_j = j > n_;
  if (pad_i || pad_j) {
    if (pad_i && pad_j) return std::strong_ordering::equal;
    return pad_i ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return text_.compare_at(i, j);
}

std::uint32_t SparseTrie::new_internal(Position rep, std::uint32_t depth) {
  const auto v = static_cast<std::uint32_t>(rep_.size());
  rep_.push_back(rep);
  depth_.push_back(depth);
  children_.emplace_back();
  return v;
}

std::uint32_t SparseTrie::new_leaf(Position rep) {
  const auto id = static_cast<std::uint32_t>(leaf_rep_.size());
  GENRUNS_EXPECTS(id < kLeafBit, "too many trie leaves");
  leaf_rep_.push_back(rep);
  leaf_set_.push_back(kNil);
  return id | kLeafBit;
}

std::uint32_t SparseTrie::extreme_leaf(std::uint32_t v, bool rightmost) const noexcept {
  while (!is_leaf(v)) {
    const auto& ch = children_[v];
    v = rightmost ? ch.back() : ch.front();
  }
  return v & ~kLeafBit;
}

TrieInsertOutcome SparseTrie::insert_key(Position x) {
  GENRUNS_EXPECTS(x >= 1 && x <= n_, "trie key must start inside the text");

  struct Step {
    std::uint32_t node;
    std::uint32_t slot;
  };
  std::vector<Step> path;
  path.reserve(span_ + 2);

  std::uint32_t v = 0;
  Step branch{};
  std::uint32_t leaf = kNil;
  for (;;) {
    const std::uint32_t d = depth_[v];
    std::size_t lo = 0;
    std::size_t hi = children_[v].size();
    std::size_t found = hi;
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      const auto c = compare_padded(x + d, rep_of(children_[v][mid]) + d);
      if (c == 0) {
        found = mid;
        break;
      }
      if (c < 0) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    if (found == children_[v].size()) {
      leaf = new_leaf(x);
      children_[v].insert(children_[v].begin() + static_cast<std::ptrdiff_t>(lo), leaf);
      branch = {v, static_cast<std::uint32_t>(lo)};
      break;
    }

    const std::uint32_t u = children_[v][found];
    path.push_back({v, static_cast<std::uint32_t>(found)});
    const std::uint32_t du = depth_of(u);
    const Position ru = rep_of(u);
    std::uint32_t e = d + 1;
    auto c = std::strong_ordering::equal;
    while (e < du) {
      c = compare_padded(x + e, ru + e);
      if (c != 0) break;
      ++e;
    }
    if (e < du) {
      const std::uint32_t s = new_internal(ru, e);
      leaf = new_leaf(x);
      if (c < 0) {
        children_[s] = {leaf, u};
        branch = {s, 0};
      } else {
        children_[s] = {u, leaf};
        branch = {s, 1};
      }
      children_[v][found] = s;
      break;
    }
    if (is_leaf(u)) {
      TrieInsertOutcome out;
      out.leaf = TrieLeaf{u & ~kLeafBit};
      return out;
    }
    v = u;
  }

  TrieInsertOutcome out;
  out.is_new = true;
  out.leaf = TrieLeaf{leaf & ~kLeafBit};

  // Nearest sibling subtree on each side, looking upward from the branch.
  auto consider = [&](const Step& step, std::uint32_t own_slot) {
    const auto& ch = children_[step.node];
    if (!out.pred && own_slot > 0) {
      out.pred = TrieLeaf{extreme_leaf(ch[own_slot - 1], true)};
      out.lcp_pred = depth_[step.node];
    }
    if (!out.succ && own_slot + 1 < ch.size()) {
      out.succ = TrieLeaf{extreme_leaf(ch[own_slot + 1], false)};
      out.lcp_succ = depth_[step.node];
    }
  };
  consider(branch, branch.slot);
  for (auto it = path.rbegin(); it != path.rend() && !(out.pred && out.succ); ++it) {
    consider(*it, it->slot);
  }
  return out;
}

std::optional<TrieLeaf> SparseTrie::find(Position x) const {
  GENRUNS_EXPECTS(x >= 1 && x <= n_, "trie key must start inside the text");
  std::uint32_t v = 0;
  for (;;) {
    const std::uint32_t d = depth_[v];
    const auto& ch = children_[v];
    auto it = std::lower_bound(ch.begin(), ch.end(), x, [&](std::uint32_t child, Position key) {
      return compare_padded(rep_of(child) + d, key + d) < 0;
    });
    if (it == ch.end() || compare_padded(rep_of(*it) + d, x + d) != 0) return std::nullopt;
    const std::uint32_t u = *it;
    for (std::uint32_t e = d + 1; e < depth_of(u); ++e) {
      if (compare_padded(x + e, rep_of(u) + e) != 0) return std::nullopt;
    }
    if (is_leaf(u)) return TrieLeaf{u & ~kLeafBit};
    v = u;
  }
}

void SparseTrie::check_leaf(TrieLeaf leaf) const {
  GENRUNS_EXPECTS(leaf.id < leaf_rep_.size(), "not a leaf of this trie");
}

Position SparseTrie::leaf_key(TrieLeaf leaf) const {
  check_leaf(leaf);
  return leaf_rep_[leaf.id];
}

std::vector<TrieLeaf> SparseTrie::leaves_in_order() const {
  std::vector<TrieLeaf> out;
  std::vector<std::uint32_t> stack{0};
  while (!stack.empty()) {
    const std::uint32_t v = stack.back();
    stack.pop_back();
    if (is_leaf(v)) {
      out.push_back(TrieLeaf{v & ~kLeafBit});
      continue;
    }
    const auto& ch = children_[v];
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

std::pair<std::optional<OmNode>, std::optional<OmNode>> SparseTrie::neighbors(TrieLeaf leaf,
                                                                              OmNode probe) const {
  check_leaf(leaf);
  GENRUNS_EXPECTS(order_->contains(probe), "probe is not a list node");
  GENRUNS_EXPECTS(!is_member(probe), "probe is already in a leaf set");
  std::optional<OmNode> pred;
  std::optional<OmNode> succ;
  for (std::uint32_t t = leaf_set_[leaf.id]; t != kNil;) {
    if (set_less(t, probe.id)) {
      pred = OmNode{t};
      t = set_right_[t];
    } else {
      succ = OmNode{t};
      t = set_left_[t];
    }
  }
  return {pred, succ};
}

void SparseTrie::set_split(std::uint32_t t, std::uint32_t key, std::uint32_t& lo, std::uint32_t& hi) {
  if (t == kNil) {
    lo = hi = kNil;
    return;
  }
  if (set_less(t, key)) {
    set_split(set_right_[t], key, set_right_[t], hi);
    lo = t;
  } else {
    set_split(set_left_[t], key, lo, set_left_[t]);
    hi = t;
  }
}

std::uint32_t SparseTrie::set_insert(std::uint32_t t, std::uint32_t x) {
  if (t == kNil) return x;
  if (detail::mix32(kSetSalt | x) > detail::mix32(kSetSalt | t)) {
    set_split(t, x, set_left_[x], set_right_[x]);
    return x;
  }
  if (set_less(x, t)) {
    set_left_[t] = set_insert(set_left_[t], x);
  } else {
    set_right_[t] = set_insert(set_right_[t], x);
  }
  return t;
}

void SparseTrie::add(TrieLeaf leaf, OmNode node) {
  check_leaf(leaf);
  GENRUNS_EXPECTS(order_->contains(node), "set member is not a list node");
  GENRUNS_EXPECTS(!is_member(node), "node is already in a leaf set");
  if (node.id >= set_left_.size()) {
    const std::size_t n = std::max<std::size_t>(node.id + 1, set_left_.size() * 3 / 2);
    set_left_.resize(n, kAbsent);
    set_right_.resize(n, kNil);
  }
  set_left_[node.id] = set_right_[node.id] = kNil;
  leaf_set_[leaf.id] = set_insert(leaf_set_[leaf.id], node.id);
}

std::optional<OmNode> SparseTrie::first_member(TrieLeaf leaf) const {
  check_leaf(leaf);
  std::uint32_t t = leaf_set_[leaf.id];
  if (t == kNil) return std::nullopt;
  while (set_left_[t] != kNil) t = set_left_[t];
  return OmNode{t};
}

std::optional<OmNode> SparseTrie::last_member(TrieLeaf leaf) const {
  check_leaf(leaf);
  std::uint32_t t = leaf_set_[leaf.id];
  if (t == kNil) return std::nullopt;
  while (set_right_[t] != kNil) t = set_right_[t];
  return OmNode{t};
}

std::vector<OmNode> SparseTrie::members(TrieLeaf leaf) const {
  check_leaf(leaf);
  std::vector<OmNode> out;
  std::vector<std::uint32_t> stack;
  std::uint32_t t = leaf_set_[leaf.id];
  while (t != kNil || !stack.empty()) {
    while (t != kNil) {
      stack.push_back(t);
      t = set_left_[t];
    }
    t = stack.back();
    stack.pop_back();
    out.push_back(OmNode{t});
    t = set_right_[t];
  }
  return out;
}

}  // namespace genruns
