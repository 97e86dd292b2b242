#include "genruns/sparse_lce.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>

#include "genruns/contract.hpp"

namespace genruns {

std::uint32_t choose_tau(std::uint64_t n) noexcept {
  if (n <= 1) return 1;
  // Smallest tau with tau^3 >= log2 n, i.e. 2^(tau^3) >= n.
  std::uint32_t tau = 1;
  while (tau * tau * tau < 64 && (std::uint64_t{1} << (tau * tau * tau)) < n) ++tau;
  return tau;
}

// --- SampleSet -------------------------------------------------------------

SampleSet::SampleSet(Position n, std::uint32_t tau, DifferenceCover cover)
    : n_(n), tau_(tau), period_(tau * tau), cover_(std::move(cover)) {
  if (tau == 0 || tau > 4096) throw std::invalid_argument("tau must be in [1..4096]");
  if (cover_.modulus() != period_) {
    throw std::invalid_argument("difference cover modulus must equal tau^2");
  }
  const std::uint64_t padded = std::uint64_t{n} + 1 + 2ull * period_;
  if (padded + period_ >= std::numeric_limits<Position>::max()) {
    throw std::invalid_argument("text too long for 32-bit positions");
  }
  padded_ = static_cast<Position>(padded);
  residue_rank_.assign(period_ + 1, 0);
  for (std::uint32_t r = 0; r < period_; ++r) {
    residue_rank_[r + 1] = residue_rank_[r] + (cover_.contains(r) ? 1 : 0);
  }
  count_ = members_below(padded_ + 1);
}

SampleSet SampleSet::for_text(Position n, const IndexOptions& options) {
  const std::uint32_t tau = options.tau == 0 ? choose_tau(n) : options.tau;
  if (tau == 0 || tau > 4096) throw std::invalid_argument("tau must be in [1..4096]");
  DifferenceCover cover = options.cover ? DifferenceCover::from_elements(tau * tau, *options.cover)
                                        : DifferenceCover::build(tau * tau);
  return SampleSet(n, tau, std::move(cover));
}

std::uint32_t SampleSet::members_below(Position i) const noexcept {
  const std::uint64_t from_zero =
      std::uint64_t{i / period_} * cover_.size() + residue_rank_[i % period_];
  return static_cast<std::uint32_t>(from_zero - (cover_.contains(0) ? 1 : 0));
}

std::uint32_t SampleSet::index_of(Position member) const noexcept { return members_below(member); }

std::vector<Position> SampleSet::members(Position upto) const {
  std::vector<Position> out;
  for (Position i = 1; i <= std::min(upto, padded_); ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

// --- SparseLceBuilder ------------------------------------------------------

SparseLceBuilder::SparseLceBuilder(TextView text, SampleSet sample)
    : text_(text),
      sample_(std::move(sample)),
      order_(sample_.size()),
      tree_(sample_.size()),
      trie_(text, sample_.period(), order_, sample_.size()),
      node_of_(sample_.size(), std::numeric_limits<std::uint32_t>::max()) {
  GENRUNS_EXPECTS(sample_.text_length() == text.size(), "sample set built for another length");
  cursor_ = advance(sample_.padded_length() + 1);
}

Position SparseLceBuilder::advance(Position from) const noexcept {
  Position k = from;
  while (k > 1) {
    --k;
    if (sample_.contains(k)) return k;
  }
  return 0;
}

std::optional<OmNode> SparseLceBuilder::node_of(Position x) const {
  if (!sample_.contains(x)) return std::nullopt;
  const std::uint32_t id = node_of_[sample_.index_of(x)];
  if (id == std::numeric_limits<std::uint32_t>::max()) return std::nullopt;
  return OmNode{id};
}

RankMinTree::Length SparseLceBuilder::inserted_lce(OmNode a, OmNode b) const {
  const std::uint32_t ra = tree_.rank(a);
  const std::uint32_t rb = tree_.rank(b);
  return tree_.range_min(std::min(ra, rb), std::max(ra, rb));
}

void SparseLceBuilder::step() {
  GENRUNS_EXPECTS(!done(), "builder already finished");
  const Position k = cursor_;
  const Position n = sample_.text_length();
  const Position padded = sample_.padded_length();
  const std::uint32_t span = sample_.period();

  std::optional<OmNode> anchor;
  std::optional<RankMinTree::Length> lcp_left;
  std::optional<RankMinTree::Length> lcp_right;

  if (k > n) {
    // Sentinel-only suffix, longer than every one inserted so far and smaller
    // than every suffix of w: it goes last among the sentinel block, which so
    // far is the whole list. LCE with the previous one is that one's length.
    anchor = order_.back();
    if (anchor) lcp_left = padded - order_.payload(*anchor) + 1;
    const OmNode node = order_.insert_after(anchor, k);
    tree_.insert(anchor, node, lcp_left, lcp_right);
    node_of_[sample_.index_of(k)] = node.id;
    cursor_ = advance(k);
    return;
  }

  const OmNode shifted = node_at(k + span);
  const TrieInsertOutcome key = trie_.insert_key(k);
  if (key.is_new) {
    // Neighbours are the extreme suffixes of the adjacent key groups. Every
    // suffix of w is larger than the sentinel block, so a list predecessor
    // always exists.
    if (key.succ) {
      const OmNode first = node_at(order_.payload(*trie_.first_member(*key.succ)) - span);
      anchor = order_.prev(first);
      lcp_left = key.pred ? key.lcp_pred : 0;
      lcp_right = key.lcp_succ;
    } else if (key.pred) {
      anchor = node_at(order_.payload(*trie_.last_member(*key.pred)) - span);
      lcp_left = key.lcp_pred;
    } else {
      anchor = order_.back();
      lcp_left = 0;
    }
  } else {
    const auto [pred, succ] = trie_.neighbors(key.leaf, shifted);
    if (pred) {
      anchor = node_at(order_.payload(*pred) - span);
      lcp_left = span + inserted_lce(shifted, *pred);
      if (succ) {
        assert(order_.next(*anchor) == node_at(order_.payload(*succ) - span));
        lcp_right = span + inserted_lce(shifted, *succ);
      } else {
        // Largest of its key group: the next suffix has a different key, so
        // the new suffix shares with it exactly what the anchor did.
        lcp_right = tree_.stored_lcp(*anchor);
      }
    } else {
      GENRUNS_EXPECTS(succ.has_value(), "existing key with an empty leaf set");
      const OmNode next = node_at(order_.payload(*succ) - span);
      anchor = order_.prev(next);
      lcp_left = tree_.stored_lcp(*anchor);
      lcp_right = span + inserted_lce(shifted, *succ);
    }
  }
  GENRUNS_EXPECTS(anchor.has_value(), "suffix of w without a list predecessor");

  const OmNode node = order_.insert_after(anchor, k);
  tree_.insert(anchor, node, lcp_left, lcp_right);
  node_of_[sample_.index_of(k)] = node.id;
  trie_.add(key.leaf, shifted);
  cursor_ = advance(k);
}

SparseLceIndex SparseLceBuilder::finish() && {
  run();
  // Only the list and the tree are read from here on.
  trie_ = SparseTrie(text_, sample_.period(), order_);
  std::vector<std::uint32_t>().swap(node_of_);

  SparseLceIndex index;
  index.text_ = text_;
  index.sample_ = sample_;
  const Position n = sample_.text_length();
  const std::size_t real = sample_.index_of(n + 1);  // members of [1..n]
  index.rank_.assign(real, 0);

  std::vector<std::uint32_t> lcp;
  lcp.reserve(real);
  std::uint32_t rank = 0;
  for (auto node = order_.front(); node; node = order_.next(*node)) {
    const Position pos = order_.payload(*node);
    if (pos > n) continue;
    index.rank_[sample_.index_of(pos)] = ++rank;
    if (const auto value = tree_.stored_lcp(*node)) lcp.push_back(*value);
  }
  index.rmq_ = StaticRmq(std::move(lcp));
  return index;
}

// --- SparseLceIndex --------------------------------------------------------

SparseLceIndex SparseLceIndex::build(TextView text, const IndexOptions& options) {
  return SparseLceBuilder(text, SampleSet::for_text(text.size(), options)).finish();
}

std::uint32_t SparseLceIndex::sa(Position x) const {
  GENRUNS_EXPECTS(x >= 1 && x <= size(), "position outside [1..n]");
  if (!sample_.contains(x)) return 0;
  return rank_[sample_.index_of(x)];
}

std::vector<Position> SparseLceIndex::suffix_order() const {
  std::vector<Position> out(rank_.size());
  for (Position x = 1; x <= size(); ++x) {
    if (sample_.contains(x)) out[rank_[sample_.index_of(x)] - 1] = x;
  }
  return out;
}

Position SparseLceIndex::member_lce_unchecked(Position x, Position y) const noexcept {
  if (x == y) return size() - x + 1;
  const std::uint32_t rx = rank_[sample_.index_of(x)];
  const std::uint32_t ry = rank_[sample_.index_of(y)];
  // ranks are 1-based; lcp[j] sits between ranks j + 1 and j + 2
  return rmq_.query_unchecked(std::min(rx, ry) - 1, std::max(rx, ry) - 2);
}

Position SparseLceIndex::member_lce(Position x, Position y) const {
  GENRUNS_EXPECTS(x >= 1 && x <= size() && y >= 1 && y <= size(), "position outside [1..n]");
  GENRUNS_EXPECTS(sample_.contains(x) && sample_.contains(y), "member_lce on an unsampled position");
  return member_lce_unchecked(x, y);
}

Position SparseLceIndex::lce(Position x, Position y) const {
  const Position n = size();
  GENRUNS_EXPECTS(x >= 1 && x <= n && y >= 1 && y <= n, "position outside [1..n]");
  if (x == y) return n - x + 1;
  const std::uint32_t shift = sample_.cover().find_shift(x, y);
  const Position room = n - std::max(x, y) + 1;
  for (Position d = 0; d < shift; ++d) {
    if (d == room || !text_.equal_at(x + d, y + d)) return d;
  }
  if (shift >= room) return room;
  return shift + member_lce_unchecked(x + shift, y + shift);
}

std::size_t SparseLceIndex::memory_bytes() const noexcept {
  return rank_.capacity() * sizeof(std::uint32_t) + rmq_.memory_bytes();
}

}  // namespace genruns
