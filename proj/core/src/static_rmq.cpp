#include "genruns/static_rmq.hpp"

#include <algorithm>
#include <bit>

#include "genruns/contract.hpp"

namespace genruns {

StaticRmq::StaticRmq(std::vector<std::uint32_t> values) : values_(std::move(values)) {
  const std::size_t blocks = (values_.size() + kBlock - 1) / kBlock;
  if (blocks == 0) return;
  std::vector<std::uint32_t> level(blocks);
  for (std::size_t b = 0; b < blocks; ++b) {
    const auto first = values_.begin() + static_cast<std::ptrdiff_t>(b * kBlock);
    const auto last = values_.begin() + static_cast<std::ptrdiff_t>(std::min(values_.size(), (b + 1) * kBlock));
    level[b] = *std::min_element(first, last);
  }
  table_.push_back(std::move(level));
  for (std::size_t span = 2; span <= blocks; span *= 2) {
    const auto& prev = table_.back();
    std::vector<std::uint32_t> next(blocks - span + 1);
    for (std::size_t b = 0; b < next.size(); ++b) next[b] = std::min(prev[b], prev[b + span / 2]);
    table_.push_back(std::move(next));
  }
}

std::uint32_t StaticRmq::scan(std::size_t l, std::size_t r) const noexcept {
  return *std::min_element(values_.begin() + static_cast<std::ptrdiff_t>(l),
                           values_.begin() + static_cast<std::ptrdiff_t>(r) + 1);
}

std::uint32_t StaticRmq::query_unchecked(std::size_t l, std::size_t r) const noexcept {
  const std::size_t bl = l / kBlock;
  const std::size_t br = r / kBlock;
  if (br - bl <= 1) return scan(l, r);
  std::uint32_t best = std::min(scan(l, (bl + 1) * kBlock - 1), scan(br * kBlock, r));
  const std::size_t first = bl + 1;
  const std::size_t count = br - first;
  const auto j = static_cast<std::size_t>(std::bit_width(count) - 1);
  const std::size_t span = std::size_t{1} << j;
  return std::min({best, table_[j][first], table_[j][br - span]});
}

std::uint32_t StaticRmq::query(std::size_t l, std::size_t r) const {
  GENRUNS_EXPECTS(l <= r && r < values_.size(), "rmq range out of bounds");
  return query_unchecked(l, r);
}

std::size_t StaticRmq::memory_bytes() const noexcept {
  std::size_t bytes = values_.capacity() * sizeof(std::uint32_t);
  for (const auto& level : table_) bytes += level.capacity() * sizeof(std::uint32_t);
  return bytes;
}

}  // namespace genruns
