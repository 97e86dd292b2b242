#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace genruns {

/// Immutable range-minimum over a value array. Blocks of 32 values; a doubling
/// table over block minima answers whole-block spans, partial blocks are
/// scanned. Queries touch at most 64 values plus two table entries.
class StaticRmq {
 public:
  static constexpr std::size_t kBlock = 32;

  StaticRmq() = default;
  explicit StaticRmq(std::vector<std::uint32_t> values);

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const std::uint32_t> values() const noexcept { return values_; }

  /// min(values[l..r]); requires l <= r < size(). Throws ContractViolation otherwise.
  std::uint32_t query(std::size_t l, std::size_t r) const;
  std::uint32_t query_unchecked(std::size_t l, std::size_t r) const noexcept;

  std::size_t memory_bytes() const noexcept;

 private:
  std::uint32_t scan(std::size_t l, std::size_t r) const noexcept;

  std::vector<std::uint32_t> values_;
  // table_[j][b] = min of block minima b .. b + 2^j - 1.
  std::vector<std::vector<std::uint32_t>> table_;
};

inline StaticRmq rmq_build(std::vector<std::uint32_t> values) { return StaticRmq(std::move(values)); }
inline std::uint32_t rmq_query(const StaticRmq& s, std::size_t l, std::size_t r) { return s.query(l, r); }

}  // namespace genruns
