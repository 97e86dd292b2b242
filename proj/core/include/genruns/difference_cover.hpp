#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace genruns {

/// A difference cover D of [0..k): every residue x has y, z in D with
/// y - z = x (mod k). Carries a witness table so that the shift query is O(1).
class DifferenceCover {
 public:
  /// The simple cover [0..r] ∪ {2r, 3r, ...} with r = floor(sqrt(k)).
  /// Throws std::invalid_argument for k = 0.
  static DifferenceCover build(std::uint32_t k);

  /// Wraps an explicit set. Throws std::invalid_argument if it is not a
  /// difference cover of [0..k) or holds an element outside [0..k).
  static DifferenceCover from_elements(std::uint32_t k, std::vector<std::uint32_t> elements);

  std::uint32_t modulus() const noexcept { return k_; }
  std::span<const std::uint32_t> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }

  bool contains(std::uint32_t residue) const noexcept { return member_[residue % k_] != 0; }

  /// z in D with (z + x) mod k in D, for x in [0..k).
  std::uint32_t witness(std::uint32_t x) const noexcept { return delta_[x]; }

  /// Smallest-effort shift d in [0..k) with (i + d) mod k and (j + d) mod k
  /// both in D.
  std::uint32_t find_shift(std::int64_t i, std::int64_t j) const noexcept;

 private:
  DifferenceCover(std::uint32_t k, std::vector<std::uint32_t> elements);

  std::uint32_t k_ = 1;
  std::vector<std::uint32_t> elements_;
  std::vector<std::uint8_t> member_;
  std::vector<std::uint32_t> delta_;
};

/// Exhaustive O(|set|^2 + k) check of the covering property. Throws
/// std::invalid_argument if k = 0 or an element lies outside [0..k).
bool is_difference_cover(std::uint32_t k, std::span<const std::uint32_t> set);

inline DifferenceCover build_difference_cover(std::uint32_t k) { return DifferenceCover::build(k); }

inline std::uint32_t find_shift(const DifferenceCover& dc, std::int64_t i, std::int64_t j) {
  return dc.find_shift(i, j);
}

}  // namespace genruns
