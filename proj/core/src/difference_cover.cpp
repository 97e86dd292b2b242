#include "genruns/difference_cover.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace genruns {

namespace {

std::uint32_t floor_sqrt(std::uint32_t k) {
  auto r = static_cast<std::uint32_t>(std::sqrt(static_cast<double>(k)));
  while (static_cast<std::uint64_t>(r) * r > k) --r;
  while (static_cast<std::uint64_t>(r + 1) * (r + 1) <= k) ++r;
  return r;
}

std::uint32_t mod(std::int64_t v, std::uint32_t k) {
  const auto m = static_cast<std::int64_t>(k);
  return static_cast<std::uint32_t>(((v % m) + m) % m);
}

void check_range(std::uint32_t k, std::span<const std::uint32_t> set) {
  if (k == 0) throw std::invalid_argument("difference cover modulus must be positive");
  for (std::uint32_t e : set) {
    if (e >= k) {
      throw std::invalid_argument("difference cover element " + std::to_string(e) +
                                  " outside [0.." + std::to_string(k) + ")");
    }
  }
}

}  // namespace

DifferenceCover::DifferenceCover(std::uint32_t k, std::vector<std::uint32_t> elements)
    : k_(k), elements_(std::move(elements)), member_(k, 0), delta_(k, 0) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (std::uint32_t e : elements_) member_[e] = 1;

  // First pair found with z as the outer loop wins.
  std::vector<std::uint8_t> filled(k, 0);
  std::uint32_t remaining = k;
  for (std::uint32_t z : elements_) {
    for (std::uint32_t y : elements_) {
      const std::uint32_t x = (y + k - z) % k;
      if (!filled[x]) {
        filled[x] = 1;
        delta_[x] = z;
        if (--remaining == 0) return;
      }
    }
  }
  throw std::invalid_argument("set is not a difference cover of [0.." + std::to_string(k) + ")");
}

DifferenceCover DifferenceCover::build(std::uint32_t k) {
  if (k == 0) throw std::invalid_argument("difference cover modulus must be positive");
  const std::uint32_t r = floor_sqrt(k);
  std::vector<std::uint32_t> elements;
  for (std::uint32_t v = 0; v <= r && v < k; ++v) elements.push_back(v);
  for (std::uint64_t v = 2ull * r; v < k; v += r) elements.push_back(static_cast<std::uint32_t>(v));
  return DifferenceCover(k, std::move(elements));
}

DifferenceCover DifferenceCover::from_elements(std::uint32_t k, std::vector<std::uint32_t> elements) {
  check_range(k, elements);
  return DifferenceCover(k, std::move(elements));
}

std::uint32_t DifferenceCover::find_shift(std::int64_t i, std::int64_t j) const noexcept {
  const std::uint32_t x = mod(j - i, k_);
  return mod(static_cast<std::int64_t>(delta_[x]) - i, k_);
}

bool is_difference_cover(std::uint32_t k, std::span<const std::uint32_t> set) {
  check_range(k, set);
  std::vector<std::uint8_t> seen(k, 0);
  for (std::uint32_t y : set) {
    for (std::uint32_t z : set) seen[(y + k - z) % k] = 1;
  }
  return std::all_of(seen.begin(), seen.end(), [](std::uint8_t s) { return s != 0; });
}

}  // namespace genruns
