#pragma once

#include <cstdint>

namespace genruns::detail {

// splitmix64 finalizer; used for deterministic treap priorities.
inline std::uint32_t mix32(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return static_cast<std::uint32_t>((z ^ (z >> 31)) >> 32);
}

}  // namespace genruns::detail
