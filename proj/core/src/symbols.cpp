#include "genruns/symbols.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "genruns/contract.hpp"

namespace genruns {

#ifdef RUNS_OPAQUE_SYMBOLS
namespace {

// Byte b is stored as an unrelated 16-bit handle; only this table knows the
// order. Any code ordering raw handles would disagree with byte order.
struct OpaqueAlphabet {
  std::array<std::uint16_t, 256> handle_of{};
  std::array<std::uint16_t, 65536> rank_of{};

  OpaqueAlphabet() {
    std::array<std::uint16_t, 65536> pool{};
    for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = static_cast<std::uint16_t>(i);
    std::mt19937 gen(0x5eed1234u);
    std::shuffle(pool.begin(), pool.end(), gen);
    for (std::size_t b = 0; b < 256; ++b) {
      handle_of[b] = pool[b];
      rank_of[pool[b]] = static_cast<std::uint16_t>(b);
    }
  }
};

const OpaqueAlphabet& alphabet() {
  static const OpaqueAlphabet table;
  return table;
}

}  // namespace

std::strong_ordering compare(Symbol a, Symbol b) noexcept {
  const auto& table = alphabet();
  return table.rank_of[a.handle_] <=> table.rank_of[b.handle_];
}
#endif

Text Text::from_bytes(std::span<const std::uint8_t> data) {
  Text text;
  text.symbols_.reserve(data.size());
#ifdef RUNS_OPAQUE_SYMBOLS
  const auto& table = alphabet();
  for (std::uint8_t b : data) text.symbols_.push_back(Symbol(table.handle_of[b]));
#else
  for (std::uint8_t b : data) text.symbols_.push_back(Symbol(b));
#endif
  return text;
}

Text Text::from_bytes(std::string_view data) {
  return from_bytes(std::span<const std::uint8_t>(
      reinterpret_cast<const std::uint8_t*>(data.data()), data.size()));
}

Symbol Text::operator[](Position i) const {
  GENRUNS_EXPECTS(i >= 1 && i <= size(), "text index outside [1..n]");
  return symbols_[i - 1];
}

Text Text::reversed(TextView view) {
  Text out;
  out.symbols_.reserve(view.size());
  for (Position i = view.size(); i >= 1; --i) out.symbols_.push_back(view.at(i));
  return out;
}

Text Text::reversed() const {
  Text out;
  out.symbols_.assign(symbols_.rbegin(), symbols_.rend());
  return out;
}

}  // namespace genruns
