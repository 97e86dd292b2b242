#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace genruns {

using Position = std::uint32_t;

/// A letter of a general ordered alphabet. The only operation available to
/// the algorithms is the three-way comparison `compare`.
///
/// With RUNS_OPAQUE_SYMBOLS defined the stored value is a handle into a
/// scrambled table, so nothing except `compare` reveals the order.
class Text;

class Symbol {
 public:
  friend std::strong_ordering compare(Symbol a, Symbol b) noexcept;

 private:
  friend class Text;
#ifdef RUNS_OPAQUE_SYMBOLS
  explicit Symbol(std::uint16_t handle) noexcept : handle_(handle) {}
  std::uint16_t handle_;
#else
  explicit Symbol(std::uint8_t value) noexcept : value_(value) {}
  std::uint8_t value_;
#endif
};

#ifndef RUNS_OPAQUE_SYMBOLS
inline std::strong_ordering compare(Symbol a, Symbol b) noexcept {
  return a.value_ <=> b.value_;
}
#endif

/// Tally of symbol comparisons routed through a counting view.
struct ComparisonCounter {
  std::uint64_t count = 0;
  void reset() noexcept { count = 0; }
};

/// Compares two symbols and bumps the counter when one is attached.
class CountingComparator {
 public:
  explicit CountingComparator(ComparisonCounter* counter = nullptr) noexcept
      : counter_(counter) {}

  std::strong_ordering operator()(Symbol a, Symbol b) const noexcept {
    if (counter_ != nullptr) ++counter_->count;
    return compare(a, b);
  }

  ComparisonCounter* counter() const noexcept { return counter_; }

 private:
  ComparisonCounter* counter_;
};

/// Non-owning, 1-based view of a text with an optional comparison counter.
/// This is the only way the core algorithms read input symbols.
class TextView {
 public:
  TextView() = default;
  TextView(std::span<const Symbol> symbols, ComparisonCounter* counter = nullptr) noexcept
      : symbols_(symbols), cmp_(counter) {}

  Position size() const noexcept { return static_cast<Position>(symbols_.size()); }
  bool empty() const noexcept { return symbols_.empty(); }

  Symbol at(Position i) const noexcept { return symbols_[i - 1]; }

  /// Three-way comparison of w[i] and w[j]; both must be in [1..n].
  std::strong_ordering compare_at(Position i, Position j) const noexcept {
    return cmp_(symbols_[i - 1], symbols_[j - 1]);
  }
  bool equal_at(Position i, Position j) const noexcept {
    return compare_at(i, j) == std::strong_ordering::equal;
  }

  std::strong_ordering compare_symbols(Symbol a, Symbol b) const noexcept { return cmp_(a, b); }

  ComparisonCounter* counter() const noexcept { return cmp_.counter(); }
  TextView with_counter(ComparisonCounter* counter) const noexcept {
    return TextView(symbols_, counter);
  }

 private:
  std::span<const Symbol> symbols_;
  CountingComparator cmp_;
};

/// Immutable owning symbol sequence.
class Text {
 public:
  Text() = default;

  static Text from_bytes(std::span<const std::uint8_t> data);
  static Text from_bytes(std::string_view data);

  Position size() const noexcept { return static_cast<Position>(symbols_.size()); }
  bool empty() const noexcept { return symbols_.empty(); }

  /// w[i] for i in [1..n]; throws ContractViolation outside that range.
  Symbol operator[](Position i) const;

  TextView view(ComparisonCounter* counter = nullptr) const noexcept {
    return TextView(symbols_, counter);
  }

  Text reversed() const;
  /// Owning copy of a view, back to front.
  static Text reversed(TextView view);

 private:
  std::vector<Symbol> symbols_;
};

inline Text text_from_bytes(std::string_view data) { return Text::from_bytes(data); }

}  // namespace genruns
