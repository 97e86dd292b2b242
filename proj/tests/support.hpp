#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "genruns/runs.hpp"
#include "genruns/symbols.hpp"

namespace genruns::testing {

inline std::string random_string(std::mt19937_64& gen, std::size_t n, unsigned sigma) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(sigma) - 1);
  std::string s(n, 'a');
  for (char& c : s) c = static_cast<char>('a' + pick(gen));
  return s;
}

inline std::string fibonacci_word(std::size_t n) {
  std::string a = "a", b = "ab";
  while (b.size() < n) {
    std::string c = b + a;
    a = std::move(b);
    b = std::move(c);
  }
  return n <= 1 ? a.substr(0, n) : b.substr(0, n);
}

inline std::string thue_morse(std::size_t n) {
  std::string s(n, 'a');
  for (std::size_t i = 0; i < n; ++i) {
    if (__builtin_popcountll(i) & 1) s[i] = 'b';
  }
  return s;
}

inline std::string repeated(std::string_view unit, std::size_t n) {
  std::string s;
  while (s.size() < n) s += unit;
  s.resize(n);
  return s;
}

/// All strings of length `len` over the first `sigma` letters.
inline std::vector<std::string> all_strings(std::size_t len, unsigned sigma) {
  std::vector<std::string> out;
  std::string s(len, 'a');
  for (;;) {
    out.push_back(s);
    std::size_t i = 0;
    while (i < len && s[i] == static_cast<char>('a' + sigma - 1)) s[i++] = 'a';
    if (i == len) break;
    ++s[i];
  }
  return out;
}

/// Direct definition of the next smaller suffix under either symbol order.
inline std::vector<Position> brute_nss(TextView text, SymbolOrder order) {
  const Position n = text.size();
  auto less = [&](Position a, Position b) {
    for (Position d = 0;; ++d) {
      if (a + d > n) return b + d <= n;
      if (b + d > n) return false;
      auto c = text.compare_at(a + d, b + d);
      if (order == SymbolOrder::kReverse) c = 0 <=> c;
      if (c != 0) return c < 0;
    }
  };
  std::vector<Position> out(n, n + 1);
  for (Position i = 1; i <= n; ++i) {
    for (Position j = i + 1; j <= n; ++j) {
      if (less(j, i)) {
        out[i - 1] = j;
        break;
      }
    }
  }
  return out;
}

}  // namespace genruns::testing
