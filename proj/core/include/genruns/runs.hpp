#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "genruns/sparse_lce.hpp"
#include "genruns/symbols.hpp"

namespace genruns {

/// Maximal repetition w[start..end] with minimal period `period`, 1-based inclusive.
struct Run {
  Position start = 0;
  Position end = 0;
  Position period = 0;

  Position length() const noexcept { return end - start + 1; }
  friend auto operator<=>(const Run&, const Run&) = default;
};

enum class SymbolOrder { kForward, kReverse };
enum class LceBackend { kSparse, kNaive };

/// Forward LCE and backward LCS over one text, with a query counter.
/// The sparse backend keeps one index on w and one on its reversal.
class LceOracle {
 public:
  LceOracle(TextView text, LceBackend backend, const IndexOptions& options = {});
  LceOracle(const LceOracle&) = delete;
  LceOracle& operator=(const LceOracle&) = delete;
  LceOracle(LceOracle&&) = default;
  LceOracle& operator=(LceOracle&&) = default;

  Position size() const noexcept { return text_.size(); }
  TextView text() const noexcept { return text_; }
  LceBackend backend() const noexcept { return backend_; }

  /// LCE of w[x..n] and w[y..n].
  Position lce(Position x, Position y) const;
  /// Longest common suffix of w[1..x] and w[1..y]; 0 if either is 0.
  Position lcs(Position x, Position y) const;

  std::uint64_t queries() const noexcept { return queries_; }
  void reset_queries() noexcept { queries_ = 0; }

 private:
  TextView text_;
  LceBackend backend_;
  Text reversed_;
  std::optional<SparseLceIndex> forward_;
  std::optional<SparseLceIndex> backward_;
  mutable std::uint64_t queries_ = 0;
};

/// Orders suffixes i != j; an exhausted suffix is smaller under both orders.
std::strong_ordering compare_suffixes(const LceOracle& oracle, Position i, Position j, SymbolOrder order);

/// nss[i - 1] = min { j > i : suffix j precedes suffix i }, or n + 1.
std::vector<Position> next_smaller_suffix(const LceOracle& oracle, SymbolOrder order);

/// All runs, sorted by (start, end).
std::vector<Run> compute_runs(const LceOracle& oracle);
std::vector<Run> compute_runs(TextView text, LceBackend backend = LceBackend::kSparse,
                              const IndexOptions& options = {});

struct RunStats {
  std::size_t count = 0;
  boost::multiprecision::cpp_rational sum_exponents = 0;

  /// Sum of exponents rounded half-up to `places` decimals.
  std::string sum_decimal(unsigned places = 6) const;
};

RunStats run_stats(const std::vector<Run>& runs);

}  // namespace genruns
