#pragma once

#include <cstdint>
#include <vector>

#include "genruns/runs.hpp"
#include "genruns/sparse_lce.hpp"
#include "genruns/symbols.hpp"

// Definition-level reference implementations. They share no code with the
// fast paths and favour obviousness over speed.
namespace genruns::oracle {

/// Symbol-by-symbol scan of w[x..n] against w[y..n].
Position naive_lce(TextView text, Position x, Position y);

/// Full table lce[(x - 1) * n + (y - 1)] by the right-to-left recurrence.
std::vector<Position> lce_matrix(TextView text);

/// Sampled positions of [1..n] sorted by direct suffix comparison (a proper
/// prefix is smaller), with adjacent LCEs.
struct SparseSort {
  std::vector<Position> order;
  std::vector<std::uint32_t> lcp;
};
SparseSort naive_sparse_sort(TextView text, const SampleSet& sample);

/// Every maximal p-periodic interval of length >= 2p, keeping the smallest p
/// per interval. O(n^2).
std::vector<Run> naive_runs(TextView text);

/// Re-checks length, periodicity, maximality and minimality of one run.
bool is_valid_run(TextView text, const Run& run);

}  // namespace genruns::oracle
