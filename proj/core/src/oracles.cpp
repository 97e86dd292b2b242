#include "genruns/oracles.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "genruns/contract.hpp"

namespace genruns::oracle {

Position naive_lce(TextView text, Position x, Position y) {
  const Position n = text.size();
  GENRUNS_EXPECTS(x >= 1 && x <= n && y >= 1 && y <= n, "position outside [1..n]");
  Position l = 0;
  while (x + l <= n && y + l <= n && text.equal_at(x + l, y + l)) ++l;
  return l;
}

std::vector<Position> lce_matrix(TextView text) {
  const std::size_t n = text.size();
  std::vector<Position> table(n * n, 0);
  for (std::size_t x = n; x >= 1; --x) {
    for (std::size_t y = n; y >= 1; --y) {
      if (!text.equal_at(static_cast<Position>(x), static_cast<Position>(y))) continue;
      const Position tail = (x < n && y < n) ? table[x * n + y] : 0;
      table[(x - 1) * n + (y - 1)] = tail + 1;
    }
  }
  return table;
}

namespace {

bool suffix_less(TextView text, Position a, Position b) {
  const Position n = text.size();
  for (Position d = 0;; ++d) {
    if (a + d > n) return b + d <= n;  // a exhausted first (or both)
    if (b + d > n) return false;
    const auto c = text.compare_at(a + d, b + d);
    if (c != 0) return c < 0;
  }
}

}  // namespace

SparseSort naive_sparse_sort(TextView text, const SampleSet& sample) {
  SparseSort out;
  for (Position i = 1; i <= text.size(); ++i) {
    if (sample.contains(i)) out.order.push_back(i);
  }
  std::sort(out.order.begin(), out.order.end(),
            [&](Position a, Position b) { return suffix_less(text, a, b); });
  for (std::size_t j = 0; j + 1 < out.order.size(); ++j) {
    out.lcp.push_back(naive_lce(text, out.order[j], out.order[j + 1]));
  }
  return out;
}

std::vector<Run> naive_runs(TextView text) {
  const Position n = text.size();
  std::map<std::pair<Position, Position>, Position> best;
  for (Position p = 1; 2 * p <= n; ++p) {
    Position j = 1;
    while (j + p <= n) {
      if (!text.equal_at(j, j + p)) {
        ++j;
        continue;
      }
      const Position s = j;
      while (j + p <= n && text.equal_at(j, j + p)) ++j;
      // w[s..j-1+p] has period p and cannot be extended either way.
      const Position e = j - 1 + p;
      if (e - s + 1 >= 2 * p) {
        auto [it, inserted] = best.try_emplace({s, e}, p);
        if (!inserted) it->second = std::min(it->second, p);
      }
    }
  }
  std::vector<Run> out;
  out.reserve(best.size());
  for (const auto& [interval, p] : best) out.push_back(Run{interval.first, interval.second, p});
  return out;
}

bool is_valid_run(TextView text, const Run& run) {
  const Position n = text.size();
  if (run.period == 0 || run.start < 1 || run.end > n || run.start > run.end) return false;
  if (run.length() < 2 * run.period) return false;
  auto has_period = [&](Position q) {
    for (Position i = run.start; i + q <= run.end; ++i) {
      if (!text.equal_at(i, i + q)) return false;
    }
    return true;
  };
  if (!has_period(run.period)) return false;
  for (Position q = 1; q < run.period; ++q) {
    if (has_period(q)) return false;
  }
  if (run.start > 1 && text.equal_at(run.start - 1, run.start - 1 + run.period)) return false;
  if (run.end < n && text.equal_at(run.end + 1, run.end + 1 - run.period)) return false;
  return true;
}

}  // namespace genruns::oracle
