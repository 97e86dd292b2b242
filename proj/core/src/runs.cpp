#include "genruns/runs.hpp"

#include <algorithm>
#include <map>

#include "genruns/contract.hpp"

namespace genruns {

LceOracle::LceOracle(TextView text, LceBackend backend, const IndexOptions& options)
    : text_(text), backend_(backend) {
  if (backend == LceBackend::kSparse) {
    reversed_ = Text::reversed(text);
    forward_ = SparseLceIndex::build(text, options);
    backward_ = SparseLceIndex::build(reversed_.view(text.counter()), options);
  }
}

Position LceOracle::lce(Position x, Position y) const {
  ++queries_;
  if (forward_) return forward_->lce(x, y);
  const Position n = size();
  GENRUNS_EXPECTS(x >= 1 && x <= n && y >= 1 && y <= n, "position outside [1..n]");
  Position l = 0;
  while (x + l <= n && y + l <= n && text_.equal_at(x + l, y + l)) ++l;
  return l;
}

Position LceOracle::lcs(Position x, Position y) const {
  ++queries_;
  const Position n = size();
  GENRUNS_EXPECTS(x <= n && y <= n, "position outside [0..n]");
  if (x == 0 || y == 0) return 0;
  if (backward_) return backward_->lce(n - x + 1, n - y + 1);
  Position l = 0;
  while (l < x && l < y && text_.equal_at(x - l, y - l)) ++l;
  return l;
}

std::strong_ordering compare_suffixes(const LceOracle& oracle, Position i, Position j, SymbolOrder order) {
  GENRUNS_EXPECTS(i != j, "suffixes must start at distinct positions");
  const Position n = oracle.size();
  const Position l = oracle.lce(i, j);
  if (i + l > n) return std::strong_ordering::less;
  if (j + l > n) return std::strong_ordering::greater;
  const auto c = oracle.text().compare_at(i + l, j + l);
  return order == SymbolOrder::kForward ? c : 0 <=> c;
}

std::vector<Position> next_smaller_suffix(const LceOracle& oracle, SymbolOrder order) {
  const Position n = oracle.size();
  std::vector<Position> nss(n, n + 1);
  std::vector<Position> stack;
  for (Position i = n; i >= 1; --i) {
    while (!stack.empty() && compare_suffixes(oracle, stack.back(), i, order) > 0) stack.pop_back();
    if (!stack.empty()) nss[i - 1] = stack.back();
    stack.push_back(i);
  }
  return nss;
}

std::vector<Run> compute_runs(const LceOracle& oracle) {
  const Position n = oracle.size();
  std::vector<Run> found;
  for (SymbolOrder order : {SymbolOrder::kForward, SymbolOrder::kReverse}) {
    std::vector<Run> local;
    {
      const std::vector<Position> nss = next_smaller_suffix(oracle, order);
      for (Position i = 1; i <= n; ++i) {
        // w[i..nss-1] is the longest Lyndon prefix of suffix i under `order`.
        const Position p = nss[i - 1] - i;
        const Position right = i + p <= n ? oracle.lce(i, i + p) : 0;
        const Position left = oracle.lcs(i - 1, i + p - 1);
        // With left >= p the same triple comes from the root at i - p.
        if (left >= p || left + right < p) continue;
        local.push_back(Run{i - left, i + p - 1 + right, p});
      }
    }
    std::sort(local.begin(), local.end());
    std::vector<Run> merged;
    merged.reserve(found.size() + local.size());
    std::set_union(found.begin(), found.end(), local.begin(), local.end(), std::back_inserter(merged));
    found = std::move(merged);
  }
  return found;
}

std::vector<Run> compute_runs(TextView text, LceBackend backend, const IndexOptions& options) {
  const LceOracle oracle(text, backend, options);
  return compute_runs(oracle);
}

RunStats run_stats(const std::vector<Run>& runs) {
  RunStats stats;
  stats.count = runs.size();
  std::map<Position, std::uint64_t> length_by_period;
  for (const Run& r : runs) length_by_period[r.period] += r.length();
  for (const auto& [period, length] : length_by_period) {
    stats.sum_exponents += boost::multiprecision::cpp_rational(length, period);
  }
  return stats;
}

std::string RunStats::sum_decimal(unsigned places) const {
  using boost::multiprecision::cpp_int;
  cpp_int scale = 1;
  for (unsigned i = 0; i < places; ++i) scale *= 10;
  const cpp_int num = boost::multiprecision::numerator(sum_exponents);
  const cpp_int den = boost::multiprecision::denominator(sum_exponents);
  const cpp_int scaled = (num * scale * 2 + den) / (den * 2);
  const cpp_int whole = scaled / scale;
  std::string out = whole.str();
  if (places > 0) {
    std::string frac = cpp_int(scaled % scale).str();
    out += '.' + std::string(places - frac.size(), '0') + frac;
  }
  return out;
}

}  // namespace genruns
