#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "genruns/order_maintenance.hpp"
#include "genruns/runs.hpp"
#include "genruns/sparse_lce.hpp"
#include "genruns/static_rmq.hpp"

namespace {

using namespace genruns;

std::string random_text(std::size_t n, int sigma, std::uint64_t seed = 1) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> pick(0, sigma - 1);
  std::string s(n, 'a');
  for (char& c : s) c = static_cast<char>('a' + pick(gen));
  return s;
}

std::string fibonacci(std::size_t n) {
  std::string a = "a", b = "ab";
  while (b.size() < n) {
    std::string c = b + a;
    a = std::move(b);
    b = std::move(c);
  }
  return b.substr(0, n);
}

void BM_BuildIndex(benchmark::State& state) {
  const Text t = text_from_bytes(random_text(state.range(0), 2));
  ComparisonCounter counter;
  for (auto _ : state) {
    counter.reset();
    benchmark::DoNotOptimize(SparseLceIndex::build(t.view(&counter)));
  }
  state.counters["cmp_per_symbol"] = double(counter.count) / state.range(0);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildIndex)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Unit(benchmark::kMillisecond)->Complexity();

void BM_ComputeRuns(benchmark::State& state, LceBackend backend, const std::string& kind) {
  const std::size_t n = state.range(0);
  const Text t = text_from_bytes(kind == "fibonacci" ? fibonacci(n) : random_text(n, 2));
  ComparisonCounter counter;
  std::size_t runs = 0;
  for (auto _ : state) {
    counter.reset();
    runs = compute_runs(t.view(&counter), backend).size();
  }
  state.counters["runs"] = double(runs);
  state.counters["cmp_per_symbol"] = double(counter.count) / n;
}
BENCHMARK_CAPTURE(BM_ComputeRuns, sparse_random, LceBackend::kSparse, std::string("random"))
    ->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ComputeRuns, naive_random, LceBackend::kNaive, std::string("random"))
    ->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ComputeRuns, sparse_fibonacci, LceBackend::kSparse, std::string("fibonacci"))
    ->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ComputeRuns, naive_fibonacci, LceBackend::kNaive, std::string("fibonacci"))
    ->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Unit(benchmark::kMillisecond);

// 0: append at the back, 1: always after the first node, 2: random anchor
void BM_OrderMaintenanceInsert(benchmark::State& state) {
  const auto m = static_cast<std::uint32_t>(state.range(0));
  const int pattern = static_cast<int>(state.range(1));
  std::uint64_t work = 0;
  for (auto _ : state) {
    OrderMaintenanceList list(m);
    std::mt19937 gen(11);
    std::vector<OmNode> nodes;
    nodes.reserve(m);
    nodes.push_back(list.insert_after(std::nullopt, 0));
    for (std::uint32_t i = 1; i < m; ++i) {
      OmNode at = pattern == 0 ? nodes.back() : pattern == 1 ? nodes.front() : nodes[gen() % nodes.size()];
      nodes.push_back(list.insert_after(at, i));
    }
    work = list.relabel_work();
  }
  state.counters["relabel_per_insert"] = double(work) / m;
}
BENCHMARK(BM_OrderMaintenanceInsert)
    ->ArgsProduct({{1 << 12, 1 << 16, 1 << 20}, {0, 1, 2}})
    ->Unit(benchmark::kMillisecond);

void BM_StaticRmqQuery(benchmark::State& state) {
  const std::size_t n = state.range(0);
  std::mt19937 gen(13);
  std::vector<std::uint32_t> values(n);
  for (auto& v : values) v = gen() % 1000;
  const StaticRmq rmq(values);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (auto _ : state) {
    std::size_t l = pick(gen), r = pick(gen);
    if (l > r) std::swap(l, r);
    benchmark::DoNotOptimize(rmq.query_unchecked(l, r));
  }
}
BENCHMARK(BM_StaticRmqQuery)->Range(1 << 10, 1 << 22);

}  // namespace

BENCHMARK_MAIN();
