#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "genruns/oracles.hpp"
#include "genruns/runs.hpp"

namespace genruns::cli {
namespace {

constexpr std::uint64_t kMaxInput = std::uint64_t{1} << 31;
constexpr std::uint64_t kBenchmarkSeed = 20240601;

struct Outcome {
  std::vector<Run> runs;
  std::uint64_t comparisons = 0;
};

Outcome compute(const Text& text, const CliConfig& config) {
  ComparisonCounter counter;
  const TextView view = text.view(&counter);
  Outcome outcome;
  switch (config.algorithm) {
    case Algorithm::kBrute:
      outcome.runs = oracle::naive_runs(view);
      break;
    case Algorithm::kLyndonNaiveLce:
      outcome.runs = compute_runs(view, LceBackend::kNaive);
      break;
    case Algorithm::kLyndonSparse: {
      const bool tiny = text.size() < kSparseThreshold && !config.tau_explicit;
      IndexOptions options;
      options.tau = config.tau;
      outcome.runs = compute_runs(view, tiny ? LceBackend::kNaive : LceBackend::kSparse, options);
      break;
    }
  }
  outcome.comparisons = counter.count;
  return outcome;
}

void write_runs(const std::vector<Run>& runs, Format format, std::ostream& out) {
  if (format == Format::kTsv) {
    for (const Run& r : runs) out << r.start << '\t' << r.end << '\t' << r.period << '\n';
    return;
  }
  auto array = nlohmann::ordered_json::array();
  for (const Run& r : runs) {
    array.push_back({{"start", r.start},
                     {"end", r.end},
                     {"period", r.period},
                     {"exponent", static_cast<double>(r.length()) / r.period}});
  }
  out << array.dump() << '\n';
}

bool read_input(const CliConfig& config, std::istream& in, std::string& data, std::ostream& err) {
  if (config.input) {
    std::ifstream file(*config.input, std::ios::binary);
    if (!file) {
      err << "runs: cannot open " << *config.input << '\n';
      return false;
    }
    data.assign(std::istreambuf_iterator<char>(file), {});
    if (file.bad()) {
      err << "runs: read error on " << *config.input << '\n';
      return false;
    }
  } else {
    data.assign(std::istreambuf_iterator<char>(in), {});
    if (in.bad()) {
      err << "runs: read error on standard input\n";
      return false;
    }
  }
  if (data.size() > kMaxInput) {
    err << "runs: input longer than " << kMaxInput << " bytes\n";
    return false;
  }
  return true;
}

int run_benchmark(const CliConfig& config, std::ostream& out) {
  out << "n,algorithm,runs,comparisons,millis\n";
  for (std::uint64_t n : config.benchmark) {
    for (const std::string& kind : generator_names()) {
      const Text text = Text::from_bytes(generate_input(kind, n, kBenchmarkSeed));
      const auto start = std::chrono::steady_clock::now();
      const Outcome outcome = compute(text, config);
      const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
      out << "# input=" << kind << " seed=" << kBenchmarkSeed << '\n';
      out << n << ',' << algorithm_name(config.algorithm) << ',' << outcome.runs.size() << ','
          << outcome.comparisons << ',' << static_cast<std::uint64_t>(elapsed.count()) << '\n';
    }
  }
  return kOk;
}

}  // namespace

const char* algorithm_name(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::kLyndonSparse:
      return "lyndon-sparse";
    case Algorithm::kLyndonNaiveLce:
      return "lyndon-naive-lce";
    case Algorithm::kBrute:
      return "brute";
  }
  return "?";
}

std::string generate_input(const std::string& kind, std::uint64_t n, std::uint64_t seed) {
  std::string s(n, 'a');
  if (kind == "random-2" || kind == "random-256") {
    std::mt19937_64 gen(seed);
    const int top = kind == "random-2" ? 1 : 255;
    std::uniform_int_distribution<int> pick(0, top);
    for (char& c : s) c = static_cast<char>(top == 1 ? 'a' + pick(gen) : pick(gen));
  } else if (kind == "fibonacci") {
    std::string a = "a", b = "ab";
    while (b.size() < n) {
      std::string c = b + a;
      a = std::move(b);
      b = std::move(c);
    }
    s = n <= 1 ? a.substr(0, n) : b.substr(0, n);
  } else if (kind != "all-equal") {
    throw std::invalid_argument("unknown generator " + kind);
  }
  return s;
}

std::optional<CliConfig> parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                                    int& exit_code) {
  CliConfig config;
  CLI::App app{"Compute all runs (maximal repetitions) of a byte string."};
  app.name("runs");

  std::string input;
  app.add_option("FILE", input, "Input file; standard input when omitted");
  const std::map<std::string, Algorithm> algorithms{{"lyndon-sparse", Algorithm::kLyndonSparse},
                                                    {"lyndon-naive-lce", Algorithm::kLyndonNaiveLce},
                                                    {"brute", Algorithm::kBrute}};
  app.add_option("--algorithm", config.algorithm, "lyndon-sparse, lyndon-naive-lce or brute")
      ->transform(CLI::CheckedTransformer(algorithms, CLI::ignore_case));
  auto* tau = app.add_option("--tau", config.tau, "Difference cover parameter (0 = automatic)");
  const std::map<std::string, Format> formats{{"tsv", Format::kTsv}, {"json", Format::kJson}};
  app.add_option("--format", config.format, "tsv or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_flag("--stats", config.stats, "Append run count and exponent sum");
  app.add_flag("--count-comparisons", config.count_comparisons, "Append the symbol comparison count");
  app.add_flag("--verify", config.verify, "Check the result against the quadratic oracle");
  app.add_option("--benchmark", config.benchmark, "Comma-separated sizes; prints CSV instead of runs")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    exit_code = code == 0 ? kOk : kBadFlags;
    return std::nullopt;
  }
  if (config.verify && !config.benchmark.empty()) {
    err << "runs: --verify cannot be combined with --benchmark\n";
    exit_code = kBadFlags;
    return std::nullopt;
  }
  if (!input.empty()) config.input = input;
  config.tau_explicit = tau->count() > 0;
  exit_code = kOk;
  return config;
}

int run_cli(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    if (!config.benchmark.empty()) return run_benchmark(config, out);

    std::string data;
    if (!read_input(config, in, data, err)) return kIoError;
    if (config.verify && data.size() > kVerifyLimit) {
      err << "runs: --verify supports inputs of at most " << kVerifyLimit << " bytes\n";
      return kBadFlags;
    }
    const Text text = Text::from_bytes(data);
    std::string().swap(data);
    const Outcome outcome = compute(text, config);
    write_runs(outcome.runs, config.format, out);

    // JSON stays parseable: the trailer goes to stderr in that format.
    std::ostream& trailer = config.format == Format::kJson ? err : out;
    if (config.stats) {
      const RunStats stats = run_stats(outcome.runs);
      trailer << "# runs=" << stats.count << " sum_exp=" << stats.sum_decimal() << '\n';
    }
    if (config.count_comparisons) trailer << "# comparisons=" << outcome.comparisons << '\n';

    if (config.verify && oracle::naive_runs(text.view()) != outcome.runs) {
      err << "runs: verification failed\n";
      return kMismatch;
    }
    return kOk;
  } catch (const std::exception& e) {
    err << "runs: " << e.what() << '\n';
    return kIoError;
  }
}

int main_entry(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  int code = kOk;
  const auto config = parse_args(argc, argv, out, err, code);
  if (!config) return code;
  return run_cli(*config, in, out, err);
}

}  // namespace genruns::cli
