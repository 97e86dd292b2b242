#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace genruns::cli {

enum class Algorithm { kLyndonSparse, kLyndonNaiveLce, kBrute };
enum class Format { kTsv, kJson };

enum ExitCode : int { kOk = 0, kIoError = 1, kBadFlags = 2, kMismatch = 3 };

struct CliConfig {
  std::optional<std::string> input;  // empty means standard input
  Algorithm algorithm = Algorithm::kLyndonSparse;
  std::uint32_t tau = 0;
  bool tau_explicit = false;
  Format format = Format::kTsv;
  bool stats = false;
  bool count_comparisons = false;
  bool verify = false;
  std::vector<std::uint64_t> benchmark;
};

/// Largest input --verify accepts.
inline constexpr std::uint64_t kVerifyLimit = 4000;
/// Below this length lyndon-sparse runs on the naive LCE backend unless --tau is set.
inline constexpr std::uint64_t kSparseThreshold = 256;

const char* algorithm_name(Algorithm a) noexcept;

/// Parses argv. On --help or a parse error returns nullopt and sets `exit_code`.
std::optional<CliConfig> parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                                    int& exit_code);

int run_cli(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// parse_args followed by run_cli.
int main_entry(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

/// Benchmark input generators.
std::string generate_input(const std::string& kind, std::uint64_t n, std::uint64_t seed);
inline const std::vector<std::string>& generator_names() {
  static const std::vector<std::string> names{"random-2", "random-256", "fibonacci", "all-equal"};
  return names;
}

}  // namespace genruns::cli
