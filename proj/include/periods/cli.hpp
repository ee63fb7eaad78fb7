#ifndef PERIODS_CLI_HPP
#define PERIODS_CLI_HPP

#include <cstdint>
#include <optional>
#include <string>

namespace periods::cli {

enum class Command { Analyze, Formula, Verify, Ratio, Discover, Invariant };
enum class VariantMode { Ledger, Theorem, Auto };
enum class Format { Json, Text };

// One batch job. Motive inputs are file paths, "-" for stdin, or inline JSON
// (anything starting with '{').
struct JobConfig {
  Command command = Command::Analyze;
  std::optional<std::string> motive_a;
  std::optional<std::string> motive_b;
  std::optional<std::string> type_spec;  // admissibility type for `invariant`
  int trials = 5;
  std::uint64_t seed = 0;
  VariantMode variant = VariantMode::Auto;
  Format format = Format::Json;
  int bound = 10;
};

struct RunResult {
  int exit_code = 0;  // 0 ok, 1 usage/validation, 2 verification failed
  std::string output;
};

// Pure given the config: identical configs produce byte-identical output.
RunResult run(const JobConfig& config);

}  // namespace periods::cli

#endif
