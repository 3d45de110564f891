#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "embedkit/scheme_gen.hpp"

namespace embedkit::cli {

enum ExitCode : int {
  kSuccess = 0,
  kCheckFailure = 1,
  kUsageError = 2,
  kBudgetExhausted = 3,
  kPredictionOnly = 4,
};

enum class CheckStatus { Pass, Fail, Skipped };

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  std::string detail;
};

struct MapStats {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  long euler_char = 0;
  int genus = 0;
};

struct CodeStats {
  std::size_t n = 0;
  std::size_t k = 0;
  std::optional<std::size_t> d;
  std::size_t cap = 0;
};

struct RunReport {
  std::string command;
  std::string input;
  std::optional<MapStats> map;
  std::optional<CodeStats> code;
  std::optional<PredictedParams> predicted;
  std::vector<Check> checks;
  std::vector<std::string> notes;
  int exit_code = kSuccess;
  double wall_ms = 0.0;

  void add_check(std::string name, CheckStatus status, std::string detail = {});
  bool any_failed() const;

  // "key: value" lines; the final line is "time_ms: <x>".
  std::string to_text() const;
  // Single-line JSON object.
  std::string to_json() const;
};

struct CommandOptions {
  std::size_t cap = 6;  // 0 skips the distance search
  std::uint64_t budget = 10'000'000;
  unsigned threads = 1;
};

RunReport cmd_generate(const std::string& spec, const std::string& out_path, const CommandOptions& options);
RunReport cmd_verify(const std::string& map_path, const CommandOptions& options);
// Writes <prefix>.hx, <prefix>.hz and <prefix>.css.
RunReport cmd_code(const std::string& map_path, const std::string& prefix, const CommandOptions& options);
RunReport cmd_distance(const std::string& hx_path, const std::string& hz_path, const CommandOptions& options);
RunReport cmd_params(const std::string& spec);
RunReport cmd_search(int r, int s, const std::string& out_path, const CommandOptions& options);

// "n k d family", e.g. "78 54 3 class1:r=3".
std::string params_row(const FamilySpec& spec, const PredictedParams& p);

// Worker count from EMBEDKIT_THREADS (default 1). Throws ValidationError on a bad value.
unsigned threads_from_env();

// Full command line entry point; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace embedkit::cli
