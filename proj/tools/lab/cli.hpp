#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ellsl2/report.hpp"

namespace ellsl2::lab {

inline constexpr int kExitPass = 0;
inline constexpr int kExitResidual = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

enum class OutputFormat { json, csv };

struct RunConfig {
  std::string verb;    // rep | deform | hopf | auto | rewrite | elliptic | verify-all | sweep
  std::string action;  // build | verify | delta | shift | nf | K | eval | periods (empty for verify-all, sweep)
  std::string j = "1/2";
  std::string j1 = "1/2";
  std::string j2 = "1/2";
  std::string j3 = "1/2";
  double h = 0.5;
  double k = 0.5;
  std::optional<std::size_t> order;
  double tol = 1e-10;
  OutputFormat format = OutputFormat::json;
  std::uint64_t seed = 1;
  std::string u = "0.3,0";
  std::string which;
  std::string form;
  bool jordanian = false;
  std::string expr;
  // Sweep grid: comma-separated value lists.
  std::string js;
  std::string hs;
  std::string ks;
  bool scalar_checks = false;
  unsigned threads = 0;
};

struct RunResult {
  int exit_code = kExitPass;
  std::string output;
};

// Parses argv (flags take precedence over --config key = value lines, which
// take precedence over the ELLSL2_FORMAT environment default). Returns a
// RunResult for --help and usage errors.
std::variant<RunConfig, RunResult> parse_command_line(int argc, const char* const* argv,
                                                      const char* env_format = nullptr);

RunResult run(const RunConfig& config);

struct SweepCell {
  std::string j;
  double h = 0.0;
  double k = 0.0;
};

struct SweepRow {
  SweepCell cell;
  // Largest residual / scale per family, in column order.
  std::vector<std::pair<std::string, double>> families;
  std::string error;
};

std::vector<SweepCell> sweep_grid(const RunConfig& config);
// One row per cell in grid order; cells run concurrently on up to
// config.threads workers.
std::vector<SweepRow> sweep(const RunConfig& config, const std::vector<SweepCell>& grid);
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

}  // namespace ellsl2::lab
