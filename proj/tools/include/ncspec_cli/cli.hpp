#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ncspec/clifford.hpp"
#include "ncspec/nctorus.hpp"
#include "ncspec/serialize.hpp"

namespace ncspec::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Raised for invalid configurations; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  int n = 2;
  int N = 8;
  int cutoff = 8;
  int max_n = 8;
  std::string theta = "0";
  Sign branch = Sign::Plus;
  /// 1-based directions; empty means all.
  std::vector<int> active;
  unsigned long long seed = 1;
  std::string out;
  std::string format = "json";
  double tolerance = 1e-10;
  double tail_spread = 0.25;
  double growth_slope = 0.05;
  std::optional<double> exponent;
  std::vector<int> probe_radii;
  int pairs = 50;
  int choices = 50;
  bool compare_reference = false;

  /// Throws ConfigError.
  void validate() const;
  /// Inline scalar, inline row-major list, or a JSON file path.
  [[nodiscard]] ThetaMatrix load_theta() const;
  /// 0-based active directions (all directions when unset).
  [[nodiscard]] std::vector<int> active_directions() const;
};

struct CommandResult {
  Json report;
  std::string csv;
  int exit_code = kExitPass;
};

CommandResult cmd_clifford_table(const RunConfig& config);
CommandResult cmd_nct_verify(const RunConfig& config);
CommandResult cmd_summability(const RunConfig& config);
CommandResult cmd_su2(const RunConfig& config);

/// Parses argv, dispatches, writes the report to `out` (or --out) and
/// diagnostics to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncspec::cli
