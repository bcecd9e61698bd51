#pragma once

// Command implementations behind the `wtecool` executable. Each returns the
// full output text so it can be tested without a process boundary; errors
// propagate as exceptions and map to exit statuses via exit_code_for().

#include <exception>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "wtecool/run_config.hpp"

namespace wtecool {

std::string_view version() noexcept;

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitUnknownName = 2,
  kExitConfigError = 3,
  kExitInvariant = 4,
  kExitInfeasible = 5,
  kExitIo = 6,
};

int exit_code_for(const std::exception& error) noexcept;

/// Single-configuration report. `at_distance_km` replaces the corridor length.
std::string cmd_evaluate(const RunConfig& config, std::optional<double> at_distance_km = {});

struct SweepRequest {
  std::string variable = "distance";
  std::string range;               // "lo:hi"
  int steps = 101;
  std::optional<std::string> levels;  // "rho=0.3,0.6,0.9"
};

std::string cmd_sweep(const RunConfig& config, const SweepRequest& request);

/// objective: all | coverage | exergy | net-electric.
std::string cmd_breakeven(const RunConfig& config, std::string_view objective = "all");

std::string cmd_lcoc(const RunConfig& config, std::istream& periods,
                     std::string_view source = "periods");
std::string cmd_lcoc_file(const RunConfig& config, const std::string& periods_path);

std::string cmd_scenarios(OutputFormat format);

}  // namespace wtecool
