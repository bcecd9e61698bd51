// wtecool: screening calculations for coupling a waste-to-energy plant with
// an absorption-cooled data center.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wtecool/commands.hpp"
#include "wtecool/errors.hpp"

namespace {

struct CommonOptions {
  std::string scenario = "baseline";
  std::vector<std::string> sets;
  std::string format = "json";
  std::string output;
  bool no_provenance = false;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--scenario", opts.scenario,
                  "built-in scenario name or key=value config file")
      ->capture_default_str();
  cmd->add_option("--set", opts.sets, "override a parameter, KEY=VALUE (repeatable)");
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--output", opts.output, "write to this file instead of stdout");
  cmd->add_flag("--no-provenance", opts.no_provenance, "omit the provenance header");
}

wtecool::RunConfig to_run_config(const CommonOptions& opts) {
  wtecool::RunConfig config;
  config.scenario = opts.scenario;
  for (const std::string& s : opts.sets) {
    config.overrides.push_back(wtecool::parse_assignment(s));
  }
  config.format = wtecool::parse_output_format(opts.format);
  config.output_path = opts.output;
  config.provenance = !opts.no_provenance;
  return config;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out || !(out << text)) {
    throw wtecool::IoError("cannot write output file '" + path + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Screening model for waste-to-energy driven data-center cooling", "wtecool"};
  app.set_version_flag("--version", std::string(wtecool::version()));
  app.require_subcommand(1);

  CommonOptions common;

  auto* evaluate = app.add_subcommand("evaluate", "evaluate one configuration");
  add_common(evaluate, common);
  std::optional<double> at_distance;
  evaluate->add_option("--at-distance", at_distance, "corridor length in km");

  auto* sweep = app.add_subcommand("sweep", "sweep one variable over a range");
  add_common(sweep, common);
  wtecool::SweepRequest request;
  std::string levels;
  sweep->add_option("--variable", request.variable, "rho, lhv, distance or t_wb")
      ->capture_default_str();
  sweep->add_option("--range", request.range, "lo:hi (default depends on the variable)");
  sweep->add_option("--steps", request.steps, "grid points")
      ->check(CLI::Range(2, 1000000))
      ->capture_default_str();
  sweep->add_option("--levels", levels, "secondary series, e.g. rho=0.3,0.6,0.9");

  auto* breakeven = app.add_subcommand("breakeven", "break-even distances");
  add_common(breakeven, common);
  std::string objective = "all";
  breakeven->add_option("--objective", objective, "all, coverage, exergy or net-electric")
      ->capture_default_str();

  auto* lcoc = app.add_subcommand("lcoc", "levelized cost of compute");
  add_common(lcoc, common);
  std::string periods;
  lcoc->add_option("--periods", periods, "CSV file of cost periods")->required();

  auto* scenarios = app.add_subcommand("scenarios", "list scenario packages and keys");
  std::string scenarios_format = "csv";
  scenarios->add_option("--format", scenarios_format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? wtecool::kExitOk : wtecool::kExitUsage;
  }

  try {
    if (*scenarios) {
      emit(wtecool::cmd_scenarios(wtecool::parse_output_format(scenarios_format)), "");
      return wtecool::kExitOk;
    }
    const wtecool::RunConfig config = to_run_config(common);
    std::string text;
    if (*evaluate) {
      text = wtecool::cmd_evaluate(config, at_distance);
    } else if (*sweep) {
      if (!levels.empty()) request.levels = levels;
      text = wtecool::cmd_sweep(config, request);
    } else if (*breakeven) {
      text = wtecool::cmd_breakeven(config, objective);
    } else if (*lcoc) {
      text = wtecool::cmd_lcoc_file(config, periods);
    }
    emit(text, config.output_path);
    return wtecool::kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "wtecool: error: " << e.what() << "\n";
    return wtecool::exit_code_for(e);
  }
}
