#pragma once

// Run configuration for the command-line front end: a named scenario or a
// flat `key = value` file, plus `--set key=value` overrides.
//
// Keys are dotted (`corridor.beta`); the last segment alone is accepted as
// an alias (`beta`). Values use the natural units of the scenario table.

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wtecool/scenarios.hpp"

namespace wtecool {

enum class OutputFormat { csv, json };

/// Throws UnknownName.
OutputFormat parse_output_format(std::string_view text);

using KeyValue = std::pair<std::string, std::string>;

struct RunConfig {
  std::string scenario = "baseline";  // built-in name or path to a config file
  std::vector<KeyValue> overrides;
  OutputFormat format = OutputFormat::json;
  std::string output_path;  // empty: stdout
  bool provenance = true;
};

struct OverrideKey {
  std::string key;  // canonical dotted form
  std::string_view unit;
  std::string_view description;
};

std::vector<OverrideKey> override_keys();

/// Maps an alias or dotted key to its canonical form; throws ConfigError.
std::string canonical_key(std::string_view key);

/// Parses `key = value` lines, skipping blanks and `#` comments.
/// Throws ConfigError with the line number.
std::vector<KeyValue> parse_key_values(std::istream& in, std::string_view source);

/// Parses `key=value`; throws ConfigError.
KeyValue parse_assignment(std::string_view text);

/// Strict decimal parse; throws ConfigError naming `key`.
double parse_number(std::string_view text, std::string_view key);

/// Applies overrides in order. Any override turns the package custom. If the
/// pipe loss or trunk flow changes and beta is not itself overridden, beta is
/// re-derived from the pipe-loss mapping.
void apply_overrides(ScenarioSpec& spec, const std::vector<KeyValue>& overrides);

/// A built-in/named scenario, or a config file whose optional `scenario` key
/// names the base (default baseline) and whose other keys are overrides.
ScenarioSpec load_scenario(std::string_view name_or_path);

ResolvedScenario resolve(const RunConfig& config);

}  // namespace wtecool
