#include "wtecool/run_config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <istream>

#include "wtecool/errors.hpp"

namespace wtecool {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

using Setter = std::function<void(ScenarioSpec&, double)>;

struct KeyEntry {
  OverrideKey info;
  Setter set;
};

const std::vector<KeyEntry>& key_table() {
  static const std::vector<KeyEntry> table = [] {
    std::vector<KeyEntry> t;
    for (const PackageRow& row : package_rows()) {
      const auto member = row.member;
      t.push_back({{std::string(row.group) + "." + std::string(row.key), row.unit,
                    "scenario table value"},
                   [member](ScenarioSpec& s, double v) { s.package.*member = v; }});
    }
    auto add = [&t](std::string_view key, std::string_view unit, std::string_view what,
                    Setter set) { t.push_back({{std::string(key), unit, what}, std::move(set)}); };
    using S = ScenarioSpec;
    add("plant.eta_c", "-", "combustion/boiler utilization",
        [](S& s, double v) { s.assumptions.eta_c = v; });
    add("plant.eta_e", "-", "net electrical efficiency",
        [](S& s, double v) { s.assumptions.eta_e = v; });
    add("plant.alpha_h", "-", "recoverable heat fraction (derived if unset)",
        [](S& s, double v) { s.assumptions.alpha_h = v; });
    add("corridor.length_km", "km", "separation distance",
        [](S& s, double v) { s.assumptions.length_km = v; });
    add("corridor.kappa0", "MW", "fixed parasitic load (derived if unset)",
        [](S& s, double v) { s.assumptions.kappa0 = v; });
    add("corridor.kappa1", "-", "parasitic load per MW of IT",
        [](S& s, double v) { s.assumptions.kappa1 = v; });
    add("corridor.kappa2", "MW/km", "parasitic load per km",
        [](S& s, double v) { s.assumptions.kappa2 = v; });
    add("dc.p_it_max", "MW", "maximum IT capacity",
        [](S& s, double v) { s.assumptions.p_it_max = v; });
    add("dc.rho", "-", "IT utilization in (0, 1]", [](S& s, double v) { s.assumptions.rho = v; });
    add("dc.aux_fraction", "-", "non-cooling auxiliary load per MW of IT",
        [](S& s, double v) { s.assumptions.aux_fraction = v; });
    add("dc.w_aux", "MW", "auxiliary load (derived if unset)",
        [](S& s, double v) { s.assumptions.w_aux = v; });
    add("dc.gamma", "-", "cooling requirement per MW of IT (derived if unset)",
        [](S& s, double v) { s.assumptions.gamma = v; });
    add("dc.cop_m", "-", "mechanical chiller COP",
        [](S& s, double v) { s.assumptions.cop_m = v; });
    add("link.t0", "K", "ambient reference temperature (derived from t_cw if unset)",
        [](S& s, double v) { s.assumptions.t0_k = v; });
    add("link.tc", "K", "chilled-service temperature",
        [](S& s, double v) { s.assumptions.tc_k = v; });
    add("screening.cop_e", "-", "baseline electric chiller COP",
        [](S& s, double v) { s.assumptions.cop_e = v; });
    add("screening.cool_share", "-", "baseline cooling electricity per MW of IT",
        [](S& s, double v) { s.assumptions.cool_share = v; });
    add("screening.w_cool_base", "MW_e", "baseline cooling electricity (derived if unset)",
        [](S& s, double v) { s.assumptions.w_cool_base = v; });
    return t;
  }();
  return table;
}

const KeyEntry& find_key(std::string_view key) {
  const auto& table = key_table();
  for (const KeyEntry& e : table) {
    if (e.info.key == key) {
      return e;
    }
  }
  if (key.find('.') == std::string_view::npos) {
    for (const KeyEntry& e : table) {
      const auto dot = e.info.key.rfind('.');
      if (std::string_view(e.info.key).substr(dot + 1) == key) {
        return e;
      }
    }
  }
  throw ConfigError("unknown configuration key '" + std::string(key) + "'");
}

}  // namespace

OutputFormat parse_output_format(std::string_view text) {
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  throw UnknownName("unknown output format '" + std::string(text) + "' (expected csv or json)");
}

std::vector<OverrideKey> override_keys() {
  std::vector<OverrideKey> keys;
  for (const KeyEntry& e : key_table()) {
    keys.push_back(e.info);
  }
  return keys;
}

std::string canonical_key(std::string_view key) { return find_key(key).info.key; }

double parse_number(std::string_view text, std::string_view key) {
  const std::string_view t = trim(text);
  double value = 0.0;
  const auto* end = t.data() + t.size();
  const auto [ptr, ec] = std::from_chars(t.data(), end, value);
  if (t.empty() || ec != std::errc{} || ptr != end || !std::isfinite(value)) {
    throw ConfigError("invalid value for '" + std::string(key) + "': '" + std::string(text) +
                      "' is not a finite number");
  }
  return value;
}

KeyValue parse_assignment(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) {
    throw ConfigError("expected key=value, got '" + std::string(text) + "'");
  }
  const std::string_view key = trim(text.substr(0, eq));
  if (key.empty()) {
    throw ConfigError("missing key in '" + std::string(text) + "'");
  }
  return {std::string(key), std::string(trim(text.substr(eq + 1)))};
}

std::vector<KeyValue> parse_key_values(std::istream& in, std::string_view source) {
  std::vector<KeyValue> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view content = line;
    if (const auto hash = content.find('#'); hash != std::string_view::npos) {
      content = content.substr(0, hash);
    }
    content = trim(content);
    if (content.empty()) {
      continue;
    }
    try {
      out.push_back(parse_assignment(content));
    } catch (const ConfigError& e) {
      throw ConfigError(std::string(source) + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

void apply_overrides(ScenarioSpec& spec, const std::vector<KeyValue>& overrides) {
  if (overrides.empty()) {
    return;
  }
  bool beta_set = false;
  bool pipe_changed = false;
  for (const auto& [key, value] : overrides) {
    const KeyEntry& entry = find_key(key);
    const double v = parse_number(value, entry.info.key);
    entry.set(spec, v);
    beta_set = beta_set || entry.info.key == "corridor.beta";
    pipe_changed = pipe_changed || entry.info.key == "corridor.q_pipe_loss" ||
                   entry.info.key == "corridor.q_trunk";
  }
  spec.package.kind = PackageKind::custom;
  if (pipe_changed && !beta_set) {
    spec.package.beta = beta_from_pipe_loss(spec.package.q_pipe_loss, spec.package.q_trunk);
  }
}

ScenarioSpec load_scenario(std::string_view name_or_path) {
  const auto names = named_scenario_names();
  if (std::find(names.begin(), names.end(), name_or_path) != names.end()) {
    return named_scenario(name_or_path);
  }
  const std::filesystem::path path{std::string(name_or_path)};
  if (!std::filesystem::is_regular_file(path)) {
    throw UnknownName("unknown scenario '" + std::string(name_or_path) +
                      "' (not a built-in name or a readable file)");
  }
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot read scenario file '" + path.string() + "'");
  }
  std::vector<KeyValue> entries = parse_key_values(in, path.string());
  std::string base = "baseline";
  std::vector<KeyValue> overrides;
  for (auto& kv : entries) {
    if (kv.first == "scenario") {
      base = kv.second;
    } else {
      overrides.push_back(std::move(kv));
    }
  }
  if (std::find(names.begin(), names.end(), base) == names.end()) {
    throw UnknownName("unknown base scenario '" + base + "' in " + path.string());
  }
  ScenarioSpec spec = named_scenario(base);
  apply_overrides(spec, overrides);
  spec.package.kind = PackageKind::custom;
  spec.package.name = path.stem().string();
  return spec;
}

ResolvedScenario resolve(const RunConfig& config) {
  ScenarioSpec spec = load_scenario(config.scenario);
  apply_overrides(spec, config.overrides);
  return resolve(spec);
}

}  // namespace wtecool
