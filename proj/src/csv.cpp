#include "wtecool/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>

#include "wtecool/errors.hpp"

namespace wtecool::csv {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_cell(std::string_view cell, std::string_view column, std::string_view where) {
  double value = 0.0;
  const auto* end = cell.data() + cell.size();
  const auto [ptr, ec] = std::from_chars(cell.data(), end, value);
  if (cell.empty() || ec != std::errc{} || ptr != end || !std::isfinite(value)) {
    throw ConfigError(std::string(where) + ": column '" + std::string(column) +
                      "' is not a number: '" + std::string(cell) + "'");
  }
  return value;
}

}  // namespace

std::string format_double(double value) {
  if (!std::isfinite(value)) {
    return {};
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    cells.emplace_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) {
      break;
    }
    start = comma + 1;
  }
  return cells;
}

std::vector<CostPeriod> read_periods(std::istream& in, std::string_view source) {
  const std::vector<std::string> expected = split(kPeriodColumns);
  std::vector<CostPeriod> periods;
  bool have_header = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view content = trim(line);
    if (content.empty() || content.front() == '#') {
      continue;
    }
    const std::string where = std::string(source) + ":" + std::to_string(line_no);
    const std::vector<std::string> cells = split(content);
    if (!have_header) {
      if (cells != expected) {
        throw ConfigError(where + ": expected header '" + std::string(kPeriodColumns) + "'");
      }
      have_header = true;
      continue;
    }
    if (cells.size() != expected.size()) {
      throw ConfigError(where + ": expected " + std::to_string(expected.size()) +
                        " columns, found " + std::to_string(cells.size()));
    }
    double v[10];
    for (std::size_t i = 0; i < expected.size(); ++i) {
      v[i] = parse_cell(cells[i], expected[i], where);
    }
    if (v[0] != std::floor(v[0]) || v[0] < 0.0) {
      throw ConfigError(where + ": column 't' must be a non-negative integer");
    }
    CostPeriod p{static_cast<int>(v[0]), v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8], v[9]};
    try {
      validate(p);
    } catch (const InvalidParameter& e) {
      throw ConfigError(where + ": " + e.what());
    }
    periods.push_back(p);
  }
  if (!have_header) {
    throw ConfigError(std::string(source) + ": empty file (header row is mandatory)");
  }
  if (periods.empty()) {
    throw ConfigError(std::string(source) + ": no cost periods after the header");
  }
  return periods;
}

}  // namespace wtecool::csv
