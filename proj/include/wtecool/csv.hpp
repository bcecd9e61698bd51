#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "wtecool/economics.hpp"

namespace wtecool::csv {

/// 17 significant digits, '.' separator, no grouping; round-trips exactly.
/// Non-finite values format as an empty cell.
std::string format_double(double value);

/// Splits on commas and trims surrounding blanks. No quoting support.
std::vector<std::string> split(std::string_view line);

/// Column order of the periods file; the header row is mandatory.
inline constexpr std::string_view kPeriodColumns =
    "t,capex_it,capex_couple,opex_it,p_e,e_grid,p_w,w_waste,rev_elec,k_service";

/// Parses a cost-period CSV. `#` comment lines and blank lines are skipped.
/// Throws ConfigError naming the offending line number.
std::vector<CostPeriod> read_periods(std::istream& in, std::string_view source = "periods");

}  // namespace wtecool::csv
