#pragma once

#include <string>

namespace wtecool {

enum class DistanceKind {
  finite,              // km holds the threshold distance
  unbounded,           // condition holds at every distance searched
  infeasible_at_zero,  // condition fails even for a co-located pair
};

struct DistanceResult {
  DistanceKind kind = DistanceKind::finite;
  double km = 0.0;

  bool is_finite() const noexcept { return kind == DistanceKind::finite; }

  /// Human-readable form used in reports, e.g. "20.872 km".
  std::string describe() const;
};

}  // namespace wtecool
