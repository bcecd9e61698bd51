#pragma once

// Boundary unit conversions. Internal canon: MW, km, K, kg/s, MJ/kg.

namespace wtecool::units {

inline constexpr double kSecondsPerDay = 86400.0;
inline constexpr double kKelvinOffset = 273.15;

constexpr double tonnes_per_day_to_kg_per_s(double tonnes_per_day) {
  return tonnes_per_day * 1000.0 / kSecondsPerDay;
}

constexpr double kg_per_s_to_tonnes_per_day(double kg_per_s) {
  return kg_per_s * kSecondsPerDay / 1000.0;
}

// GJ/day -> MW (MJ/s).
constexpr double gj_per_day_to_mw(double gj_per_day) {
  return gj_per_day * 1000.0 / kSecondsPerDay;
}

// kWh_e per MWh_th -> dimensionless MW_e/MW_th.
constexpr double kwh_per_mwh_to_ratio(double kwh_per_mwh) { return kwh_per_mwh / 1000.0; }

constexpr double celsius_to_kelvin(double celsius) { return celsius + kKelvinOffset; }

// Price per kWh applied to an energy in MWh.
constexpr double energy_cost(double price_per_kwh, double energy_mwh) {
  return price_per_kwh * energy_mwh * 1000.0;
}

}  // namespace wtecool::units
