#pragma once

// Seeded generators of valid model configurations for property tests.

#include <cstdint>
#include <random>

#include "wtecool/core_model.hpp"

namespace wtecool::testing {

class ConfigGenerator {
 public:
  explicit ConfigGenerator(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  WtePlant plant() {
    return WtePlant(uniform(0.5, 40.0), uniform(5.0, 15.0), uniform(0.6, 0.98),
                    uniform(0.1, 0.4), uniform(0.2, 1.0));
  }

  ParasiticModel parasitics() {
    return ParasiticModel(uniform(0.0, 5.0), uniform(0.0, 0.05), uniform(0.0, 0.05));
  }

  Corridor corridor() { return Corridor(uniform(0.0, 120.0), uniform(0.0, 0.03), parasitics()); }

  /// cop_abs stays below 1 so the cascade balance is physical.
  CouplingLink link() {
    const double tc = uniform(275.0, 290.0);
    return CouplingLink(uniform(0.5, 0.95), tc + uniform(1.0, 30.0), tc);
  }

  DataCenter data_center() {
    const double p_max = uniform(5.0, 100.0);
    const double rho = uniform(0.05, 1.0);
    return DataCenter(p_max, rho, uniform(0.3, 2.0), uniform(0.0, 0.2) * rho * p_max,
                      uniform(2.0, 8.0));
  }

  SystemConfig system() { return SystemConfig{plant(), corridor(), link(), data_center()}; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace wtecool::testing
