#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "wtecool/economics.hpp"
#include "wtecool/errors.hpp"

using namespace wtecool;
using doctest::Approx;

namespace {

// Representative screening inputs in natural units: 6 kWh_e/MWh_th pumping, 4 % auxiliaries.
ScreeningInputs representative(double beta = 0.005) {
  return ScreeningInputs::from_natural_units(78.125, 0.75, 5.0, 6.0, 0.04, beta, 8.0);
}

}  // namespace

TEST_SUITE("economics") {
  TEST_CASE("gross avoided electricity") {
    const ScreeningInputs s = representative();
    CHECK(avoided_electricity_gross(s, 0.0) == Approx(11.71875).epsilon(1e-12));
    CHECK(avoided_electricity_gross(s, 1e6) == Approx(0.0).epsilon(1e-12));
    const ScreeningInputs free_cooling = ScreeningInputs::from_natural_units(
        78.125, 0.75, std::numeric_limits<double>::max(), 6.0, 0.04, 0.005, 8.0);
    CHECK(avoided_electricity_gross(free_cooling, 0.0) == Approx(0.0).epsilon(1e-12));
  }

  TEST_CASE("net avoided electricity") {
    const ScreeningInputs s = representative();
    // 11.71875 - 0.006 * 78.125 - 0.04 * 58.59375
    CHECK(avoided_electricity_net_at_source(s) == Approx(8.90625).epsilon(1e-12));
    CHECK(avoided_electricity_net(s, 0.0) == Approx(8.90625).epsilon(1e-12));
    CHECK(avoided_electricity_net(s, 20.0) == Approx(8.90625 * std::exp(-0.1)).epsilon(1e-12));
    CHECK(avoided_electricity_net(s, 40.0) == Approx(8.90625 * std::exp(-0.2)).epsilon(1e-12));

    const ScreeningInputs bare(78.125, 0.75, 5.0, 0.0, 0.0, 0.005, 8.0);
    CHECK(avoided_electricity_net(bare, 15.0) == Approx(avoided_electricity_gross(bare, 15.0)));

    const ScreeningInputs lossy(78.125, 0.75, 5.0, 0.2, 0.5, 0.005, 8.0);
    CHECK(avoided_electricity_net_at_source(lossy) < 0.0);
    CHECK_THROWS_AS(avoided_electricity_net(lossy, 0.0), Infeasible);
  }

  TEST_CASE("break-even corridor") {
    const DistanceResult d = breakeven_corridor(representative());
    REQUIRE(d.is_finite());
    CHECK(d.km == Approx(21.462347157817607).epsilon(1e-12));

    const ScreeningInputs at_target(78.125, 0.75, 5.0, 0.006, 0.04, 0.005, 8.90625);
    CHECK(breakeven_corridor(at_target).km == Approx(0.0).epsilon(1e-9));

    const ScreeningInputs short_of_target(78.125, 0.75, 5.0, 0.006, 0.04, 0.005, 10.0);
    CHECK(breakeven_corridor(short_of_target).kind == DistanceKind::infeasible_at_zero);

    CHECK(breakeven_corridor(representative(0.0)).kind == DistanceKind::unbounded);
  }

  TEST_CASE("screening inputs validate") {
    CHECK_THROWS_AS(ScreeningInputs(78.0, 0.75, 0.0, 0.0, 0.0, 0.005, 8.0), InvalidParameter);
    CHECK_THROWS_AS(ScreeningInputs(78.0, 0.75, 5.0, 0.0, 1.0, 0.005, 8.0), InvalidParameter);
    CHECK_THROWS_AS(ScreeningInputs(78.0, 0.75, 5.0, 0.0, 0.0, -0.005, 8.0), InvalidParameter);
  }

  TEST_CASE("grid electricity") {
    GridAccounting acct{.e_it = 1000.0, .e_aux = 50.0, .q_req = 1350.0, .f = 1.0, .cop_m = 5.0,
                        .w_par_energy = 0.0, .e_onsite = 0.0};
    GridBalance g = grid_electricity(acct);
    CHECK(g.e_grid == Approx(1050.0));
    CHECK(g.export_surplus == 0.0);

    acct.f = 0.5;
    CHECK(acct.residual_cooling() == Approx(135.0));
    CHECK(grid_electricity(acct).e_grid == Approx(1185.0));

    acct.e_onsite = 5000.0;
    g = grid_electricity(acct);
    CHECK(g.e_grid == 0.0);
    CHECK(g.export_surplus == Approx(5000.0 - 1185.0));

    acct.f = 1.5;
    CHECK_THROWS_AS(grid_electricity(acct), InvalidParameter);
  }

  TEST_CASE("period cost") {
    CHECK(period_cost(CostPeriod{}) == 0.0);
    CostPeriod energy_only{.t = 0, .p_e = 0.12, .e_grid = 1000.0};
    CHECK(period_cost(energy_only) == Approx(120000.0).epsilon(1e-12));

    CostPeriod full{.t = 2, .capex_it = 10.0, .capex_couple = 5.0, .opex_it = 3.0, .p_e = 0.1,
                    .e_grid = 2.0, .p_w = 4.0, .w_waste = 1.5, .rev_elec = 7.0, .k_service = 1.0};
    const CostBreakdown b = period_breakdown(full);
    CHECK(b.electricity == Approx(200.0));
    CHECK(b.waste == Approx(6.0));
    CHECK(b.total == Approx(10.0 + 5.0 + 3.0 + 200.0 + 6.0 - 7.0));
    CHECK(period_cost(full) == b.total);

    CHECK_THROWS_AS(validate(CostPeriod{.t = -1}), InvalidParameter);
    CHECK_THROWS_AS(validate(CostPeriod{.t = 0, .p_e = -0.1}), InvalidParameter);
  }

  TEST_CASE("levelized cost of compute") {
    std::vector<CostPeriod> one{CostPeriod{.t = 0, .capex_it = 250.0, .k_service = 50.0}};
    CHECK(lcoc(one, 0.0) == Approx(5.0));
    CHECK(lcoc(one, 0.3) == Approx(5.0));

    std::vector<CostPeriod> two{CostPeriod{.t = 0, .capex_it = 100.0, .k_service = 10.0},
                                CostPeriod{.t = 1, .capex_it = 100.0, .k_service = 10.0}};
    CHECK(lcoc(two, 0.0) == Approx(10.0));

    // Discount table at 7 %: 1, 0.934579..., 0.873438...
    std::vector<CostPeriod> three{CostPeriod{.t = 0, .opex_it = 100.0, .k_service = 10.0},
                                  CostPeriod{.t = 1, .opex_it = 110.0, .k_service = 10.0},
                                  CostPeriod{.t = 2, .opex_it = 120.0, .k_service = 10.0}};
    CHECK(lcoc(three, 0.07) == Approx(10.954928613642725).epsilon(1e-12));

    CHECK_THROWS_AS(lcoc(std::vector<CostPeriod>{}, 0.07), InvalidParameter);
    CHECK_THROWS_AS(lcoc(three, -1.0), InvalidParameter);
    std::vector<CostPeriod> no_service{CostPeriod{.t = 0, .opex_it = 100.0}};
    CHECK_THROWS_AS(lcoc(no_service, 0.07), InvalidParameter);
  }
}
