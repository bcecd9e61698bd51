#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "wtecool/commands.hpp"
#include "wtecool/errors.hpp"

using namespace wtecool;
using doctest::Approx;
using nlohmann::json;

namespace {

RunConfig config_for(std::string scenario, OutputFormat format = OutputFormat::json) {
  RunConfig c;
  c.scenario = std::move(scenario);
  c.format = format;
  c.provenance = false;
  return c;
}

constexpr const char* kPeriodsHeader =
    "t,capex_it,capex_couple,opex_it,p_e,e_grid,p_w,w_waste,rev_elec,k_service\n";

#ifdef WTECOOL_CLI_PATH
int run_cli(const std::string& args, std::string* out = nullptr) {
  const std::string cmd = std::string(WTECOOL_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string text;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) text.append(buf.data(), n);
  const int status = pclose(pipe);
  if (out) *out = text;
  return WEXITSTATUS(status);
}
#endif

}  // namespace

TEST_SUITE("commands") {
  TEST_CASE("evaluate echoes the scenario") {
    const json j = json::parse(cmd_evaluate(config_for("baseline")));
    CHECK(j["scenario"]["beta"] == 0.005);
    CHECK(j["scenario"]["cop_abs"] == 0.75);
    CHECK_FALSE(j.contains("provenance"));
    CHECK(j["flows"]["coupled"]["q_cool"].get<double>() == Approx(58.59375));
    CHECK(j.contains("cascade"));
    CHECK(j.contains("thresholds"));
    CHECK(j["superiority"]["holds"] == true);
  }

  TEST_CASE("evaluate at a distance") {
    const json j = json::parse(cmd_evaluate(config_for("representative"), 0.0));
    CHECK(j["screening"]["avoided_net"].get<double>() == Approx(8.9).epsilon(0.01));
    const json far = json::parse(cmd_evaluate(config_for("representative"), 40.0));
    CHECK(far["inputs"]["corridor"]["length_km"] == 40.0);
  }

  TEST_CASE("evaluate rejects invalid overrides with the field name") {
    RunConfig c = config_for("baseline");
    c.overrides = {{"beta", "-1"}};
    try {
      cmd_evaluate(c);
      FAIL("expected InvalidParameter");
    } catch (const InvalidParameter& e) {
      CHECK(std::string(e.what()).find("corridor.beta") != std::string::npos);
      CHECK(exit_code_for(e) == kExitInvariant);
    }
  }

  TEST_CASE("exit codes are distinct") {
    CHECK(exit_code_for(UnknownName("x")) == kExitUnknownName);
    CHECK(exit_code_for(ConfigError("x")) == kExitConfigError);
    CHECK(exit_code_for(InvalidParameter("f", "x")) == kExitInvariant);
    CHECK(exit_code_for(Infeasible("x")) == kExitInfeasible);
    CHECK(exit_code_for(IoError("x")) == kExitIo);
  }

  TEST_CASE("csv evaluate output") {
    RunConfig c = config_for("baseline", OutputFormat::csv);
    const std::string text = cmd_evaluate(c);
    CHECK(text.rfind("field,value\n", 0) == 0);
    CHECK(text.find("scenario.beta,0.0050000000000000001\n") != std::string::npos);
    c.provenance = true;
    CHECK(cmd_evaluate(c).rfind("# wtecool ", 0) == 0);
  }

  TEST_CASE("distance sweep crosses the net-electric break-even") {
    SweepRequest req{.variable = "distance", .range = "0:60", .steps = 61};
    const json j = json::parse(cmd_sweep(config_for("representative"), req));
    const auto& points = j["points"];
    REQUIRE(points.size() == 61);
    CHECK(points[21]["avoided_net"].get<double>() > 8.0);
    CHECK(points[22]["avoided_net"].get<double>() < 8.0);
    CHECK(j["thresholds"]["l_star"]["km"].get<double>() == Approx(21.46).epsilon(1e-3));
  }

  TEST_CASE("sweep with levels") {
    SweepRequest req{.variable = "lhv", .range = "4:16", .steps = 13, .levels = "rho=0.3,0.6,0.9"};
    const std::string csv = cmd_sweep(config_for("baseline", OutputFormat::csv), req);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line.rfind("series,lhv,regime", 0) == 0);
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 39);
  }

  TEST_CASE("sweep rejects bad ranges") {
    SweepRequest zero{.variable = "distance", .range = "5:5", .steps = 11};
    CHECK_THROWS_AS(cmd_sweep(config_for("baseline"), zero), InvalidParameter);
    SweepRequest malformed{.variable = "distance", .range = "5-9", .steps = 11};
    CHECK_THROWS_AS(cmd_sweep(config_for("baseline"), malformed), ConfigError);
  }

  TEST_CASE("breakeven report") {
    const json j = json::parse(cmd_breakeven(config_for("representative"), "net-electric"));
    CHECK(j["l_star"]["closed_form"]["km"].get<double>() == Approx(21.46).epsilon(1e-3));
    CHECK_FALSE(j.contains("l_cov"));

    RunConfig starved = config_for("baseline");
    starved.overrides = {{"dc.gamma", "3"}};
    const json s = json::parse(cmd_breakeven(starved, "coverage"));
    CHECK(s["l_cov"]["verdict"] == "no coverage at any distance");

    RunConfig sloped = config_for("baseline");
    sloped.overrides = {{"corridor.kappa2", "0.02"}};
    const json k = json::parse(cmd_breakeven(sloped, "exergy"));
    CHECK(k["parasitics"]["distance_dependent"] == true);
    CHECK(k["l_ex"]["method"] == "numeric");
    CHECK(k["l_ex"]["numeric"]["km"].get<double>() < k["l_ex"]["closed_form"]["km"].get<double>());

    CHECK_THROWS_AS(cmd_breakeven(config_for("baseline"), "profit"), UnknownName);
  }

  TEST_CASE("lcoc report") {
    std::istringstream single(std::string(kPeriodsHeader) + "0,500,0,0,0,0,0,0,0,20\n");
    const json one = json::parse(cmd_lcoc(config_for("baseline"), single));
    CHECK(one["lcoc"].get<double>() == Approx(25.0));

    std::istringstream three(std::string(kPeriodsHeader) +
                             "0,0,0,100,0,0,0,0,0,10\n1,0,0,110,0,0,0,0,0,10\n2,0,0,120,0,0,0,0,0,10\n");
    const json j = json::parse(cmd_lcoc(config_for("baseline"), three));
    CHECK(j["discount_rate"] == 0.07);
    CHECK(j["lcoc"].get<double>() == Approx(10.954928613642725).epsilon(1e-12));
    CHECK(j["periods"].size() == 3);

    std::istringstream empty("");
    CHECK_THROWS_AS(cmd_lcoc(config_for("baseline"), empty), ConfigError);
    CHECK_THROWS_AS(cmd_lcoc_file(config_for("baseline"), "/nonexistent/periods.csv"), IoError);
  }

  TEST_CASE("scenario listing") {
    const std::string csv = cmd_scenarios(OutputFormat::csv);
    CHECK(csv.rfind("parameter,unit,conservative,baseline,aggressive\n", 0) == 0);
    CHECK(csv.find("corridor.beta,1/km,0.02,0.0050000000000000001,0.001") != std::string::npos);
    const json j = json::parse(cmd_scenarios(OutputFormat::json));
    CHECK(j["packages"]["aggressive"]["p_e"] == 0.18);
  }

#ifdef WTECOOL_CLI_PATH
  TEST_CASE("executable exit statuses") {
    std::string out;
    CHECK(run_cli("evaluate --scenario baseline --no-provenance", &out) == kExitOk);
    CHECK(json::parse(out)["scenario"]["beta"] == 0.005);
    CHECK(run_cli("evaluate --scenario atlantis") == kExitUnknownName);
    CHECK(run_cli("evaluate --set nope=1") == kExitConfigError);
    CHECK(run_cli("evaluate --set beta=-1") == kExitInvariant);
    CHECK(run_cli("lcoc --periods /nonexistent.csv") == kExitIo);
    CHECK(run_cli("sweep --range 3:3") == kExitInvariant);
    CHECK(run_cli("frobnicate") == kExitUsage);

    const auto path = std::filesystem::temp_directory_path() / "wtecool_cli_out.csv";
    CHECK(run_cli("scenarios --format csv") == kExitOk);
    CHECK(run_cli("breakeven --format csv --no-provenance --output " + path.string()) == kExitOk);
    std::ifstream in(path);
    std::string first;
    std::getline(in, first);
    CHECK(first == "field,value");
    std::filesystem::remove(path);
  }
#endif
}
