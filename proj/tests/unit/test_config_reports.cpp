#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "bardina/config.hpp"
#include "bardina/energy.hpp"
#include "bardina/reports.hpp"
#include "bardina/snapshot.hpp"

using namespace bardina;

TEST_CASE("config parsing and round trip") {
  const RunConfig c = parse_config(R"(
[grid]
N = 16
L = 6.283185307179586
[physics]
nu = 0.1
alpha = 0.2
[integrator]
mode = picard
dt = 0.01
t_end = 0.5
n_max = 12
tol = 1e-8
[picard]
C_pic = 0.001
[initial_data]
kind = random
seed = 99
spectrum_slope = -2
[output]
dir = out/run1
sample_every = 5
)");
  CHECK(c.grid.n == 16);
  CHECK(c.alpha == 0.2);
  CHECK(c.mode == IntegratorMode::picard);
  CHECK(c.n_max == 12);
  CHECK(c.c_pic == 0.001);
  CHECK(c.seed == 99);
  CHECK(c.kind == "random");
  CHECK(c.out_dir == "out/run1");
  CHECK(c.panels == RunConfig{}.panels);

  const RunConfig d = parse_config(format_config(c));
  CHECK(format_config(d) == format_config(c));
  CHECK(d.solver_params().filter.alpha == 0.2);
}

TEST_CASE("config errors name the violated rule") {
  auto message = [](const std::string& text) {
    try {
      parse_config(text);
    } catch (const ConfigError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("[physics]\nalpha = 0.5\n").find("L/20") != std::string::npos);
  CHECK(message("[grid]\nN = 24\n").find("grid.N") != std::string::npos);
  CHECK(message("[grid]\nM = 16\n").find("unknown key") != std::string::npos);
  CHECK(message("[extra]\nx = 1\n").find("unknown section") != std::string::npos);
  CHECK(message("[physics]\nnu = fast\n").find("physics.nu") != std::string::npos);
  CHECK(message("[integrator]\nmode = euler\n").find("integrator.mode") != std::string::npos);
  CHECK(message("[initial_data]\nkind = vortex\n").find("initial_data.kind") != std::string::npos);
  CHECK(message("[grid\n").find("config") != std::string::npos);
  CHECK_THROWS_AS(load_config("/nonexistent/bardina.ini"), ConfigError);
  CHECK(message("").empty());
}

TEST_CASE("ledger CSV and trajectory index") {
  const RunConfig c;
  SolverParams p = c.solver_params();
  p.dt = 0.1;
  p.t_end = 0.4;
  const GridSpec g{16, c.grid.length};
  const Trajectory tr = integrate(make_initial_state(make_initial_field(RunConfig{.grid = g}), p), p, 2);
  const EnergyLedger led = energy_audit(tr);

  std::ostringstream csv;
  write_ledger_csv(csv, led);
  std::istringstream lines(csv.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == "# schema: bardina.energy_ledger/1");
  std::getline(lines, line);
  CHECK(line == "t,E_alpha,diss_lap,diss_grad,residual");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 5);

  const auto dir = std::filesystem::temp_directory_path() / "bardina_traj_test";
  std::filesystem::remove_all(dir);
  write_trajectory(dir, tr, led);
  std::ifstream in(dir / "trajectory.json");
  const auto index = nlohmann::json::parse(in);
  CHECK(index["schema"] == kTrajectorySchema);
  REQUIRE(index["samples"].size() == 3);
  CHECK(index["samples"][1]["t"].get<double>() == doctest::Approx(0.2));
  const Snapshot s = read_snapshot(dir / index["samples"][2]["file"].get<std::string>());
  CHECK(s.components.size() == 3);
  std::filesystem::remove_all(dir);
}

TEST_CASE("estimate lines carry a schema header") {
  std::ostringstream out;
  const std::vector<EstimateReport> reports{make_report("a", 1.0, 2.0)};
  write_estimate_lines(out, reports);
  std::istringstream in(out.str());
  std::string first, second;
  std::getline(in, first);
  std::getline(in, second);
  CHECK(nlohmann::json::parse(first)["schema"] == kEstimateSchema);
  const auto row = nlohmann::json::parse(second);
  CHECK(row["name"] == "a");
  CHECK(row["passed"] == true);
}
