// bardina: batch driver for the filter checks, the IF-RK4 solver and the
// Picard construction.
//
// Exit codes: 0 success, 1 suite or solver failure, 2 configuration error.

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bardina/config.hpp"
#include "bardina/energy.hpp"
#include "bardina/estimates.hpp"
#include "bardina/fft.hpp"
#include "bardina/kernels.hpp"
#include "bardina/picard.hpp"
#include "bardina/random_fields.hpp"
#include "bardina/reports.hpp"
#include "bardina/snapshot.hpp"

namespace fs = std::filesystem;
using namespace bardina;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;

struct CommonArgs {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
};

void add_common(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("--config", a.config, "run configuration (INI)")->check(CLI::ExistingFile);
  cmd->add_option("--out", a.out, "output directory (overrides output.dir)");
  cmd->add_option("--seed", a.seed, "random seed (overrides initial_data.seed)");
}

RunConfig resolve(const CommonArgs& a) {
  RunConfig c = a.config.empty() ? RunConfig{} : load_config(a.config);
  if (!a.out.empty()) c.out_dir = a.out;
  if (a.seed) c.seed = *a.seed;
  c.validate();
  return c;
}

void echo_config(const RunConfig& c) {
  fs::create_directories(c.out_dir);
  std::ofstream(c.out_dir / "config.ini") << format_config(c);
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- filter-verify -------------------------------------------------------

constexpr int kCorpusSize = 20;

const std::vector<std::string> kSuites{"estimates",   "convergence_rate",       "self_adjoint",
                                       "leibniz",     "elliptic_gain",          "derivative_commutation"};

struct SuiteBuilder {
  SuiteResult result;
  std::vector<EstimateReport>& sink;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  SuiteBuilder(std::string name, std::vector<EstimateReport>& s) : sink(s) {
    result.name = std::move(name);
    result.worst_slack = std::numeric_limits<double>::infinity();
  }
  void add(EstimateReport r) {
    ++result.run;
    result.passed += r.passed ? 1 : 0;
    const double rel = r.rhs > 0.0 ? r.slack() / r.rhs : r.slack();
    result.worst_slack = std::min(result.worst_slack, rel);
    r.name = result.name + "/" + r.name;
    sink.push_back(std::move(r));
  }
  SuiteResult finish() {
    result.wall_seconds = seconds_since(t0);
    return result;
  }
};

int cmd_filter_verify(const CommonArgs& args, bool list) {
  if (list) {
    for (const auto& s : kSuites) std::cout << s << '\n';
    return kExitOk;
  }
  const RunConfig c = resolve(args);
  const FilterParams fp{c.alpha};
  echo_config(c);

  std::vector<ScalarField> corpus;
  for (int i = 0; i < kCorpusSize; ++i) {
    corpus.push_back(random_band_limited(c.grid, c.seed, static_cast<std::uint64_t>(i), c.max_mode,
                                         c.spectrum_slope));
  }

  std::vector<EstimateReport> reports;
  std::vector<SuiteResult> suites;

  {
    SuiteBuilder b("estimates", reports);
    for (const auto& f : corpus)
      for (auto& r : check_estimates(f, fp)) b.add(std::move(r));
    suites.push_back(b.finish());
  }
  {
    SuiteBuilder b("convergence_rate", reports);
    const ScalarField bump = gaussian_bump(c.grid, c.grid.length / 4.0);
    const double scale = c.grid.length / (2.0 * 3.141592653589793);
    const std::vector<double> alphas{0.2 * scale, 0.1 * scale, 0.05 * scale};
    const ConvergenceTable table = check_convergence_rate(bump, alphas, Lp::two);
    for (const auto& row : table.rows) {
      b.add(make_report("alpha=" + std::to_string(row.alpha), row.error, row.bound));
    }
    EstimateReport slope{"slope", std::abs(table.slope - 2.0), 0.1, std::abs(table.slope - 2.0) <= 0.1};
    b.add(slope);
    suites.push_back(b.finish());
  }
  {
    SuiteBuilder b("self_adjoint", reports);
    for (std::size_t i = 0; i + 1 < corpus.size(); i += 2) b.add(check_self_adjoint(corpus[i], corpus[i + 1], fp));
    suites.push_back(b.finish());
  }
  {
    SuiteBuilder b("leibniz", reports);
    for (std::size_t i = 0; i + 1 < corpus.size(); i += 2) b.add(check_leibniz(corpus[i], corpus[i + 1], fp));
    suites.push_back(b.finish());
  }
  {
    SuiteBuilder b("elliptic_gain", reports);
    for (const auto& f : corpus)
      for (int s = 0; s <= 2; ++s) b.add(check_elliptic_gain(f, fp, s));
    suites.push_back(b.finish());
  }
  {
    SuiteBuilder b("derivative_commutation", reports);
    for (const auto& f : corpus) b.add(check_derivative_commutation(f, fp));
    suites.push_back(b.finish());
  }

  {
    std::ofstream out(c.out_dir / "estimates.jsonl");
    write_estimate_lines(out, reports);
  }
  {
    std::ofstream out(c.out_dir / "suites.json");
    write_suite_summary(out, suites);
  }

  bool ok = true;
  for (const auto& s : suites) {
    std::cout << (s.ok() ? "PASS " : "FAIL ") << s.name << "  " << s.passed << "/" << s.run
              << "  worst_slack=" << s.worst_slack << "  " << s.wall_seconds << "s\n";
    ok = ok && s.ok();
  }
  return ok ? kExitOk : kExitFailure;
}

// ---- picard ----------------------------------------------------------------

PicardOptions picard_options(const RunConfig& c) {
  PicardOptions o;
  o.n_max = c.n_max;
  o.tol = c.tol;
  o.panels = c.panels;
  return o;
}

int run_sweep(const RunConfig& c) {
  SolverParams p = c.solver_params();
  const std::vector<std::pair<std::string, VectorField>> suite{
      {"taylor-green", taylor_green(c.grid)},
      {"random", random_solenoidal(c.grid, c.seed, c.max_mode, c.spectrum_slope)},
  };
  std::vector<CalibrationPoint> all;
  double boundary = 0.0;
  std::cout << "case,C_pic,tau,max_ratio,energy_ratio,ok\n";
  for (const auto& [name, u0] : suite) {
    const SolverState st = make_initial_state(u0, p);
    const Calibration cal = calibrate_c_pic(st.u, p, picard_options(c), 1e-5, 1e-2, 10);
    for (const auto& h : cal.history) {
      std::cout << name << ',' << h.c_pic << ',' << h.tau << ',' << h.max_ratio << ',' << h.energy_ratio << ','
                << (h.ok ? 1 : 0) << '\n';
    }
    all.insert(all.end(), cal.history.begin(), cal.history.end());
    boundary = std::max(boundary, cal.c_pic);
  }
  const double chosen = boundary * kCPicSafety;
  std::cout << "boundary C_pic = " << boundary << ", calibrated C_pic = " << chosen << '\n';
  write_text(c.out_dir / "cpic_sweep.json", calibration_json(all, chosen));
  return kExitOk;
}

int run_picard(const RunConfig& c) {
  const SolverParams p = c.solver_params();
  const SolverState st = make_initial_state(make_initial_field(c), p);
  ExtensionOptions eo;
  eo.max_segments = c.segments;
  eo.picard = picard_options(c);
  try {
    const ExtensionRun run = global_extension(st.u, p, eo);
    write_text(c.out_dir / "picard.json", picard_report_json(run, p));
    bool ok = run.energy_non_increasing;
    for (const auto& s : run.segments) {
      std::cout << "segment T_n=" << s.t_start << " tau=" << s.tau << " E_alpha_n=" << s.e_alpha_start
                << " iterations=" << s.iterations << " max_ratio=" << s.max_ratio << " " << to_string(s.status)
                << '\n';
      ok = ok && s.status == PicardStatus::converged;
    }
    std::cout << "E_alpha non-increasing: " << (run.energy_non_increasing ? "yes" : "no") << '\n';
    return ok ? kExitOk : kExitFailure;
  } catch (const PicardDivergence& e) {
    std::cerr << e.what() << '\n';
    return kExitFailure;
  }
}

int cmd_picard(const CommonArgs& args, bool sweep) {
  const RunConfig c = resolve(args);
  echo_config(c);
  return sweep ? run_sweep(c) : run_picard(c);
}

// ---- solve -----------------------------------------------------------------

int cmd_solve(const CommonArgs& args) {
  const RunConfig c = resolve(args);
  echo_config(c);
  if (c.mode == IntegratorMode::picard) return run_picard(c);

  const SolverParams p = c.solver_params();
  const VectorField u0 = make_initial_field(c);
  const SolverState st = make_initial_state(u0, p);
  try {
    const Trajectory traj = integrate(st, p, c.sample_every);
    const EnergyLedger ledger = energy_audit(traj);
    write_trajectory(c.out_dir, traj, ledger);
    {
      std::ofstream out(c.out_dir / "ledger.csv");
      write_ledger_csv(out, ledger);
    }
    const EnergyBoundsReport bounds = check_energy_bounds(ledger, u0);
    std::cout << "final residual " << ledger.final_residual() << " (max " << ledger.max_abs_residual()
              << ", E_alpha0 " << ledger.e_alpha0 << ")\n";
    std::cout << "E_alpha monotone: " << (bounds.monotone ? "yes" : "no")
              << ", E_alpha0 <= 5 |u0|^2: " << (bounds.initial_bound ? "yes" : "no") << '\n';
    return bounds.passed() ? kExitOk : kExitFailure;
  } catch (const InstabilityError& e) {
    std::cerr << e.what() << " (last stable t = " << e.last_stable_time() << ")\n";
    return kExitFailure;
  }
}

// ---- kernel-table ----------------------------------------------------------

int cmd_kernel_table(double alpha, const std::vector<double>& radii, const std::string& out) {
  if (!(alpha > 0.0)) throw ConfigError("kernel-table: alpha must be > 0");
  for (double r : radii) {
    if (!(r > 0.0)) throw ConfigError("kernel-table: radii must be > 0");
  }
  const auto rows = kernel_table(alpha, radii);
  if (out.empty()) {
    write_kernel_table(std::cout, alpha, rows);
  } else {
    std::ofstream f(out);
    write_kernel_table(f, alpha, rows);
  }
  return kExitOk;
}

void apply_thread_cap() {
  const char* env = std::getenv("BARDINA_THREADS");
  if (env == nullptr || *env == '\0') return;
  char* end = nullptr;
  const long n = std::strtol(env, &end, 10);
  if (*end != '\0' || n < 1) throw ConfigError("BARDINA_THREADS must be a positive integer");
  kernels::set_thread_cap(static_cast<int>(n));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bardina-alpha LES model: filter verification, solver and Picard construction"};
  app.require_subcommand(1);

  CommonArgs fv_args, solve_args, picard_args;
  bool list = false;
  bool sweep = false;

  auto* fv = app.add_subcommand("filter-verify", "run the filter property suites");
  add_common(fv, fv_args);
  fv->add_flag("--list", list, "print the suite names without running them");

  auto* solve = app.add_subcommand("solve", "integrate the model and audit the energy balance");
  add_common(solve, solve_args);

  auto* picard = app.add_subcommand("picard", "Picard iteration with global extension");
  add_common(picard, picard_args);
  picard->add_flag("--sweep-cpic", sweep, "calibrate C_pic on the standard suite");

  double alpha = 0.1;
  std::vector<double> radii;
  std::string table_out;
  auto* kt = app.add_subcommand("kernel-table", "tabulate H_alpha and its cumulative mass");
  kt->add_option("--alpha", alpha, "filter length")->required();
  kt->add_option("--radii", radii, "radii (> 0)")->required()->delimiter(',');
  kt->add_option("--out", table_out, "CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    apply_thread_cap();
    if (fv->parsed()) return cmd_filter_verify(fv_args, list);
    if (solve->parsed()) return cmd_solve(solve_args);
    if (picard->parsed()) return cmd_picard(picard_args, sweep);
    return cmd_kernel_table(alpha, radii, table_out);
  } catch (const ConfigError& e) {
    std::cerr << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}
