#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "bardina/energy.hpp"
#include "bardina/estimates.hpp"
#include "bardina/filter.hpp"
#include "bardina/picard.hpp"
#include "bardina/solver.hpp"

namespace bardina {

inline constexpr const char* kEstimateSchema = "bardina.estimates/1";
inline constexpr const char* kLedgerSchema = "bardina.energy_ledger/1";
inline constexpr const char* kTrajectorySchema = "bardina.trajectory/1";
inline constexpr const char* kPicardSchema = "bardina.picard/1";
inline constexpr const char* kCalibrationSchema = "bardina.cpic_sweep/1";
inline constexpr const char* kKernelTableSchema = "bardina.kernel_table/1";
inline constexpr const char* kSuiteSchema = "bardina.suites/1";

struct SuiteResult {
  std::string name;
  int run = 0;
  int passed = 0;
  /// Smallest relative slack (rhs - lhs) / rhs seen over the cases.
  double worst_slack = 0.0;
  /// Reported on the console only, so files stay reproducible.
  double wall_seconds = 0.0;
  bool ok() const { return run > 0 && passed == run; }
};

/// JSON lines: a schema header, then {"name","lhs","rhs","passed"} per report.
void write_estimate_lines(std::ostream& out, std::span<const EstimateReport> reports);
void write_suite_summary(std::ostream& out, std::span<const SuiteResult> suites);

/// CSV "# schema" line, then t,E_alpha,diss_lap,diss_grad,residual.
void write_ledger_csv(std::ostream& out, const EnergyLedger& ledger);

/// Writes one snapshot per stored field (physical velocity) as
/// `u_<k>.bin` under `dir` and the index `trajectory.json`.
void write_trajectory(const std::filesystem::path& dir, const Trajectory& traj, const EnergyLedger& ledger);

/// {tau_max, tau_lip} at E_alpha0 plus per-segment T_n, E_alpha_n and ratios.
std::string picard_report_json(const ExtensionRun& extension, const SolverParams& params);
std::string calibration_json(std::span<const CalibrationPoint> points, double chosen);

/// CSV "# schema" line, then r,H,mass.
void write_kernel_table(std::ostream& out, double alpha, std::span<const KernelTableRow> rows);

}  // namespace bardina
