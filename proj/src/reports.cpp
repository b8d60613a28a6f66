#include "bardina/reports.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <json.hpp>
#include <ostream>
#include <stdexcept>

#include "bardina/fft.hpp"
#include "bardina/snapshot.hpp"

namespace bardina {

using json = nlohmann::ordered_json;

namespace {

// Shortest round-trip text for a double.
std::string num(double v) {
  char buf[32];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

}  // namespace

void write_estimate_lines(std::ostream& out, std::span<const EstimateReport> reports) {
  out << json{{"schema", kEstimateSchema}}.dump() << '\n';
  for (const auto& r : reports) {
    out << json{{"name", r.name}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"passed", r.passed}}.dump() << '\n';
  }
}

void write_suite_summary(std::ostream& out, std::span<const SuiteResult> suites) {
  json doc{{"schema", kSuiteSchema}, {"suites", json::array()}};
  for (const auto& s : suites) {
    doc["suites"].push_back({{"name", s.name},
                             {"run", s.run},
                             {"passed", s.passed},
                             {"worst_slack", s.worst_slack}});
  }
  out << doc.dump(2) << '\n';
}

void write_ledger_csv(std::ostream& out, const EnergyLedger& ledger) {
  out << "# schema: " << kLedgerSchema << '\n';
  out << "t,E_alpha,diss_lap,diss_grad,residual\n";
  for (const auto& s : ledger.samples) {
    out << num(s.t) << ',' << num(s.e_alpha) << ',' << num(s.diss_lap) << ',' << num(s.diss_grad) << ','
        << num(s.residual) << '\n';
  }
}

void write_trajectory(const std::filesystem::path& dir, const Trajectory& traj, const EnergyLedger& ledger) {
  if (ledger.samples.size() != traj.samples.size()) {
    throw std::invalid_argument("write_trajectory: ledger does not match trajectory");
  }
  std::filesystem::create_directories(dir);
  json index{{"schema", kTrajectorySchema},
             {"nu", traj.nu},
             {"alpha", traj.alpha},
             {"E_alpha0", traj.e_alpha0},
             {"samples", json::array()}};
  int k = 0;
  for (std::size_t i = 0; i < traj.samples.size(); ++i) {
    const auto& s = traj.samples[i];
    if (!s.u) continue;
    char name[32];
    std::snprintf(name, sizeof name, "u_%05d.bin", k++);
    write_snapshot(dir / name, transform_inverse(*s.u));
    index["samples"].push_back(
        {{"t", s.t}, {"E_alpha", ledger.samples[i].e_alpha}, {"residual", ledger.samples[i].residual}, {"file", name}});
  }
  std::ofstream out(dir / "trajectory.json");
  out << index.dump(2) << '\n';
  if (!out) throw std::runtime_error("write_trajectory: cannot write index in " + dir.string());
}

std::string picard_report_json(const ExtensionRun& extension, const SolverParams& params) {
  auto finite_or_null = [](double v) { return std::isfinite(v) ? json(v) : json(nullptr); };
  const double e0 = extension.segments.empty() ? 0.0 : extension.segments.front().e_alpha_start;
  const double alpha = params.filter.alpha;
  json doc{{"schema", kPicardSchema},
           {"C_pic", params.c_pic},
           {"E_alpha0", e0},
           {"tau_max", e0 > 0.0 ? json(tau_max(e0, params.nu, alpha, params.c_pic)) : json(nullptr)},
           {"tau_lip", e0 > 0.0 ? json(tau_lip(e0, params.nu, alpha, params.c_pic)) : json(nullptr)}};
  json segs = json::array();
  for (const auto& s : extension.segments) {
    segs.push_back({{"T_n", s.t_start},
                    {"tau", s.tau},
                    {"E_alpha_n", s.e_alpha_start},
                    {"iterations", s.iterations},
                    {"ratios", s.ratios},
                    {"max_ratio", s.max_ratio},
                    {"max_energy_ratio", finite_or_null(s.max_energy_ratio)},
                    {"status", to_string(s.status)}});
  }
  doc["segments"] = segs;
  const auto t = extension.breakpoints();
  doc["T_final"] = t.empty() ? 0.0 : t.back();
  doc["E_alpha_final"] = extension.e_alpha_final;
  doc["energy_non_increasing"] = extension.energy_non_increasing;
  doc["tau_non_decreasing"] = extension.tau_non_decreasing;
  return doc.dump(2) + "\n";
}

std::string calibration_json(std::span<const CalibrationPoint> points, double chosen) {
  json doc{{"schema", kCalibrationSchema}, {"C_pic", chosen}, {"points", json::array()}};
  for (const auto& p : points) {
    doc["points"].push_back({{"C_pic", p.c_pic},
                             {"tau", p.tau},
                             {"max_ratio", p.max_ratio},
                             {"energy_ratio", p.energy_ratio},
                             {"ok", p.ok}});
  }
  return doc.dump(2) + "\n";
}

void write_kernel_table(std::ostream& out, double alpha, std::span<const KernelTableRow> rows) {
  out << "# schema: " << kKernelTableSchema << " alpha=" << num(alpha) << '\n';
  out << "r,H,mass\n";
  for (const auto& r : rows) out << num(r.r) << ',' << num(r.value) << ',' << num(r.mass) << '\n';
}

}  // namespace bardina
