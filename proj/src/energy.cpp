#include "bardina/energy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bardina/norms.hpp"

namespace bardina {

double EnergyLedger::max_abs_residual() const {
  double m = 0.0;
  for (const auto& s : samples) m = std::max(m, std::abs(s.residual));
  return m;
}

double EnergyLedger::final_residual() const { return samples.empty() ? 0.0 : samples.back().residual; }

namespace {

// Cumulative integral of uniformly sampled f.
std::vector<double> cumulative_simpson(const std::vector<double>& f, double h) {
  const std::size_t n = f.size();
  std::vector<double> c(n, 0.0);
  if (n < 2) return c;
  if (n == 2) {
    c[1] = 0.5 * h * (f[0] + f[1]);
    return c;
  }
  for (std::size_t i = 2; i < n; i += 2) c[i] = c[i - 2] + h / 3.0 * (f[i - 2] + 4.0 * f[i - 1] + f[i]);
  for (std::size_t i = 1; i < n; i += 2) {
    if (i + 1 < n) {
      c[i] = c[i - 1] + h / 12.0 * (5.0 * f[i - 1] + 8.0 * f[i] - f[i + 1]);
    } else {
      c[i] = c[i - 1] + h / 12.0 * (-f[i - 2] + 8.0 * f[i - 1] + 5.0 * f[i]);
    }
  }
  return c;
}

}  // namespace

EnergyLedger energy_audit(const Trajectory& traj) {
  EnergyLedger ledger;
  ledger.e_alpha0 = traj.e_alpha0;
  const auto& s = traj.samples;
  if (s.empty()) return ledger;
  const double h = s.size() > 1 ? s[1].t - s[0].t : 0.0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (std::abs((s[i].t - s[i - 1].t) - h) > 1e-9 * std::max(1.0, std::abs(h))) {
      throw std::invalid_argument("energy_audit: samples must be uniformly spaced in time");
    }
  }
  const double a2 = traj.alpha * traj.alpha;
  std::vector<double> lap(s.size()), grad(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    lap[i] = a2 * traj.nu * s[i].diag.lap2;
    grad[i] = traj.nu * s[i].diag.j2;
  }
  const auto cl = cumulative_simpson(lap, h);
  const auto cg = cumulative_simpson(grad, h);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double e = s[i].diag.e_alpha(traj.alpha);
    ledger.samples.push_back({s[i].t, e, cl[i], cg[i], 0.5 * e + cl[i] + cg[i] - 0.5 * traj.e_alpha0});
  }
  return ledger;
}

EnergyBoundsReport check_energy_bounds(const EnergyLedger& ledger, const VectorField& u0, double tol_rel) {
  EnergyBoundsReport r;
  r.e_alpha0 = ledger.e_alpha0;
  const double u0n = norm_lp(u0, Lp::two);
  r.u0_l2_squared = u0n * u0n;
  for (std::size_t i = 1; i < ledger.samples.size(); ++i) {
    const double inc = ledger.samples[i].e_alpha - ledger.samples[i - 1].e_alpha;
    r.max_increase = std::max(r.max_increase, inc);
    if (inc > tol_rel * ledger.e_alpha0) r.monotone = false;
  }
  r.initial_bound = r.e_alpha0 <= 5.0 * r.u0_l2_squared * (1.0 + kWrapSlack);
  return r;
}

}  // namespace bardina
