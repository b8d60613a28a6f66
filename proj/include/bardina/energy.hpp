#pragma once

#include <vector>

#include "bardina/fields.hpp"
#include "bardina/solver.hpp"

namespace bardina {

struct EnergySample {
  double t;
  double e_alpha;
  double diss_lap;   // alpha^2 nu int_0^t ||Laplacian u||^2
  double diss_grad;  // nu int_0^t J^2
  double residual;   // E/2 + diss_lap + diss_grad - E0/2
};

struct EnergyLedger {
  double e_alpha0 = 0.0;
  std::vector<EnergySample> samples;

  double max_abs_residual() const;
  double final_residual() const;
};

/// Energy balance of a trajectory. The time integrals use composite Simpson on
/// sample pairs (fourth order, matching the RK4 stepper); odd samples close
/// with the three-point quadratic rule. Samples must be uniformly spaced.
EnergyLedger energy_audit(const Trajectory& traj);

struct EnergyBoundsReport {
  bool monotone = true;
  double max_increase = 0.0;  // largest E(t_{k+1}) - E(t_k)
  double e_alpha0 = 0.0;
  double u0_l2_squared = 0.0;
  bool initial_bound = true;  // E_alpha0 <= 5 ||u0||^2

  bool passed() const { return monotone && initial_bound; }
};

/// Per-step increases up to tol_rel * E_alpha0 count as non-increasing.
EnergyBoundsReport check_energy_bounds(const EnergyLedger& ledger, const VectorField& u0, double tol_rel = 1e-10);

}  // namespace bardina
