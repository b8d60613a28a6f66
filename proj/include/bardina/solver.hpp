#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "bardina/fields.hpp"
#include "bardina/filter.hpp"

namespace bardina {

/// Relative divergence tolerance for fields tagged solenoidal.
inline constexpr double kDivergenceTol = 1e-10;

/// Picard constant from `bardina picard --sweep-cpic`: the contraction boundary
/// over the standard suite (about 1.23e-4 at N = 32, nu = 0.05, alpha = 0.25)
/// times kCPicSafety, rounded up.
inline constexpr double kCPicSafety = 2.0;
inline constexpr double kCalibratedCPic = 2.5e-4;

struct SolverParams {
  double nu = 0.05;
  FilterParams filter{0.25};
  double dt = 1e-3;
  double t_end = 1.0;
  bool dealias = true;
  /// false freezes B(u, u) to zero; used to check the linear semigroup in isolation.
  bool nonlinear = true;
  double c_pic = kCalibratedCPic;

  void validate() const;
};

/// W = ||u||^2, J^2 = ||grad u||^2, ||Laplacian u||^2.
struct Diagnostics {
  double w = 0.0;
  double j2 = 0.0;
  double lap2 = 0.0;

  double e_alpha(double alpha) const { return alpha * alpha * j2 + w; }
};

Diagnostics diagnostics(const SpectralVector& u);
double energy_alpha(const SpectralVector& u, double alpha);

/// ||div u||_2 <= rel_tol * ||grad u||_2 (spectral).
bool is_solenoidal(const SpectralVector& u, double rel_tol = kDivergenceTol);

struct SolverState {
  SpectralVector u;  // filtered velocity
  double t = 0.0;
  Diagnostics diag;
  double e_alpha = 0.0;
  double e_alpha0 = 0.0;  // energy at the start of the run, for the blow-up guard

  VectorField velocity() const;
};

/// Filters u0 (which must be solenoidal) into the initial state.
SolverState make_initial_state(const VectorField& u0, const SolverParams& params);
SolverState make_state(SpectralVector u, double t, double alpha, double e_alpha0);

/// Raised when E_alpha exceeds 10 E_alpha0 during stepping.
class InstabilityError : public std::runtime_error {
 public:
  InstabilityError(const std::string& what, double last_stable_time)
      : std::runtime_error(what), last_stable_time_(last_stable_time) {}
  double last_stable_time() const { return last_stable_time_; }

 private:
  double last_stable_time_;
};

/// B(u, u) = bar(div(u (x) u)). With dealias on, u is truncated by the 2/3 rule
/// before the product and the product is truncated again. Throws
/// std::invalid_argument for non-solenoidal input.
SpectralVector nonlinear_term(const SpectralVector& u, double alpha, bool dealias = true);
VectorField nonlinear_term(const VectorField& u, double alpha, bool dealias = true);

/// Zero-mean solution of Laplacian p = -div div bar(u (x) u).
SpectralField pressure_solve(const SpectralVector& u, double alpha, bool dealias = true);
ScalarField pressure_solve(const VectorField& u, double alpha, bool dealias = true);

/// -P B(u, u), or zero when params.nonlinear is false.
SpectralVector projected_tendency(const SpectralVector& u, const SolverParams& params);

/// e^{nu t Laplacian} applied per mode.
SpectralVector heat_semigroup(const SpectralVector& u, double nu, double t);

/// One integrating-factor RK4 step of size params.dt: the viscous part is
/// integrated exactly per mode, -P B by classical RK4.
SolverState step_integrating_factor(const SolverState& state, const SolverParams& params);

struct TrajectorySample {
  double t = 0.0;
  Diagnostics diag;
  std::optional<SpectralVector> u;
};

struct Trajectory {
  double nu = 0.0;
  double alpha = 0.0;
  double e_alpha0 = 0.0;
  std::vector<TrajectorySample> samples;
};

/// Steps from `initial` to params.t_end with round(t_end / dt) equal steps,
/// recording diagnostics at every step and the field every `keep_every`
/// steps (0 keeps only the endpoints).
Trajectory integrate(const SolverState& initial, const SolverParams& params, int keep_every = 0);

}  // namespace bardina
