#pragma once

#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "bardina/fields.hpp"
#include "bardina/solver.hpp"

namespace bardina {

/// tau_max(sigma) = nu alpha^6 / (4 C^2 sigma). Throws on non-positive input.
double tau_max(double sigma, double nu, double alpha, double c_pic);
/// tau_Lip(E0) = min(nu alpha^4 / (16 C^2 E0), tau_max(E0)).
double tau_lip(double e0, double nu, double alpha, double c_pic);

struct PicardOptions {
  double tau = 0.0;
  int n_max = 40;
  /// Stop once d_n <= tol * d_0.
  double tol = 1e-10;
  /// Uniform time panels on [0, tau]; each carries a 3-point Gauss-Legendre rule.
  int panels = 16;
  bool keep_iterates = false;
};

enum class PicardStatus { converged, max_iterations, diverged };
const char* to_string(PicardStatus s);

struct PicardRun {
  std::vector<double> times;                  // mesh nodes t_j = j tau / panels
  std::vector<SpectralVector> solution;       // last iterate at the mesh nodes
  std::vector<std::vector<SpectralVector>> iterates;  // u^(0..n) when kept
  std::vector<double> differences;            // d_n = max_j ||u^(n+1)(t_j) - u^(n)(t_j)||_{2,2}
  std::vector<double> ratios;                 // d_{n+1} / d_n
  std::vector<double> max_energies;           // max_j E_alpha^(n)(t_j), n = 0, 1, ...
  double e_alpha0 = 0.0;
  double tau = 0.0;
  double tau_max = std::numeric_limits<double>::infinity();
  double tau_lip = std::numeric_limits<double>::infinity();
  bool tau_exceeds_lip = false;
  int iterations = 0;
  PicardStatus status = PicardStatus::max_iterations;

  double max_ratio() const;
  double max_energy() const;
};

/// Picard iteration of the mild (Duhamel) form on [0, tau]:
///   u^(0)(t) = u_init,
///   u^(n)(t) = e^{nu t Laplacian} u_init - int_0^t e^{nu (t - s) Laplacian} P B(u^(n-1)(s)) ds.
/// The integrand is evaluated at Gauss nodes by cubic interpolation of the
/// previous iterate's mesh values. u_init must already be filtered.
PicardRun picard_iterate(const SpectralVector& u_init, const SolverParams& params, const PicardOptions& opts);

class PicardDivergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExtensionOptions {
  double t_total = std::numeric_limits<double>::infinity();
  int max_segments = 3;
  PicardOptions picard;  // tau is set per segment
};

struct ExtensionSegment {
  double t_start = 0.0;
  double tau = 0.0;
  double e_alpha_start = 0.0;
  int iterations = 0;
  std::vector<double> ratios;
  double max_ratio = 0.0;
  double max_energy_ratio = 1.0;  // max_n,t E^(n)(t) / E_alpha,n
  PicardStatus status = PicardStatus::converged;
};

struct ExtensionRun {
  std::vector<ExtensionSegment> segments;
  std::vector<double> times;
  std::vector<SpectralVector> states;
  double e_alpha_final = 0.0;
  bool energy_non_increasing = true;  // E_{alpha,n+1} <= E_{alpha,n}
  bool tau_non_decreasing = true;     // over full-length segments

  /// Segment start times T_0 = 0, T_1, ... and the final time.
  std::vector<double> breakpoints() const;
};

/// Restarts Picard on successive segments [T_n, T_n + tau_Lip(E_{alpha,n})].
/// Throws PicardDivergence when a segment diverges.
ExtensionRun global_extension(const SpectralVector& u_init, const SolverParams& params, const ExtensionOptions& opts);

struct CalibrationPoint {
  double c_pic;
  double tau;
  double max_ratio;
  double energy_ratio;  // max_n,t E^(n)(t) / E_alpha0
  bool ok;              // converged, ratios <= 1/2 and energies <= 8 E_alpha0
};

/// Picard at tau = tau_Lip(E_alpha0; C) for each C.
std::vector<CalibrationPoint> sweep_c_pic(const SpectralVector& u_init, const SolverParams& params,
                                          const PicardOptions& opts, std::span<const double> values);

struct Calibration {
  double c_pic;
  std::vector<CalibrationPoint> history;
};

/// Log-scale bisection for the smallest C in [lo, hi] whose run is ok; returns
/// the upper bracket, which is always an ok point. Throws if hi is not ok.
Calibration calibrate_c_pic(const SpectralVector& u_init, const SolverParams& params, const PicardOptions& opts,
                            double lo, double hi, int bisections);

}  // namespace bardina
