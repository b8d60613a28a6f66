#pragma once

#include <span>
#include <string>
#include <vector>

#include "bardina/fields.hpp"
#include "bardina/filter.hpp"
#include "bardina/norms.hpp"

namespace bardina {

/// One evaluated inequality lhs <= rhs.
struct EstimateReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool passed = false;

  double slack() const { return rhs - lhs; }
};

/// passed <=> lhs <= rhs * (1 + kWrapSlack)
EstimateReport make_report(std::string name, double lhs, double rhs);

/// Default constant for the elliptic-gain inequality, frozen by the calibration
/// sweep in elliptic_gain_sweep().
inline constexpr double kEllipticConstant = 4.0;

/// The filter inequalities with their whole-space constants:
///   ||fbar||_p <= ||f||_p (p = 1, 2, inf), ||grad fbar||_2 <= (2/alpha) ||f||_2,
///   ||fbar||_inf <= (8 pi)^{-1/2} alpha^{-3/2} ||f||_2,
///   ||fbar||_2 <= (8 pi)^{-1/2} alpha^{-3/2} ||f||_1.
std::vector<EstimateReport> check_estimates(const ScalarField& f, const FilterParams& p);

struct ConvergenceRow {
  double alpha;
  double error;  // ||fbar - f||_p
  double bound;  // alpha^2 ||Laplacian f||_p
  bool passed;
};

struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;
  /// Least-squares slope of log(error) against log(alpha); NaN when any error is 0.
  double slope;
  bool all_rows_passed() const;
};

ConvergenceTable check_convergence_rate(const ScalarField& f, std::span<const double> alphas, Lp p = Lp::two);

/// |(fbar, g) - (f, gbar)| <= 1e-12 ||f|| ||g||
EstimateReport check_self_adjoint(const ScalarField& f, const ScalarField& g, const FilterParams& p);

/// max_i || D_i bar(fg) - bar(g D_i f) - bar(f D_i g) ||_2 <= 1e-10 ||f||_{1,2} ||g||_{1,2}.
/// Products use the 2/3-rule truncation; throws std::domain_error when f or g
/// is not band-limited to 3|m| < N.
EstimateReport check_leibniz(const ScalarField& f, const ScalarField& g, const FilterParams& p);

/// ||fbar||_{s+2,2} / (alpha^{-1} ||f||_{s,2}) for s in {0, 1, 2}.
double elliptic_gain_ratio(const ScalarField& f, const FilterParams& p, int s);
EstimateReport check_elliptic_gain(const ScalarField& f, const FilterParams& p, int s,
                                   double c_ell = kEllipticConstant);

/// Largest elliptic_gain_ratio over `cases` seeded random band-limited fields
/// and s in {0, 1, 2}; the sweep used to fix kEllipticConstant.
double elliptic_gain_sweep(const GridSpec& g, const FilterParams& p, int cases, std::uint64_t seed, int max_mode);

/// ||grad fbar - bar(grad f)||_2 <= 1e-12 ||f||_{1,2}
EstimateReport check_derivative_commutation(const ScalarField& f, const FilterParams& p);

/// Filtering twice: ||fbarbar - fbar||_2 <= alpha^2 ||Laplacian fbar||_2.
EstimateReport check_double_filter(const ScalarField& f, const FilterParams& p);

/// ||filter_convolution(f) - filter_spectral(f)||_2 / ||f||_2
double filter_discrepancy(const ScalarField& f, const FilterParams& p);

}  // namespace bardina
