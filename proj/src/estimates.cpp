#include "bardina/estimates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "bardina/fft.hpp"
#include "bardina/operators.hpp"
#include "bardina/random_fields.hpp"

namespace bardina {

EstimateReport make_report(std::string name, double lhs, double rhs) {
  return {std::move(name), lhs, rhs, lhs <= rhs * (1.0 + kWrapSlack)};
}

std::vector<EstimateReport> check_estimates(const ScalarField& f, const FilterParams& p) {
  p.validate_for(f.grid);
  const ScalarField fbar = filter_spectral(f, p);
  const double a = p.alpha;
  const double young = 1.0 / (std::sqrt(8.0 * std::numbers::pi) * std::pow(a, 1.5));
  const double f1 = norm_lp(f, Lp::one), f2 = norm_lp(f, Lp::two), finf = norm_lp(f, Lp::inf);
  const double b1 = norm_lp(fbar, Lp::one), b2 = norm_lp(fbar, Lp::two), binf = norm_lp(fbar, Lp::inf);
  return {
      make_report("contraction_L1", b1, f1),
      make_report("contraction_L2", b2, f2),
      make_report("contraction_Linf", binf, finf),
      make_report("gradient_L2", norm_lp(gradient(fbar), Lp::two), 2.0 / a * f2),
      make_report("sup_from_L2", binf, young * f2),
      make_report("L2_from_L1", b2, young * f1),
  };
}

bool ConvergenceTable::all_rows_passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const ConvergenceRow& r) { return r.passed; });
}

ConvergenceTable check_convergence_rate(const ScalarField& f, std::span<const double> alphas, Lp p) {
  if (alphas.empty()) throw std::invalid_argument("check_convergence_rate: empty alpha list");
  const SpectralField F = transform_forward(f);
  const double lap = norm_lp(transform_inverse(spectral::laplacian(F)), p);
  ConvergenceTable table;
  for (double a : alphas) {
    FilterParams fp{a};
    fp.validate_for(f.grid);
    const double err = norm_lp(transform_inverse(filter_spectral(F, fp)) - f, p);
    const double bound = a * a * lap;
    table.rows.push_back({a, err, bound, err <= bound * (1.0 + kWrapSlack)});
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  bool degenerate = table.rows.size() < 2;
  for (const auto& r : table.rows) {
    if (!(r.error > 0.0)) degenerate = true;
    const double x = std::log(r.alpha), y = std::log(r.error);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  const double m = static_cast<double>(table.rows.size());
  const double denom = m * sxx - sx * sx;
  table.slope = (degenerate || denom == 0.0) ? std::numeric_limits<double>::quiet_NaN() : (m * sxy - sx * sy) / denom;
  return table;
}

EstimateReport check_self_adjoint(const ScalarField& f, const ScalarField& g, const FilterParams& p) {
  require_same_grid(f.grid, g.grid, "check_self_adjoint");
  const double lhs = std::abs(inner(filter_spectral(f, p), g) - inner(f, filter_spectral(g, p)));
  return make_report("self_adjoint", lhs, 1e-12 * norm_lp(f, Lp::two) * norm_lp(g, Lp::two));
}

namespace {

SpectralField dealiased_product(const SpectralField& A, const SpectralField& B) {
  return spectral::dealias(transform_forward(multiply(transform_inverse(A), transform_inverse(B))));
}

}  // namespace

EstimateReport check_leibniz(const ScalarField& f, const ScalarField& g, const FilterParams& p) {
  require_same_grid(f.grid, g.grid, "check_leibniz");
  const SpectralField F = transform_forward(f), G = transform_forward(g);
  const int n = f.grid.n;
  if (3 * spectral::band_limit(F) >= n || 3 * spectral::band_limit(G) >= n) {
    throw std::domain_error("check_leibniz: aliasing risk, inputs must be band-limited to 3|m| < N");
  }
  const SpectralField barfg = filter_spectral(dealiased_product(F, G), p);
  double worst = 0.0;
  for (int axis = 0; axis < 3; ++axis) {
    const SpectralField dF = spectral::derivative(F, axis), dG = spectral::derivative(G, axis);
    SpectralField residual = spectral::derivative(barfg, axis);
    residual -= filter_spectral(dealiased_product(G, dF), p);
    residual -= filter_spectral(dealiased_product(F, dG), p);
    worst = std::max(worst, std::sqrt(l2_squared(residual)));
  }
  return make_report("leibniz", worst, 1e-10 * norm_wmp(F, 1, Lp::two) * norm_wmp(G, 1, Lp::two));
}

double elliptic_gain_ratio(const ScalarField& f, const FilterParams& p, int s) {
  if (s < 0 || s > 2) throw std::invalid_argument("elliptic gain: s must be 0, 1 or 2");
  const SpectralField F = transform_forward(f);
  const double base = norm_wmp(F, s, Lp::two);
  if (base == 0.0) return 0.0;
  return norm_wmp(filter_spectral(F, p), s + 2, Lp::two) / (base / p.alpha);
}

EstimateReport check_elliptic_gain(const ScalarField& f, const FilterParams& p, int s, double c_ell) {
  return make_report("elliptic_gain_s" + std::to_string(s), elliptic_gain_ratio(f, p, s), c_ell);
}

double elliptic_gain_sweep(const GridSpec& g, const FilterParams& p, int cases, std::uint64_t seed, int max_mode) {
  double worst = 0.0;
  for (int c = 0; c < cases; ++c) {
    const ScalarField f = random_band_limited(g, seed, static_cast<std::uint64_t>(c), max_mode);
    for (int s = 0; s <= 2; ++s) worst = std::max(worst, elliptic_gain_ratio(f, p, s));
  }
  return worst;
}

EstimateReport check_derivative_commutation(const ScalarField& f, const FilterParams& p) {
  const SpectralField F = transform_forward(f);
  const SpectralVector a = spectral::gradient(filter_spectral(F, p));
  const SpectralVector b = filter_spectral(spectral::gradient(F), p);
  return make_report("derivative_commutation", std::sqrt(l2_squared(a - b)), 1e-12 * norm_wmp(F, 1, Lp::two));
}

EstimateReport check_double_filter(const ScalarField& f, const FilterParams& p) {
  const SpectralField once = filter_spectral(transform_forward(f), p);
  const SpectralField twice = filter_spectral(once, p);
  const double lhs = std::sqrt(l2_squared(twice - once));
  const double rhs = p.alpha * p.alpha * std::sqrt(l2_squared(spectral::laplacian(once)));
  return make_report("double_filter", lhs, rhs);
}

double filter_discrepancy(const ScalarField& f, const FilterParams& p) {
  const double base = norm_lp(f, Lp::two);
  if (base == 0.0) return 0.0;
  return norm_lp(filter_convolution(f, p) - filter_spectral(f, p), Lp::two) / base;
}

}  // namespace bardina
