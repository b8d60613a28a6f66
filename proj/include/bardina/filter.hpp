#pragma once

#include <array>
#include <span>
#include <vector>

#include "bardina/fields.hpp"

namespace bardina {

/// Relative slack allowed on whole-space inequalities evaluated in the periodic box.
inline constexpr double kWrapSlack = 1e-6;

/// Helmholtz filter length.
struct FilterParams {
  double alpha = 0.25;

  /// 0 < alpha <= 1.
  void validate() const;
  /// Also requires alpha <= L / 20 so periodic images of the kernel stay negligible.
  void validate_for(const GridSpec& g) const;
};

/// Fourier symbol of the filter, 1 / (1 + alpha^2 |k|^2).
inline double filter_symbol(double k2, double alpha) { return 1.0 / (1.0 + alpha * alpha * k2); }

/// H_alpha(x) = exp(-|x| / alpha) / (4 pi alpha^2 |x|). Throws std::domain_error at x = 0.
double kernel_eval(const std::array<double, 3>& x, double alpha);
double kernel_radial(double r, double alpha);

/// Mass of H_alpha inside the ball of radius r, by adaptive Gauss-Kronrod
/// quadrature of 4 pi s^2 H_alpha(s) on (0, r].
double kernel_mass(double r, double alpha);

struct KernelTableRow {
  double r;
  double value;
  double mass;
};

/// One row per radius; radii must be positive.
std::vector<KernelTableRow> kernel_table(double alpha, std::span<const double> radii);

/// Per-mode multiplication by the filter symbol.
SpectralField filter_spectral(const SpectralField& F, const FilterParams& p);
SpectralVector filter_spectral(const SpectralVector& V, const FilterParams& p);
ScalarField filter_spectral(const ScalarField& f, const FilterParams& p);
VectorField filter_spectral(const VectorField& v, const FilterParams& p);
TensorField filter_spectral(const TensorField& t, const FilterParams& p);

/// Cell-integrated, periodized kernel: entry (dx, dy, dz) holds the mass of
/// H_alpha over the grid cell displaced by (dx, dy, dz) from the source node,
/// summed over the nearest periodic images. The singular source cell is
/// integrated ray by ray through its faces.
ScalarField convolution_weights(const GridSpec& g, const FilterParams& p);

/// Direct-space periodic convolution with convolution_weights. Requires
/// alpha <= L / 20.
ScalarField filter_convolution(const ScalarField& f, const FilterParams& p);

}  // namespace bardina
