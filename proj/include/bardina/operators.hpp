#pragma once

#include <functional>

#include "bardina/fields.hpp"

namespace bardina {

/// Per-mode derivative wavenumbers (Nyquist zeroed) for one coefficient.
struct Wavevector {
  double kx, ky, kz;
  double norm2() const { return kx * kx + ky * ky + kz * kz; }
  double operator[](int axis) const { return axis == 0 ? kx : (axis == 1 ? ky : kz); }
};

/// Calls f(index, Wavevector) for every half-layout coefficient, plane-parallel.
void for_each_mode(const GridSpec& g, const std::function<void(std::size_t, const Wavevector&)>& f);

/// Multiplies each coefficient by symbol(|k|^2).
SpectralField apply_radial_symbol(SpectralField F, const std::function<double(double)>& symbol);
SpectralVector apply_radial_symbol(SpectralVector V, const std::function<double(double)>& symbol);

namespace spectral {

SpectralField derivative(const SpectralField& F, int axis);
/// D^a for the multi-index a = (a0, a1, a2).
SpectralField multi_derivative(const SpectralField& F, int a0, int a1, int a2);
SpectralVector gradient(const SpectralField& F);
SpectralField divergence(const SpectralVector& V);
SpectralField laplacian(const SpectralField& F);
SpectralVector laplacian(const SpectralVector& V);
/// Solenoidal projection V - k (k.V)/|k|^2. Modes with |k| = 0 pass through.
SpectralVector leray_project(const SpectralVector& V);
/// Zeroes every coefficient outside the 2/3-rule window.
SpectralField dealias(SpectralField F);
SpectralVector dealias(SpectralVector V);
/// Largest |m| along any axis with a non-negligible coefficient.
int band_limit(const SpectralField& F, double rel_tol = 1e-13);

}  // namespace spectral

ScalarField derivative(const ScalarField& f, int axis);
VectorField gradient(const ScalarField& f);
ScalarField divergence(const VectorField& v);
ScalarField laplacian(const ScalarField& f);
VectorField laplacian(const VectorField& v);
VectorField leray_project(const VectorField& v);

/// max_x |div v(x)|
double max_divergence(const VectorField& v);

}  // namespace bardina
