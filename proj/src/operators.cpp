#include "bardina/operators.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "bardina/fft.hpp"
#include "bardina/kernels.hpp"
#include "bardina/norms.hpp"

namespace bardina {

void for_each_mode(const GridSpec& g, const std::function<void(std::size_t, const Wavevector&)>& f) {
  const int n = g.n;
  const int half = g.half();
  std::vector<double> k(n);
  for (int i = 0; i < n; ++i) k[i] = g.derivative_wavenumber(i);
  kernels::parallel::for_each_plane(n, [&](int kz) {
    for (int ky = 0; ky < n; ++ky)
      for (int kx = 0; kx < half; ++kx) f(g.mode_index(kx, ky, kz), Wavevector{k[kx], k[ky], k[kz]});
  });
}

SpectralField apply_radial_symbol(SpectralField F, const std::function<double(double)>& symbol) {
  std::vector<double> s(F.grid.modes());
  for_each_mode(F.grid, [&](std::size_t i, const Wavevector& k) { s[i] = symbol(k.norm2()); });
  kernels::parallel::scale_modes(F.coeffs, s);
  return F;
}

SpectralVector apply_radial_symbol(SpectralVector V, const std::function<double(double)>& symbol) {
  std::vector<double> s(V[0].grid.modes());
  for_each_mode(V[0].grid, [&](std::size_t i, const Wavevector& k) { s[i] = symbol(k.norm2()); });
  for (auto& c : V) kernels::parallel::scale_modes(c.coeffs, s);
  return V;
}

namespace spectral {

SpectralField derivative(const SpectralField& F, int axis) {
  SpectralField out(F.grid);
  for_each_mode(F.grid, [&](std::size_t i, const Wavevector& k) {
    out.coeffs[i] = Complex(0.0, k[axis]) * F.coeffs[i];
  });
  return out;
}

SpectralField multi_derivative(const SpectralField& F, int a0, int a1, int a2) {
  SpectralField out(F.grid);
  const int order = a0 + a1 + a2;
  // i^order
  static const Complex ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const Complex phase = ipow[order % 4];
  for_each_mode(F.grid, [&](std::size_t i, const Wavevector& k) {
    const double mag = std::pow(k.kx, a0) * std::pow(k.ky, a1) * std::pow(k.kz, a2);
    out.coeffs[i] = phase * mag * F.coeffs[i];
  });
  return out;
}

SpectralVector gradient(const SpectralField& F) {
  return {derivative(F, 0), derivative(F, 1), derivative(F, 2)};
}

SpectralField divergence(const SpectralVector& V) {
  SpectralField out(V[0].grid);
  for_each_mode(out.grid, [&](std::size_t i, const Wavevector& k) {
    out.coeffs[i] = Complex(0.0, 1.0) * (k.kx * V[0].coeffs[i] + k.ky * V[1].coeffs[i] + k.kz * V[2].coeffs[i]);
  });
  return out;
}

SpectralField laplacian(const SpectralField& F) {
  return apply_radial_symbol(F, [](double k2) { return -k2; });
}

SpectralVector laplacian(const SpectralVector& V) {
  return apply_radial_symbol(V, [](double k2) { return -k2; });
}

SpectralVector leray_project(const SpectralVector& V) {
  SpectralVector out = V;
  for_each_mode(V[0].grid, [&](std::size_t i, const Wavevector& k) {
    const double k2 = k.norm2();
    if (k2 == 0.0) return;
    const Complex kv = k.kx * V[0].coeffs[i] + k.ky * V[1].coeffs[i] + k.kz * V[2].coeffs[i];
    for (int a = 0; a < 3; ++a) out[a].coeffs[i] = V[a].coeffs[i] - (k[a] / k2) * kv;
  });
  return out;
}

SpectralField dealias(SpectralField F) {
  const GridSpec& g = F.grid;
  kernels::parallel::for_each_plane(g.n, [&](int kz) {
    for (int ky = 0; ky < g.n; ++ky)
      for (int kx = 0; kx < g.half(); ++kx)
        if (!g.keeps_dealiased(kx, ky, kz)) F(kx, ky, kz) = 0.0;
  });
  return F;
}

SpectralVector dealias(SpectralVector V) {
  for (auto& c : V) c = dealias(std::move(c));
  return V;
}

int band_limit(const SpectralField& F, double rel_tol) {
  const GridSpec& g = F.grid;
  double peak = 0.0;
  for (const auto& c : F.coeffs) peak = std::max(peak, std::abs(c));
  if (peak == 0.0) return 0;
  int band = 0;
  for (int kz = 0; kz < g.n; ++kz)
    for (int ky = 0; ky < g.n; ++ky)
      for (int kx = 0; kx < g.half(); ++kx)
        if (std::abs(F(kx, ky, kz)) > rel_tol * peak) {
          int m = std::max({kx, std::abs(g.signed_mode(ky)), std::abs(g.signed_mode(kz))});
          band = std::max(band, m);
        }
  return band;
}

}  // namespace spectral

ScalarField derivative(const ScalarField& f, int axis) {
  return transform_inverse(spectral::derivative(transform_forward(f), axis));
}

VectorField gradient(const ScalarField& f) {
  return transform_inverse(spectral::gradient(transform_forward(f)));
}

ScalarField divergence(const VectorField& v) {
  return transform_inverse(spectral::divergence(transform_forward(v)));
}

ScalarField laplacian(const ScalarField& f) {
  return transform_inverse(spectral::laplacian(transform_forward(f)));
}

VectorField laplacian(const VectorField& v) {
  return transform_inverse(spectral::laplacian(transform_forward(v)));
}

VectorField leray_project(const VectorField& v) {
  return transform_inverse(spectral::leray_project(transform_forward(v)));
}

double max_divergence(const VectorField& v) { return norm_lp(divergence(v), Lp::inf); }

}  // namespace bardina
