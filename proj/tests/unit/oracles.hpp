#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls the spectral machinery under test.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "bardina/fields.hpp"

namespace oracle {

using bardina::Complex;
using bardina::GridSpec;
using bardina::ScalarField;

/// O(N^6) DFT of the half spectrum: F(kx, ky, kz) = sum_x f(x) exp(-2 pi i k.x / N).
inline std::vector<Complex> direct_dft(const ScalarField& f) {
  const GridSpec& g = f.grid;
  const int n = g.n;
  std::vector<Complex> out(g.modes());
  for (int kz = 0; kz < n; ++kz)
    for (int ky = 0; ky < n; ++ky)
      for (int kx = 0; kx < g.half(); ++kx) {
        Complex acc{};
        for (int z = 0; z < n; ++z)
          for (int y = 0; y < n; ++y)
            for (int x = 0; x < n; ++x) {
              const double phase = -2.0 * std::numbers::pi * (kx * x + ky * y + kz * z) / n;
              acc += f(x, y, z) * Complex(std::cos(phase), std::sin(phase));
            }
        out[g.mode_index(kx, ky, kz)] = acc;
      }
  return out;
}

/// Fourth-order centred difference along `axis`.
inline ScalarField fd4(const ScalarField& f, int axis) {
  const GridSpec& g = f.grid;
  const int n = g.n;
  const double h = g.spacing();
  ScalarField out(g);
  auto at = [&](int x, int y, int z, int s) {
    int c[3] = {x, y, z};
    c[axis] = (c[axis] + s + n) % n;
    return f(c[0], c[1], c[2]);
  };
  for (int z = 0; z < n; ++z)
    for (int y = 0; y < n; ++y)
      for (int x = 0; x < n; ++x) {
        out(x, y, z) = (-at(x, y, z, 2) + 8.0 * at(x, y, z, 1) - 8.0 * at(x, y, z, -1) + at(x, y, z, -2)) / (12.0 * h);
      }
  return out;
}

inline double max_abs_diff(const ScalarField& a, const ScalarField& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) m = std::max(m, std::abs(a.values[i] - b.values[i]));
  return m;
}

inline double l2(const ScalarField& f) {
  double s = 0.0;
  for (double v : f.values) s += v * v;
  return std::sqrt(s * f.grid.cell_volume());
}

inline double l2_diff(const ScalarField& a, const ScalarField& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) s += (a.values[i] - b.values[i]) * (a.values[i] - b.values[i]);
  return std::sqrt(s * a.grid.cell_volume());
}

inline double l2(const bardina::VectorField& v) {
  double s = 0.0;
  for (int c = 0; c < 3; ++c) s += l2(v[c]) * l2(v[c]);
  return std::sqrt(s);
}

inline double l2_diff(const bardina::VectorField& a, const bardina::VectorField& b) {
  double s = 0.0;
  for (int c = 0; c < 3; ++c) s += l2_diff(a[c], b[c]) * l2_diff(a[c], b[c]);
  return std::sqrt(s);
}

/// Mass of H_alpha inside radius r: 1 - e^{-r/alpha} (1 + r/alpha).
inline double kernel_mass(double r, double alpha) {
  const double q = r / alpha;
  return 1.0 - std::exp(-q) * (1.0 + q);
}

}  // namespace oracle
