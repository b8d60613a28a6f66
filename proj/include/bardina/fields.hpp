#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "bardina/grid.hpp"

namespace bardina {

using Complex = std::complex<double>;

/// Real samples on the periodic grid.
struct ScalarField {
  GridSpec grid;
  std::vector<double> values;

  ScalarField() = default;
  explicit ScalarField(const GridSpec& g) : grid(g), values(g.points(), 0.0) {}
  ScalarField(const GridSpec& g, std::vector<double> v);

  /// Samples `f(x, y, z)` at the grid nodes x_i = i * h.
  static ScalarField from_function(const GridSpec& g,
                                   const std::function<double(double, double, double)>& f);

  double operator()(int x, int y, int z) const { return values[grid.point_index(x, y, z)]; }
  double& operator()(int x, int y, int z) { return values[grid.point_index(x, y, z)]; }

  bool all_finite() const;

  ScalarField& operator+=(const ScalarField& o);
  ScalarField& operator-=(const ScalarField& o);
  ScalarField& operator*=(double s);
};

ScalarField operator+(ScalarField a, const ScalarField& b);
ScalarField operator-(ScalarField a, const ScalarField& b);
ScalarField operator*(double s, ScalarField a);
/// Pointwise product.
ScalarField multiply(const ScalarField& a, const ScalarField& b);

struct VectorField {
  std::array<ScalarField, 3> comp;

  VectorField() = default;
  explicit VectorField(const GridSpec& g) : comp{ScalarField(g), ScalarField(g), ScalarField(g)} {}
  VectorField(ScalarField a, ScalarField b, ScalarField c) : comp{std::move(a), std::move(b), std::move(c)} {}

  const GridSpec& grid() const { return comp[0].grid; }
  ScalarField& operator[](int i) { return comp[i]; }
  const ScalarField& operator[](int i) const { return comp[i]; }
  bool all_finite() const;

  VectorField& operator+=(const VectorField& o);
  VectorField& operator-=(const VectorField& o);
  VectorField& operator*=(double s);
};

VectorField operator+(VectorField a, const VectorField& b);
VectorField operator-(VectorField a, const VectorField& b);
VectorField operator*(double s, VectorField a);

/// Nine components, row-major: (i, j) -> comp[3 * i + j].
struct TensorField {
  std::array<ScalarField, 9> comp;

  TensorField() = default;
  explicit TensorField(const GridSpec& g);

  const GridSpec& grid() const { return comp[0].grid; }
  ScalarField& at(int i, int j) { return comp[3 * i + j]; }
  const ScalarField& at(int i, int j) const { return comp[3 * i + j]; }
};

/// u (x) v computed pointwise.
TensorField outer(const VectorField& u, const VectorField& v);

/// Fourier coefficients in the half layout of GridSpec. Forward transforms are
/// unscaled; the inverse carries 1/N^3.
struct SpectralField {
  GridSpec grid;
  std::vector<Complex> coeffs;

  SpectralField() = default;
  explicit SpectralField(const GridSpec& g) : grid(g), coeffs(g.modes(), Complex{}) {}

  Complex operator()(int kx, int ky, int kz) const { return coeffs[grid.mode_index(kx, ky, kz)]; }
  Complex& operator()(int kx, int ky, int kz) { return coeffs[grid.mode_index(kx, ky, kz)]; }

  SpectralField& operator+=(const SpectralField& o);
  SpectralField& operator-=(const SpectralField& o);
  SpectralField& operator*=(double s);
  /// this += s * o
  SpectralField& axpy(double s, const SpectralField& o);
};

SpectralField operator+(SpectralField a, const SpectralField& b);
SpectralField operator-(SpectralField a, const SpectralField& b);
SpectralField operator*(double s, SpectralField a);

using SpectralVector = std::array<SpectralField, 3>;

SpectralVector zeros_like(const SpectralVector& v);
SpectralVector operator+(SpectralVector a, const SpectralVector& b);
SpectralVector operator-(SpectralVector a, const SpectralVector& b);
SpectralVector operator*(double s, SpectralVector a);
void axpy(SpectralVector& y, double s, const SpectralVector& x);

/// Throws std::invalid_argument when the two grids differ.
void require_same_grid(const GridSpec& a, const GridSpec& b, const char* where);

}  // namespace bardina
