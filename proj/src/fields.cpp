#include "bardina/fields.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "bardina/kernels.hpp"

namespace bardina {

void require_same_grid(const GridSpec& a, const GridSpec& b, const char* where) {
  if (!(a == b)) {
    throw std::invalid_argument(std::string(where) + ": fields live on different grids");
  }
}

ScalarField::ScalarField(const GridSpec& g, std::vector<double> v) : grid(g), values(std::move(v)) {
  if (values.size() != g.points()) {
    throw std::invalid_argument("ScalarField: expected " + std::to_string(g.points()) +
                                " samples, got " + std::to_string(values.size()));
  }
}

ScalarField ScalarField::from_function(const GridSpec& g,
                                       const std::function<double(double, double, double)>& f) {
  ScalarField out(g);
  const double h = g.spacing();
  for (int z = 0; z < g.n; ++z)
    for (int y = 0; y < g.n; ++y)
      for (int x = 0; x < g.n; ++x) out(x, y, z) = f(x * h, y * h, z * h);
  return out;
}

bool ScalarField::all_finite() const {
  for (double v : values)
    if (!std::isfinite(v)) return false;
  return true;
}

ScalarField& ScalarField::operator+=(const ScalarField& o) {
  require_same_grid(grid, o.grid, "ScalarField +=");
  for (std::size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
  return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& o) {
  require_same_grid(grid, o.grid, "ScalarField -=");
  for (std::size_t i = 0; i < values.size(); ++i) values[i] -= o.values[i];
  return *this;
}

ScalarField& ScalarField::operator*=(double s) {
  for (double& v : values) v *= s;
  return *this;
}

ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
ScalarField operator*(double s, ScalarField a) { return a *= s; }

ScalarField multiply(const ScalarField& a, const ScalarField& b) {
  require_same_grid(a.grid, b.grid, "multiply");
  ScalarField out(a.grid);
  kernels::parallel::multiply(a.values, b.values, out.values);
  return out;
}

bool VectorField::all_finite() const {
  return comp[0].all_finite() && comp[1].all_finite() && comp[2].all_finite();
}

VectorField& VectorField::operator+=(const VectorField& o) {
  for (int i = 0; i < 3; ++i) comp[i] += o.comp[i];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
  for (int i = 0; i < 3; ++i) comp[i] -= o.comp[i];
  return *this;
}

VectorField& VectorField::operator*=(double s) {
  for (auto& c : comp) c *= s;
  return *this;
}

VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
VectorField operator*(double s, VectorField a) { return a *= s; }

TensorField::TensorField(const GridSpec& g) {
  for (auto& c : comp) c = ScalarField(g);
}

TensorField outer(const VectorField& u, const VectorField& v) {
  require_same_grid(u.grid(), v.grid(), "outer");
  TensorField t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t.at(i, j) = multiply(u[i], v[j]);
  return t;
}

SpectralField& SpectralField::operator+=(const SpectralField& o) {
  require_same_grid(grid, o.grid, "SpectralField +=");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& o) {
  require_same_grid(grid, o.grid, "SpectralField -=");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
  return *this;
}

SpectralField& SpectralField::operator*=(double s) {
  for (auto& c : coeffs) c *= s;
  return *this;
}

SpectralField& SpectralField::axpy(double s, const SpectralField& o) {
  require_same_grid(grid, o.grid, "SpectralField axpy");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += s * o.coeffs[i];
  return *this;
}

SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
SpectralField operator*(double s, SpectralField a) { return a *= s; }

SpectralVector zeros_like(const SpectralVector& v) {
  return {SpectralField(v[0].grid), SpectralField(v[1].grid), SpectralField(v[2].grid)};
}

SpectralVector operator+(SpectralVector a, const SpectralVector& b) {
  for (int i = 0; i < 3; ++i) a[i] += b[i];
  return a;
}

SpectralVector operator-(SpectralVector a, const SpectralVector& b) {
  for (int i = 0; i < 3; ++i) a[i] -= b[i];
  return a;
}

SpectralVector operator*(double s, SpectralVector a) {
  for (auto& c : a) c *= s;
  return a;
}

void axpy(SpectralVector& y, double s, const SpectralVector& x) {
  for (int i = 0; i < 3; ++i) y[i].axpy(s, x[i]);
}

}  // namespace bardina
