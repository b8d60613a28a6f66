#include "bardina/norms.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "bardina/fft.hpp"
#include "bardina/kernels.hpp"
#include "bardina/operators.hpp"

namespace bardina {
namespace {

double reduce(const GridSpec& g, std::span<const double> v, Lp p) {
  switch (p) {
    case Lp::one:
      return g.cell_volume() * kernels::parallel::sum_abs_pow(v, 1, g.n);
    case Lp::two:
      return std::sqrt(g.cell_volume() * kernels::parallel::sum_abs_pow(v, 2, g.n));
    case Lp::inf:
      return kernels::parallel::max_abs(v, g.n);
  }
  return 0.0;
}

std::vector<double> magnitude(const VectorField& v) {
  const GridSpec& g = v.grid();
  std::vector<double> mag(g.points());
  const std::size_t plane = static_cast<std::size_t>(g.n) * g.n;
  kernels::parallel::for_each_plane(g.n, [&](int z) {
    for (std::size_t i = z * plane; i < (z + 1) * plane; ++i) {
      const double a = v[0].values[i], b = v[1].values[i], c = v[2].values[i];
      mag[i] = std::sqrt(a * a + b * b + c * c);
    }
  });
  return mag;
}

void check_order(int m) {
  if (m < 0 || m > 4) throw std::invalid_argument("norm_wmp: derivative order m must be in [0, 4]");
}

std::vector<std::array<int, 3>> multi_indices(int order) {
  std::vector<std::array<int, 3>> out;
  for (int a = order; a >= 0; --a)
    for (int b = order - a; b >= 0; --b) out.push_back({a, b, order - a - b});
  return out;
}

// Pointwise sup over multi-indices of the component-wise Euclidean magnitude.
template <class Components>
double sobolev_sum(const Components& comps, const GridSpec& g, int m, Lp p) {
  check_order(m);
  double total = 0.0;
  for (int j = 0; j <= m; ++j) {
    std::vector<double> sup(g.points(), 0.0);
    for (const auto& a : multi_indices(j)) {
      std::vector<double> mag2(g.points(), 0.0);
      for (const SpectralField& F : comps) {
        ScalarField d = transform_inverse(spectral::multi_derivative(F, a[0], a[1], a[2]));
        for (std::size_t i = 0; i < mag2.size(); ++i) mag2[i] += d.values[i] * d.values[i];
      }
      for (std::size_t i = 0; i < sup.size(); ++i) sup[i] = std::max(sup[i], std::sqrt(mag2[i]));
    }
    total += reduce(g, sup, p);
  }
  return total;
}

}  // namespace

double norm_lp(const ScalarField& f, Lp p) { return reduce(f.grid, f.values, p); }

double norm_lp(const VectorField& v, Lp p) {
  if (p == Lp::two) {
    double s = 0.0;
    for (const auto& c : v.comp) s += kernels::parallel::sum_abs_pow(c.values, 2, c.grid.n);
    return std::sqrt(v.grid().cell_volume() * s);
  }
  return reduce(v.grid(), magnitude(v), p);
}

double norm_wmp(const SpectralField& F, int m, Lp p) {
  return sobolev_sum(std::array<SpectralField, 1>{F}, F.grid, m, p);
}

double norm_wmp(const SpectralVector& V, int m, Lp p) { return sobolev_sum(V, V[0].grid, m, p); }

double norm_wmp(const ScalarField& f, int m, Lp p) {
  check_order(m);
  if (m == 0) return norm_lp(f, p);
  return norm_wmp(transform_forward(f), m, p);
}

double norm_wmp(const VectorField& v, int m, Lp p) {
  check_order(m);
  if (m == 0) return norm_lp(v, p);
  return norm_wmp(transform_forward(v), m, p);
}

double inner(const ScalarField& f, const ScalarField& g) {
  require_same_grid(f.grid, g.grid, "inner");
  return f.grid.cell_volume() * kernels::parallel::dot(f.values, g.values, f.grid.n);
}

double inner(const VectorField& u, const VectorField& v) {
  return inner(u[0], v[0]) + inner(u[1], v[1]) + inner(u[2], v[2]);
}

namespace {

template <class Weight>
double spectral_sum(const GridSpec& g, Weight&& w) {
  const int n = g.n;
  std::vector<double> partial(n, 0.0);
  std::vector<double> k(n);
  for (int i = 0; i < n; ++i) k[i] = g.derivative_wavenumber(i);
  kernels::parallel::for_each_plane(n, [&](int kz) {
    double acc = 0.0;
    for (int ky = 0; ky < n; ++ky)
      for (int kx = 0; kx < g.half(); ++kx)
        acc += g.mode_weight(kx) * w(g.mode_index(kx, ky, kz), Wavevector{k[kx], k[ky], k[kz]});
    partial[kz] = acc;
  });
  double total = 0.0;
  for (double s : partial) total += s;
  const double np = static_cast<double>(g.points());
  return total * g.volume() / (np * np);
}

}  // namespace

double l2_squared(const SpectralField& F) {
  return spectral_sum(F.grid, [&](std::size_t i, const Wavevector&) { return std::norm(F.coeffs[i]); });
}

double l2_squared(const SpectralVector& V) {
  return spectral_sum(V[0].grid, [&](std::size_t i, const Wavevector&) {
    return std::norm(V[0].coeffs[i]) + std::norm(V[1].coeffs[i]) + std::norm(V[2].coeffs[i]);
  });
}

double inner(const SpectralField& F, const SpectralField& G) {
  require_same_grid(F.grid, G.grid, "inner");
  return spectral_sum(F.grid, [&](std::size_t i, const Wavevector&) {
    return (F.coeffs[i] * std::conj(G.coeffs[i])).real();
  });
}

double inner(const SpectralVector& U, const SpectralVector& V) {
  return inner(U[0], V[0]) + inner(U[1], V[1]) + inner(U[2], V[2]);
}

double gradient_l2_squared(const SpectralVector& V) {
  return spectral_sum(V[0].grid, [&](std::size_t i, const Wavevector& k) {
    return k.norm2() * (std::norm(V[0].coeffs[i]) + std::norm(V[1].coeffs[i]) + std::norm(V[2].coeffs[i]));
  });
}

double laplacian_l2_squared(const SpectralVector& V) {
  return spectral_sum(V[0].grid, [&](std::size_t i, const Wavevector& k) {
    const double k4 = k.norm2() * k.norm2();
    return k4 * (std::norm(V[0].coeffs[i]) + std::norm(V[1].coeffs[i]) + std::norm(V[2].coeffs[i]));
  });
}

}  // namespace bardina
