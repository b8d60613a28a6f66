#include "bardina/filter.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "bardina/fft.hpp"
#include "bardina/kernels.hpp"
#include "bardina/operators.hpp"

namespace bardina {

void FilterParams::validate() const {
  if (!(alpha > 0.0) || alpha > 1.0) {
    throw std::invalid_argument("filter: alpha must satisfy 0 < alpha <= 1, got " + std::to_string(alpha));
  }
}

void FilterParams::validate_for(const GridSpec& g) const {
  validate();
  if (alpha > g.length / 20.0) {
    throw std::invalid_argument("filter: alpha must not exceed L/20 (alpha = " + std::to_string(alpha) +
                                ", L/20 = " + std::to_string(g.length / 20.0) + ")");
  }
}

double kernel_radial(double r, double alpha) {
  if (!(r > 0.0)) throw std::domain_error("kernel_eval: H_alpha is singular at x = 0");
  return std::exp(-r / alpha) / (4.0 * std::numbers::pi * alpha * alpha * r);
}

double kernel_eval(const std::array<double, 3>& x, double alpha) {
  return kernel_radial(std::hypot(x[0], x[1], x[2]), alpha);
}

double kernel_mass(double r, double alpha) {
  if (!(r > 0.0)) return 0.0;
  // 4 pi s^2 H(s) = s exp(-s / alpha) / alpha^2 is smooth on [0, r].
  auto shell = [alpha](double s) { return s * std::exp(-s / alpha) / (alpha * alpha); };
  using boost::math::quadrature::gauss_kronrod;
  return gauss_kronrod<double, 31>::integrate(shell, 0.0, r, 15, 1e-14);
}

std::vector<KernelTableRow> kernel_table(double alpha, std::span<const double> radii) {
  FilterParams{alpha}.validate();
  std::vector<KernelTableRow> rows;
  rows.reserve(radii.size());
  for (double r : radii) {
    if (!(r > 0.0)) throw std::invalid_argument("kernel_table: radii must be > 0");
    rows.push_back({r, kernel_radial(r, alpha), kernel_mass(r, alpha)});
  }
  return rows;
}

SpectralField filter_spectral(const SpectralField& F, const FilterParams& p) {
  const double a = p.alpha;
  return apply_radial_symbol(F, [a](double k2) { return filter_symbol(k2, a); });
}

SpectralVector filter_spectral(const SpectralVector& V, const FilterParams& p) {
  const double a = p.alpha;
  return apply_radial_symbol(V, [a](double k2) { return filter_symbol(k2, a); });
}

ScalarField filter_spectral(const ScalarField& f, const FilterParams& p) {
  return transform_inverse(filter_spectral(transform_forward(f), p));
}

VectorField filter_spectral(const VectorField& v, const FilterParams& p) {
  return transform_inverse(filter_spectral(transform_forward(v), p));
}

TensorField filter_spectral(const TensorField& t, const FilterParams& p) {
  TensorField out;
  for (int i = 0; i < 9; ++i) out.comp[i] = filter_spectral(t.comp[i], p);
  return out;
}

namespace {

template <int Points>
std::vector<std::pair<double, double>> gauss_rule() {
  using Rule = boost::math::quadrature::gauss<double, Points>;
  const auto& x = Rule::abscissa();
  const auto& w = Rule::weights();
  std::vector<std::pair<double, double>> rule;
  for (std::size_t i = 0; i < x.size(); ++i) {
    rule.emplace_back(x[i], w[i]);
    if (x[i] != 0.0) rule.emplace_back(-x[i], w[i]);
  }
  return rule;
}

// Mass of H over the cube of edge h centred at c, by a tensor Gauss rule.
double cell_mass(const std::array<double, 3>& c, double h, double alpha,
                 const std::vector<std::pair<double, double>>& rule) {
  double acc = 0.0;
  for (const auto& [xi, wi] : rule)
    for (const auto& [yj, wj] : rule)
      for (const auto& [zk, wk] : rule) {
        const double r = std::hypot(c[0] + 0.5 * h * xi, c[1] + 0.5 * h * yj, c[2] + 0.5 * h * zk);
        acc += wi * wj * wk * kernel_radial(r, alpha);
      }
  return acc * h * h * h / 8.0;
}

// Rays from the centre leave the cube through one of its six faces; along a
// ray that exits at distance R the kernel mass is 1 - e^{-R/alpha}(1 + R/alpha).
// Integrating that over the face z = h/2 with the solid-angle element
// (h/2) dx dy / R^3 gives a smooth integrand.
double source_cell_mass(double h, double alpha) {
  using Rule = boost::math::quadrature::gauss<double, 20>;
  const double a = 0.5 * h;
  auto face = [&](double x, double y) {
    const double r = std::sqrt(x * x + y * y + a * a);
    const double q = r / alpha;
    return (-std::expm1(-q) - q * std::exp(-q)) * a / (r * r * r);
  };
  const double quarter = Rule::integrate(
      [&](double x) { return Rule::integrate([&](double y) { return face(x, y); }, 0.0, a); }, 0.0, a);
  return 6.0 * 4.0 * quarter / (4.0 * std::numbers::pi);
}

}  // namespace

ScalarField convolution_weights(const GridSpec& g, const FilterParams& p) {
  g.validate();
  p.validate_for(g);
  const int n = g.n;
  const int half = n / 2;
  const double h = g.spacing();
  const auto near_rule = gauss_rule<8>();
  const auto far_rule = gauss_rule<4>();

  // The weights are invariant under sign flips and axis permutations, so only
  // sorted triples 0 <= a <= b <= c <= n/2 are integrated.
  const int side = half + 1;
  std::vector<double> unique(static_cast<std::size_t>(side) * side * side, 0.0);
  auto uidx = [side](int a, int b, int c) { return (static_cast<std::size_t>(c) * side + b) * side + a; };
  kernels::parallel::for_each_plane(side, [&](int c) {
    for (int b = 0; b <= c; ++b)
      for (int a = 0; a <= b; ++a) {
        double mass = 0.0;
        for (int sx = -1; sx <= 1; ++sx)
          for (int sy = -1; sy <= 1; ++sy)
            for (int sz = -1; sz <= 1; ++sz) {
              const int mx = a + sx * n, my = b + sy * n, mz = c + sz * n;
              if (mx == 0 && my == 0 && mz == 0) {
                mass += source_cell_mass(h, p.alpha);
                continue;
              }
              const int reach = std::max({std::abs(mx), std::abs(my), std::abs(mz)});
              mass += cell_mass({mx * h, my * h, mz * h}, h, p.alpha, reach <= 2 ? near_rule : far_rule);
            }
        unique[uidx(a, b, c)] = mass;
      }
  });

  ScalarField w(g);
  for (int z = 0; z < n; ++z)
    for (int y = 0; y < n; ++y)
      for (int x = 0; x < n; ++x) {
        std::array<int, 3> m{std::abs(g.signed_mode(x)), std::abs(g.signed_mode(y)), std::abs(g.signed_mode(z))};
        std::sort(m.begin(), m.end());
        w(x, y, z) = unique[uidx(m[0], m[1], m[2])];
      }
  return w;
}

ScalarField filter_convolution(const ScalarField& f, const FilterParams& p) {
  const ScalarField w = convolution_weights(f.grid, p);
  ScalarField out(f.grid);
  kernels::parallel::convolve_periodic(f.grid.n, w.values, f.values, 1.0, out.values);
  return out;
}

}  // namespace bardina
