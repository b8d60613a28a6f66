#include <cmath>
#include <cstddef>

#include "bardina/kernels.hpp"

namespace bardina::kernels::serial {

void convolve_periodic(int n, std::span<const double> weights, std::span<const double> source,
                       double scale, std::span<double> out) {
  const int mask = n - 1;
  auto at = [n](int x, int y, int z) { return (static_cast<std::size_t>(z) * n + y) * n + x; };
  for (int z = 0; z < n; ++z) {
    for (int y = 0; y < n; ++y) {
      for (int x = 0; x < n; ++x) {
        double acc = 0.0;
        for (int zs = 0; zs < n; ++zs) {
          for (int ys = 0; ys < n; ++ys) {
            for (int xs = 0; xs < n; ++xs) {
              acc += weights[at((x - xs) & mask, (y - ys) & mask, (z - zs) & mask)] * source[at(xs, ys, zs)];
            }
          }
        }
        out[at(x, y, z)] = scale * acc;
      }
    }
  }
}

double sum_abs_pow(std::span<const double> v, int p) {
  double acc = 0.0;
  for (double x : v) acc += p == 1 ? std::abs(x) : x * x;
  return acc;
}

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

void multiply(std::span<const double> a, std::span<const double> b, std::span<double> out) {
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
}

void scale_modes(std::span<std::complex<double>> coeffs, std::span<const double> symbol) {
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] *= symbol[i];
}

}  // namespace bardina::kernels::serial
