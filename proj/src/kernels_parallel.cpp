#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "bardina/kernels.hpp"

namespace bardina::kernels {

namespace parallel {

void convolve_periodic(int n, std::span<const double> weights, std::span<const double> source,
                       double scale, std::span<double> out) {
  const std::size_t row = static_cast<std::size_t>(n);
  const std::size_t plane = row * row;
#pragma omp parallel
  {
    // Source rows are doubled so the circular shift becomes a contiguous slice.
    std::vector<double> doubled(2 * row);
    std::vector<double> acc(row);
#pragma omp for schedule(static)
    for (int z = 0; z < n; ++z) {
      for (int y = 0; y < n; ++y) {
        std::fill(acc.begin(), acc.end(), 0.0);
        for (int dz = 0; dz < n; ++dz) {
          const int zs = (z - dz) & (n - 1);
          for (int dy = 0; dy < n; ++dy) {
            const int ys = (y - dy) & (n - 1);
            const double* src = source.data() + zs * plane + ys * row;
            std::copy(src, src + row, doubled.begin());
            std::copy(src, src + row, doubled.begin() + row);
            const double* w = weights.data() + dz * plane + dy * row;
            for (int dx = 0; dx < n; ++dx) {
              const double wv = w[dx];
              const double* s = doubled.data() + n - dx;
#pragma omp simd
              for (int x = 0; x < n; ++x) acc[x] += wv * s[x];
            }
          }
        }
        double* o = out.data() + z * plane + y * row;
        for (int x = 0; x < n; ++x) o[x] = scale * acc[x];
      }
    }
  }
}

double sum_abs_pow(std::span<const double> v, int p, int planes) {
  std::vector<double> partial(planes, 0.0);
  const std::size_t len = v.size() / planes;
#pragma omp parallel for schedule(static)
  for (int k = 0; k < planes; ++k) {
    double acc = 0.0;
    const double* q = v.data() + k * len;
    if (p == 1) {
      for (std::size_t i = 0; i < len; ++i) acc += std::abs(q[i]);
    } else {
      for (std::size_t i = 0; i < len; ++i) acc += q[i] * q[i];
    }
    partial[k] = acc;
  }
  double total = 0.0;
  for (double s : partial) total += s;
  return total;
}

double max_abs(std::span<const double> v, int planes) {
  std::vector<double> partial(planes, 0.0);
  const std::size_t len = v.size() / planes;
#pragma omp parallel for schedule(static)
  for (int k = 0; k < planes; ++k) {
    double m = 0.0;
    const double* q = v.data() + k * len;
    for (std::size_t i = 0; i < len; ++i) m = std::max(m, std::abs(q[i]));
    partial[k] = m;
  }
  return *std::max_element(partial.begin(), partial.end());
}

double dot(std::span<const double> a, std::span<const double> b, int planes) {
  std::vector<double> partial(planes, 0.0);
  const std::size_t len = a.size() / planes;
#pragma omp parallel for schedule(static)
  for (int k = 0; k < planes; ++k) {
    double acc = 0.0;
    const double* p = a.data() + k * len;
    const double* q = b.data() + k * len;
    for (std::size_t i = 0; i < len; ++i) acc += p[i] * q[i];
    partial[k] = acc;
  }
  double total = 0.0;
  for (double s : partial) total += s;
  return total;
}

void multiply(std::span<const double> a, std::span<const double> b, std::span<double> out) {
  const std::ptrdiff_t len = static_cast<std::ptrdiff_t>(a.size());
#pragma omp parallel for simd schedule(static)
  for (std::ptrdiff_t i = 0; i < len; ++i) out[i] = a[i] * b[i];
}

void scale_modes(std::span<std::complex<double>> coeffs, std::span<const double> symbol) {
  const std::ptrdiff_t len = static_cast<std::ptrdiff_t>(coeffs.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < len; ++i) coeffs[i] *= symbol[i];
}

}  // namespace parallel

void set_thread_cap(int threads) {
  if (threads > 0) omp_set_num_threads(threads);
}

int thread_count() { return omp_get_max_threads(); }

}  // namespace bardina::kernels
