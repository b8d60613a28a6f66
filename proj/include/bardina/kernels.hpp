#pragma once

// Data-parallel inner loops. Each kernel exists twice: a plain serial
// reference used by the tests, and an OpenMP version used by the library.
// Parallel reductions accumulate one partial per z-plane and combine the
// partials in plane order, so results do not depend on the thread count.

#include <complex>
#include <span>

namespace bardina::kernels {

namespace serial {

/// out[i] = scale * sum_j weights[(i - j) mod n] * source[j] on an n^3 periodic grid.
void convolve_periodic(int n, std::span<const double> weights, std::span<const double> source,
                       double scale, std::span<double> out);
double sum_abs_pow(std::span<const double> v, int p);
double max_abs(std::span<const double> v);
double dot(std::span<const double> a, std::span<const double> b);
void multiply(std::span<const double> a, std::span<const double> b, std::span<double> out);
void scale_modes(std::span<std::complex<double>> coeffs, std::span<const double> symbol);

template <class F>
void for_each_plane(int planes, F&& f) {
  for (int k = 0; k < planes; ++k) f(k);
}

}  // namespace serial

namespace parallel {

void convolve_periodic(int n, std::span<const double> weights, std::span<const double> source,
                       double scale, std::span<double> out);
/// `planes` must divide v.size(); partials are taken per plane.
double sum_abs_pow(std::span<const double> v, int p, int planes);
double max_abs(std::span<const double> v, int planes);
double dot(std::span<const double> a, std::span<const double> b, int planes);
void multiply(std::span<const double> a, std::span<const double> b, std::span<double> out);
void scale_modes(std::span<std::complex<double>> coeffs, std::span<const double> symbol);

template <class F>
void for_each_plane(int planes, F&& f) {
#pragma omp parallel for schedule(static)
  for (int k = 0; k < planes; ++k) f(k);
}

}  // namespace parallel

/// Caps the OpenMP worker count; values <= 0 leave the runtime default.
void set_thread_cap(int threads);
int thread_count();

}  // namespace bardina::kernels
