#include "bardina/random_fields.hpp"

#include <cmath>
#include <numbers>

#include "bardina/fft.hpp"
#include "bardina/norms.hpp"
#include "bardina/operators.hpp"

namespace bardina {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t CounterRng::bits(std::uint64_t stream, std::uint64_t counter) const {
  return splitmix64(splitmix64(seed_ ^ splitmix64(stream)) ^ counter);
}

double CounterRng::uniform(std::uint64_t stream, std::uint64_t counter) const {
  // 53 random mantissa bits, shifted off zero.
  return (static_cast<double>(bits(stream, counter) >> 11) + 0.5) * 0x1.0p-53;
}

double CounterRng::normal(std::uint64_t stream, std::uint64_t counter) const {
  const double u1 = uniform(stream, 2 * counter);
  const double u2 = uniform(stream, 2 * counter + 1);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

ScalarField random_band_limited(const GridSpec& g, std::uint64_t seed, std::uint64_t stream,
                                int max_mode, double slope) {
  g.validate();
  CounterRng rng(seed);
  ScalarField noise(g);
  for (std::size_t i = 0; i < noise.values.size(); ++i) noise.values[i] = rng.normal(stream, i);
  SpectralField F = transform_forward(noise);
  const double unit = g.wavenumber_unit();
  for (int kz = 0; kz < g.n; ++kz)
    for (int ky = 0; ky < g.n; ++ky)
      for (int kx = 0; kx < g.half(); ++kx) {
        const int my = g.signed_mode(ky), mz = g.signed_mode(kz);
        const int m = std::max({kx, std::abs(my), std::abs(mz)});
        const bool nyquist = kx == g.n / 2 || my == -g.n / 2 || mz == -g.n / 2;
        if (m == 0 || m > max_mode || nyquist) {
          F(kx, ky, kz) = 0.0;
          continue;
        }
        const double k = unit * std::sqrt(double(kx * kx + my * my + mz * mz));
        F(kx, ky, kz) *= std::pow(k, 0.5 * (slope - 2.0));
      }
  ScalarField f = transform_inverse(F);
  const double rms = norm_lp(f, Lp::two) / std::sqrt(g.volume());
  if (rms > 0.0) f *= 1.0 / rms;
  return f;
}

VectorField random_solenoidal(const GridSpec& g, std::uint64_t seed, int max_mode, double slope) {
  VectorField v(random_band_limited(g, seed, 0, max_mode, slope),
                random_band_limited(g, seed, 1, max_mode, slope),
                random_band_limited(g, seed, 2, max_mode, slope));
  v = leray_project(v);
  const double rms = norm_lp(v, Lp::two) / std::sqrt(g.volume());
  if (rms > 0.0) v *= 1.0 / rms;
  return v;
}

VectorField taylor_green(const GridSpec& g, double amplitude) {
  const double k = g.wavenumber_unit();
  return VectorField(
      ScalarField::from_function(g, [=](double x, double y, double z) {
        return amplitude * std::sin(k * x) * std::cos(k * y) * std::cos(k * z);
      }),
      ScalarField::from_function(g, [=](double x, double y, double z) {
        return -amplitude * std::cos(k * x) * std::sin(k * y) * std::cos(k * z);
      }),
      ScalarField(g));
}

VectorField abc_flow(const GridSpec& g) {
  const double k = g.wavenumber_unit();
  return VectorField(
      ScalarField::from_function(g, [=](double, double y, double z) { return std::sin(k * z) + std::cos(k * y); }),
      ScalarField::from_function(g, [=](double x, double, double z) { return std::sin(k * x) + std::cos(k * z); }),
      ScalarField::from_function(g, [=](double x, double y, double) { return std::sin(k * y) + std::cos(k * x); }));
}

ScalarField gaussian_bump(const GridSpec& g, double sigma) {
  const double c = 0.5 * g.length;
  const double l = g.length;
  auto axis = [=](double x) {
    double sum = 0.0;
    for (int i = -2; i <= 2; ++i) sum += std::exp(-(x - c + i * l) * (x - c + i * l) / (2.0 * sigma * sigma));
    return sum;
  };
  return ScalarField::from_function(g, [=](double x, double y, double z) { return axis(x) * axis(y) * axis(z); });
}

}  // namespace bardina
