#pragma once

#include <cstdint>

#include "bardina/fields.hpp"

namespace bardina {

/// Counter-based generator: the value at (stream, counter) depends only on the
/// seed, so a corpus is identical on every platform and in any evaluation order.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t bits(std::uint64_t stream, std::uint64_t counter) const;
  /// Uniform in (0, 1).
  double uniform(std::uint64_t stream, std::uint64_t counter) const;
  /// Standard normal (Box-Muller on two counters).
  double normal(std::uint64_t stream, std::uint64_t counter) const;

 private:
  std::uint64_t seed_;
};

/// Zero-mean random field whose coefficients are non-zero only for
/// 1 <= max_d |m_d| <= max_mode, with amplitude |k|^{(slope - 2) / 2} so the
/// shell energy spectrum scales like k^slope. Normalized to unit RMS.
ScalarField random_band_limited(const GridSpec& g, std::uint64_t seed, std::uint64_t stream,
                                int max_mode, double slope = 0.0);

/// Leray-projected random band-limited vector field, unit RMS.
VectorField random_solenoidal(const GridSpec& g, std::uint64_t seed, int max_mode, double slope);

/// u = A (sin kx cos ky cos kz, -cos kx sin ky cos kz, 0), k = 2 pi / L.
VectorField taylor_green(const GridSpec& g, double amplitude = 1.0);

/// Arnold-Beltrami-Childress flow with A = B = C = 1: curl u = k u.
VectorField abc_flow(const GridSpec& g);

/// exp(-|x - c|^2 / (2 sigma^2)) centred in the box, summed over the nearest
/// periodic images so the field is smooth across the boundary.
ScalarField gaussian_bump(const GridSpec& g, double sigma);

}  // namespace bardina
