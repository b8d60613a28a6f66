#pragma once

#include <cstddef>
#include <numbers>

namespace bardina {

/// Uniform periodic N^3 grid on a box of edge `length`.
///
/// Physical samples are stored x-fastest: index = (z * n + y) * n + x.
/// Spectral coefficients use the real-to-complex half layout along x:
/// index = (kz * n + ky) * (n / 2 + 1) + kx.
struct GridSpec {
  int n = 32;
  double length = 2.0 * std::numbers::pi;

  /// Throws std::invalid_argument unless n >= 8, n is a power of two and length > 0.
  void validate() const;

  double spacing() const { return length / n; }
  double cell_volume() const { double h = spacing(); return h * h * h; }
  double volume() const { return length * length * length; }
  std::size_t points() const { return static_cast<std::size_t>(n) * n * n; }
  int half() const { return n / 2 + 1; }
  std::size_t modes() const { return static_cast<std::size_t>(n) * n * half(); }
  double wavenumber_unit() const { return 2.0 * std::numbers::pi / length; }

  std::size_t point_index(int x, int y, int z) const {
    return (static_cast<std::size_t>(z) * n + y) * n + x;
  }
  std::size_t mode_index(int kx, int ky, int kz) const {
    return (static_cast<std::size_t>(kz) * n + ky) * half() + kx;
  }

  /// Signed integer mode in [-n/2, n/2) for a full-axis array index.
  int signed_mode(int i) const { return i < n / 2 ? i : i - n; }

  /// Wavenumber used by every differential symbol; the Nyquist mode -n/2 maps to 0.
  double derivative_wavenumber(int i) const {
    int m = signed_mode(i);
    return m == -n / 2 ? 0.0 : wavenumber_unit() * m;
  }

  /// Multiplicity of a half-layout coefficient in a full-spectrum sum.
  double mode_weight(int kx) const { return (kx == 0 || kx == n / 2) ? 1.0 : 2.0; }

  /// 2/3 rule: keep modes with 3|m| < n along every axis (Nyquist excluded).
  bool keeps_dealiased(int kx, int ky, int kz) const;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

}  // namespace bardina
