#include "bardina/grid.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace bardina {

void GridSpec::validate() const {
  if (n < 8 || (n & (n - 1)) != 0) {
    throw std::invalid_argument("grid: N must be a power of two >= 8, got " + std::to_string(n));
  }
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw std::invalid_argument("grid: box length L must be positive and finite");
  }
}

bool GridSpec::keeps_dealiased(int kx, int ky, int kz) const {
  auto ok = [this](int m) { return 3 * std::abs(m) < n && m != -n / 2; };
  return ok(kx) && ok(signed_mode(ky)) && ok(signed_mode(kz));
}

}  // namespace bardina
