#include "bardina/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace bardina {
namespace {

struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan inverse = nullptr;
};

// FFTW planning is not thread-safe; execution with the new-array interface is.
std::mutex plan_mutex;

const PlanPair& plans_for(int n) {
  static std::map<int, PlanPair> cache;
  std::lock_guard lock(plan_mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  GridSpec g{n, 1.0};
  std::vector<double> real(g.points());
  std::vector<Complex> spec(g.modes());
  auto* cplx = reinterpret_cast<fftw_complex*>(spec.data());
  // ESTIMATE keeps plan selection (and so results) reproducible run to run.
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  PlanPair p;
  p.forward = fftw_plan_dft_r2c_3d(n, n, n, real.data(), cplx, flags);
  p.inverse = fftw_plan_dft_c2r_3d(n, n, n, cplx, real.data(), flags);
  if (!p.forward || !p.inverse) throw std::runtime_error("fftw: plan creation failed");
  return cache.emplace(n, p).first->second;
}

}  // namespace

SpectralField transform_forward(const ScalarField& f) {
  if (!f.all_finite()) throw std::domain_error("transform_forward: non-finite input values");
  SpectralField out(f.grid);
  const auto& p = plans_for(f.grid.n);
  // Out-of-place r2c preserves its input; the API is just non-const.
  auto* in = const_cast<double*>(f.values.data());
  fftw_execute_dft_r2c(p.forward, in, reinterpret_cast<fftw_complex*>(out.coeffs.data()));
  return out;
}

ScalarField transform_inverse(const SpectralField& F) {
  ScalarField out(F.grid);
  const auto& p = plans_for(F.grid.n);
  std::vector<Complex> scratch = F.coeffs;  // c2r destroys its input
  fftw_execute_dft_c2r(p.inverse, reinterpret_cast<fftw_complex*>(scratch.data()), out.values.data());
  out *= 1.0 / static_cast<double>(F.grid.points());
  if (!out.all_finite()) throw std::domain_error("transform_inverse: non-finite coefficients");
  return out;
}

SpectralVector transform_forward(const VectorField& v) {
  return {transform_forward(v[0]), transform_forward(v[1]), transform_forward(v[2])};
}

VectorField transform_inverse(const SpectralVector& V) {
  return {transform_inverse(V[0]), transform_inverse(V[1]), transform_inverse(V[2])};
}

}  // namespace bardina
