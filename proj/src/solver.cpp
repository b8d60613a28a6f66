#include "bardina/solver.hpp"

#include <cmath>
#include <string>

#include "bardina/fft.hpp"
#include "bardina/norms.hpp"
#include "bardina/operators.hpp"

namespace bardina {

void SolverParams::validate() const {
  if (!(nu > 0.0)) throw std::invalid_argument("solver: nu must be > 0");
  if (!(dt > 0.0)) throw std::invalid_argument("solver: dt must be > 0");
  if (!(t_end >= 0.0)) throw std::invalid_argument("solver: t_end must be >= 0");
  if (!(c_pic > 0.0)) throw std::invalid_argument("solver: C_pic must be > 0");
  filter.validate();
}

Diagnostics diagnostics(const SpectralVector& u) {
  return {l2_squared(u), gradient_l2_squared(u), laplacian_l2_squared(u)};
}

double energy_alpha(const SpectralVector& u, double alpha) { return diagnostics(u).e_alpha(alpha); }

bool is_solenoidal(const SpectralVector& u, double rel_tol) {
  const double div = std::sqrt(l2_squared(spectral::divergence(u)));
  return div <= rel_tol * std::sqrt(gradient_l2_squared(u));
}

VectorField SolverState::velocity() const { return transform_inverse(u); }

SolverState make_state(SpectralVector u, double t, double alpha, double e_alpha0) {
  SolverState s;
  s.u = std::move(u);
  s.t = t;
  s.diag = diagnostics(s.u);
  s.e_alpha = s.diag.e_alpha(alpha);
  s.e_alpha0 = e_alpha0;
  return s;
}

SolverState make_initial_state(const VectorField& u0, const SolverParams& params) {
  params.validate();
  SpectralVector u = transform_forward(u0);
  if (!is_solenoidal(u, 1e-8)) throw std::invalid_argument("initial data is not divergence-free");
  u = filter_spectral(u, params.filter);
  const double e0 = energy_alpha(u, params.filter.alpha);
  return make_state(std::move(u), 0.0, params.filter.alpha, e0);
}

namespace {

// Flux tensor u_i u_j (symmetric, six unique entries) in spectral space.
std::array<SpectralField, 6> flux(const SpectralVector& u, bool dealias) {
  const VectorField v = transform_inverse(dealias ? spectral::dealias(u) : u);
  std::array<SpectralField, 6> s;
  int c = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      SpectralField S = transform_forward(multiply(v[i], v[j]));
      s[c++] = dealias ? spectral::dealias(std::move(S)) : std::move(S);
    }
  return s;
}

constexpr int sym(int i, int j) {
  if (i > j) std::swap(i, j);
  return i == 0 ? j : (i == 1 ? 2 + j : 5);
}

void require_solenoidal(const SpectralVector& u, const char* where) {
  if (!is_solenoidal(u, 1e-8)) {
    throw std::invalid_argument(std::string(where) + ": input is not divergence-free");
  }
}

}  // namespace

SpectralVector nonlinear_term(const SpectralVector& u, double alpha, bool dealias) {
  require_solenoidal(u, "nonlinear_term");
  const auto S = flux(u, dealias);
  SpectralVector B = zeros_like(u);
  for_each_mode(u[0].grid, [&](std::size_t m, const Wavevector& k) {
    const double s = filter_symbol(k.norm2(), alpha);
    for (int i = 0; i < 3; ++i) {
      Complex acc = 0.0;
      for (int j = 0; j < 3; ++j) acc += k[j] * S[sym(i, j)].coeffs[m];
      B[i].coeffs[m] = Complex(0.0, s) * acc;
    }
  });
  return B;
}

VectorField nonlinear_term(const VectorField& u, double alpha, bool dealias) {
  return transform_inverse(nonlinear_term(transform_forward(u), alpha, dealias));
}

SpectralField pressure_solve(const SpectralVector& u, double alpha, bool dealias) {
  require_solenoidal(u, "pressure_solve");
  const auto S = flux(u, dealias);
  SpectralField p(u[0].grid);
  for_each_mode(p.grid, [&](std::size_t m, const Wavevector& k) {
    const double k2 = k.norm2();
    if (k2 == 0.0) return;
    Complex acc = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) acc += k[i] * k[j] * S[sym(i, j)].coeffs[m];
    p.coeffs[m] = -filter_symbol(k2, alpha) * acc / k2;
  });
  return p;
}

ScalarField pressure_solve(const VectorField& u, double alpha, bool dealias) {
  return transform_inverse(pressure_solve(transform_forward(u), alpha, dealias));
}

SpectralVector projected_tendency(const SpectralVector& u, const SolverParams& params) {
  if (!params.nonlinear) return zeros_like(u);
  return -1.0 * spectral::leray_project(nonlinear_term(u, params.filter.alpha, params.dealias));
}

SpectralVector heat_semigroup(const SpectralVector& u, double nu, double t) {
  return apply_radial_symbol(u, [=](double k2) { return std::exp(-nu * k2 * t); });
}

namespace {

class IntegratingFactorRk4 {
 public:
  IntegratingFactorRk4(const GridSpec& g, const SolverParams& p) : params_(p), half_(g.modes()), full_(g.modes()) {
    for_each_mode(g, [&](std::size_t i, const Wavevector& k) {
      half_[i] = std::exp(-p.nu * k.norm2() * 0.5 * p.dt);
      full_[i] = std::exp(-p.nu * k.norm2() * p.dt);
    });
  }

  SpectralVector advance(const SpectralVector& u) const {
    const double dt = params_.dt;
    const SpectralVector k1 = projected_tendency(u, params_);
    SpectralVector a = u;
    axpy(a, 0.5 * dt, k1);
    const SpectralVector k2 = projected_tendency(scale(a, half_), params_);
    SpectralVector b = scale(u, half_);
    axpy(b, 0.5 * dt, k2);
    const SpectralVector k3 = projected_tendency(b, params_);
    SpectralVector c = scale(u, full_);
    axpy(c, dt, scale(k3, half_));
    const SpectralVector k4 = projected_tendency(c, params_);

    SpectralVector out = scale(u, full_);
    axpy(out, dt / 6.0, scale(k1, full_));
    axpy(out, dt / 3.0, scale(k2 + k3, half_));
    axpy(out, dt / 6.0, k4);
    return out;
  }

 private:
  static SpectralVector scale(SpectralVector v, const std::vector<double>& s) {
    for (auto& c : v)
      for (std::size_t i = 0; i < s.size(); ++i) c.coeffs[i] *= s[i];
    return v;
  }

  SolverParams params_;
  std::vector<double> half_;
  std::vector<double> full_;
};

void guard(const SolverState& next, const SolverState& prev) {
  if (!std::isfinite(next.e_alpha) || next.e_alpha > 10.0 * next.e_alpha0) {
    throw InstabilityError("solver: E_alpha exceeded 10 E_alpha0 at t = " + std::to_string(next.t) +
                               " (numerical instability)",
                           prev.t);
  }
}

}  // namespace

SolverState step_integrating_factor(const SolverState& state, const SolverParams& params) {
  params.validate();
  IntegratingFactorRk4 rk(state.u[0].grid, params);
  SolverState next = make_state(rk.advance(state.u), state.t + params.dt, params.filter.alpha, state.e_alpha0);
  guard(next, state);
  return next;
}

Trajectory integrate(const SolverState& initial, const SolverParams& params, int keep_every) {
  params.validate();
  const long steps = params.t_end == 0.0 ? 0 : std::max(1L, std::lround(params.t_end / params.dt));
  SolverParams p = params;
  if (steps > 0) p.dt = params.t_end / static_cast<double>(steps);
  IntegratingFactorRk4 rk(initial.u[0].grid, p);

  Trajectory traj;
  traj.nu = p.nu;
  traj.alpha = p.filter.alpha;
  traj.e_alpha0 = initial.e_alpha0;
  traj.samples.push_back({initial.t, initial.diag, initial.u});

  SolverState state = initial;
  for (long s = 1; s <= steps; ++s) {
    SolverState next = make_state(rk.advance(state.u), initial.t + s * p.dt, p.filter.alpha, initial.e_alpha0);
    guard(next, state);
    state = std::move(next);
    const bool keep = s == steps || (keep_every > 0 && s % keep_every == 0);
    traj.samples.push_back({state.t, state.diag, keep ? std::optional<SpectralVector>(state.u) : std::nullopt});
  }
  return traj;
}

}  // namespace bardina
