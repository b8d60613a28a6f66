#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bardina/fft.hpp"
#include "bardina/norms.hpp"
#include "bardina/operators.hpp"
#include "bardina/random_fields.hpp"
#include "bardina/solver.hpp"
#include "oracles.hpp"

using namespace bardina;

namespace {
constexpr double kPi = std::numbers::pi;
double s_of(double k2, double alpha) { return 1.0 / (1.0 + alpha * alpha * k2); }
}  // namespace

TEST_CASE("transport term of the Taylor-Green field in closed form") {
  const GridSpec g{32, 2.0 * kPi};
  const double alpha = 0.25;
  const VectorField u = taylor_green(g);
  const VectorField b = nonlinear_term(u, alpha);
  const double s4 = s_of(4.0, alpha), s8 = s_of(8.0, alpha);
  const VectorField ref(ScalarField::from_function(g, [=](double x, double, double z) {
                          return 0.25 * std::sin(2 * x) * (s4 + s8 * std::cos(2 * z));
                        }),
                        ScalarField::from_function(g, [=](double, double y, double z) {
                          return 0.25 * std::sin(2 * y) * (s4 + s8 * std::cos(2 * z));
                        }),
                        ScalarField(g));
  CHECK(oracle::l2_diff(b, ref) <= 1e-13 * oracle::l2(ref));
}

TEST_CASE("pressure of the ABC flow in closed form") {
  const GridSpec g{16, 2.0 * kPi};
  const double alpha = 0.25;
  const ScalarField p = pressure_solve(abc_flow(g), alpha);
  const double s2 = s_of(2.0, alpha);
  const ScalarField ref = ScalarField::from_function(g, [=](double x, double y, double z) {
    return -s2 * (std::sin(z) * std::cos(y) + std::sin(x) * std::cos(z) + std::sin(y) * std::cos(x));
  });
  CHECK(oracle::max_abs_diff(p, ref) <= 1e-13);
}

TEST_CASE("B minus its projection is minus the pressure gradient") {
  const GridSpec g{32, 2.0 * kPi};
  SolverParams params;
  const VectorField u0 = random_solenoidal(g, 3, 6, -5.0 / 3.0);
  const SpectralVector u = transform_forward(u0);
  const SpectralVector b = nonlinear_term(u, params.filter.alpha);
  const SpectralVector pb = projected_tendency(u, params);  // -P B
  const SpectralVector grad_p = spectral::gradient(pressure_solve(u, params.filter.alpha));
  const SpectralVector resid = b + pb + grad_p;
  CHECK(std::sqrt(l2_squared(resid)) <= 1e-12 * std::sqrt(l2_squared(b)));
}

TEST_CASE("transport term is orthogonal to (1 - alpha^2 Laplacian) u") {
  const GridSpec g{32, 2.0 * kPi};
  const double alpha = 0.25;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const SpectralVector u = filter_spectral(transform_forward(random_solenoidal(g, seed, 8, 0.0)), FilterParams{alpha});
    const SpectralVector b = nonlinear_term(u, alpha);
    const SpectralVector w = u - (alpha * alpha) * spectral::laplacian(u);
    const double n22 = norm_wmp(u, 2, Lp::two);
    CHECK(std::abs(inner(b, w)) <= 1e-8 * n22 * n22 * n22);
  }
}

TEST_CASE("non-solenoidal input is rejected") {
  const GridSpec g{16, 2.0 * kPi};
  const VectorField v(ScalarField::from_function(g, [](double x, double, double) { return std::sin(x); }), ScalarField(g),
                      ScalarField(g));
  CHECK_THROWS_AS(nonlinear_term(v, 0.25), std::invalid_argument);
  CHECK_THROWS_AS(make_initial_state(v, SolverParams{}), std::invalid_argument);
}

TEST_CASE("linear stepping reproduces the heat semigroup exactly") {
  const GridSpec g{16, 2.0 * kPi};
  SolverParams p;
  p.nonlinear = false;
  p.dt = 0.1;
  p.t_end = 1.0;
  const SolverState st = make_initial_state(random_solenoidal(g, 4, 5, 0.0), p);
  const Trajectory tr = integrate(st, p);
  REQUIRE(tr.samples.back().u);
  const SpectralVector exact = heat_semigroup(st.u, p.nu, 1.0);
  CHECK(std::sqrt(l2_squared(*tr.samples.back().u - exact)) <= 1e-13 * std::sqrt(l2_squared(exact)));
  CHECK(tr.samples.size() == 11);
  CHECK(tr.samples.back().t == doctest::Approx(1.0));
}

TEST_CASE("ABC flow decays as e^{-nu t} under the full model") {
  const GridSpec g{16, 2.0 * kPi};
  SolverParams p;
  p.dt = 0.05;
  p.t_end = 1.0;
  const SolverState st = make_initial_state(abc_flow(g), p);
  const Trajectory tr = integrate(st, p);
  const SpectralVector exact = std::exp(-p.nu) * st.u;
  CHECK(std::sqrt(l2_squared(*tr.samples.back().u - exact)) <= 1e-12 * std::sqrt(l2_squared(exact)));
}

TEST_CASE("stepping keeps the field solenoidal and the energy decreasing") {
  const GridSpec g{16, 2.0 * kPi};
  SolverParams p;
  p.dt = 0.01;
  p.t_end = 0.2;
  const SolverState st = make_initial_state(taylor_green(g), p);
  const Trajectory tr = integrate(st, p, 5);
  int stored = 0;
  for (const auto& s : tr.samples) {
    if (!s.u) continue;
    ++stored;
    CHECK(is_solenoidal(*s.u));
  }
  CHECK(stored == 5);
  for (std::size_t i = 1; i < tr.samples.size(); ++i) {
    CHECK(tr.samples[i].diag.e_alpha(0.25) < tr.samples[i - 1].diag.e_alpha(0.25));
  }
}

TEST_CASE("zero end time gives the initial state only") {
  SolverParams p;
  p.t_end = 0.0;
  const SolverState st = make_initial_state(taylor_green(GridSpec{16, 2.0 * kPi}), p);
  const Trajectory tr = integrate(st, p);
  REQUIRE(tr.samples.size() == 1);
  CHECK(tr.samples[0].u);
  CHECK(tr.samples[0].t == 0.0);
}

TEST_CASE("solver parameter validation") {
  SolverParams p;
  p.nu = 0.0;
  CHECK_THROWS(p.validate());
  p = SolverParams{};
  p.dt = -1.0;
  CHECK_THROWS(p.validate());
}

TEST_CASE("blow-up under an oversized step is reported with the last stable time") {
  const GridSpec g{16, 2.0 * kPi};
  SolverParams p;
  p.dt = 0.5;
  p.t_end = 20.0;
  const SolverState st = make_initial_state(random_solenoidal(g, 6, 5, 0.0), p);
  const SpectralVector u = 60.0 * st.u;
  const SolverState big = make_state(u, 0.0, p.filter.alpha, energy_alpha(u, p.filter.alpha));
  bool thrown = false;
  try {
    (void)integrate(big, p);
  } catch (const InstabilityError& e) {
    thrown = true;
    CHECK(e.last_stable_time() >= 0.0);
    CHECK(e.last_stable_time() < p.t_end);
  }
  CHECK(thrown);
}
