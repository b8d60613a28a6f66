#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "bardina/estimates.hpp"
#include "bardina/fft.hpp"
#include "bardina/filter.hpp"
#include "bardina/operators.hpp"
#include "bardina/random_fields.hpp"
#include "oracles.hpp"

using namespace bardina;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("kernel mass matches the closed form") {
  for (double alpha : {0.05, 0.1, 0.5}) {
    for (double q : {0.1, 1.0, 3.0, 10.0, 20.0}) {
      CHECK(kernel_mass(q * alpha, alpha) == doctest::Approx(oracle::kernel_mass(q * alpha, alpha)).epsilon(1e-12));
    }
  }
  // Ball of radius 10 alpha holds 1 - 11 e^{-10}.
  CHECK(kernel_mass(1.0, 0.1) == doctest::Approx(1.0 - 11.0 * std::exp(-10.0)).epsilon(1e-12));
}

TEST_CASE("kernel values, homogeneity and the singular point") {
  const double alpha = 0.3;
  const double r = 0.7;
  CHECK(kernel_radial(r, alpha) == doctest::Approx(std::exp(-r / alpha) / (4.0 * kPi * alpha * alpha * r)));
  CHECK(kernel_radial(2.0 * r, 2.0 * alpha) == doctest::Approx(kernel_radial(r, alpha) / 8.0).epsilon(1e-14));
  CHECK(kernel_eval({0.3, -0.2, 0.6}, alpha) == doctest::Approx(kernel_radial(0.7, alpha)).epsilon(1e-14));
  CHECK_THROWS_AS(kernel_radial(0.0, alpha), std::domain_error);
  CHECK_THROWS_AS(kernel_eval({0.0, 0.0, 0.0}, alpha), std::domain_error);

  const std::vector<double> radii{0.1, 1.0, 3.0};
  const auto rows = kernel_table(alpha, radii);
  REQUIRE(rows.size() == 3);
  CHECK(rows[1].value == doctest::Approx(kernel_radial(1.0, alpha)));
  CHECK(rows[2].mass == doctest::Approx(oracle::kernel_mass(3.0, alpha)).epsilon(1e-12));
  const std::vector<double> bad{0.0, 1.0};
  CHECK_THROWS(kernel_table(alpha, bad));
}

TEST_CASE("filter parameter validation") {
  CHECK_THROWS(FilterParams{0.0}.validate());
  CHECK_THROWS(FilterParams{1.5}.validate());
  CHECK_NOTHROW(FilterParams{0.3}.validate_for(GridSpec{32, 2.0 * kPi}));
  CHECK_THROWS(FilterParams{0.4}.validate_for(GridSpec{32, 2.0 * kPi}));
}

TEST_CASE("spectral filter inverts the Helmholtz operator") {
  const GridSpec g{32, 2.0 * kPi};
  const FilterParams p{0.25};
  const ScalarField mode = ScalarField::from_function(g, [](double x, double y, double) { return std::sin(2 * x + y); });
  const ScalarField bar = filter_spectral(mode, p);
  CHECK(oracle::max_abs_diff(bar, (1.0 / (1.0 + 0.0625 * 5.0)) * mode) <= 1e-14);

  const ScalarField f = random_band_limited(g, 8, 0, 15, -1.0);
  const ScalarField fbar = filter_spectral(f, p);
  const ScalarField back = fbar - (p.alpha * p.alpha) * laplacian(fbar);
  CHECK(oracle::max_abs_diff(back, f) <= 1e-12);
}

TEST_CASE("convolution weights carry unit mass and agree with the spectral filter") {
  const GridSpec g{32, 2.0 * kPi};
  const FilterParams p{g.length / 20.0};
  const ScalarField w = convolution_weights(g, p);
  double mass = 0.0;
  for (double v : w.values) mass += v;
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));
  // Symmetric under axis permutation and reflection.
  CHECK(w(1, 2, 3) == w(3, 1, 2));
  CHECK(w(1, 2, 3) == w(g.n - 1, 2, g.n - 3));

  const ScalarField bump = gaussian_bump(g, g.length / 8.0);
  const double d = filter_discrepancy(bump, p);
  CHECK(d < 5e-3);
  CHECK(d > 0.0);
}

TEST_CASE("whole-space estimates hold on random fields") {
  const GridSpec g{32, 2.0 * kPi};
  const FilterParams p{0.25};
  for (std::uint64_t i = 0; i < 5; ++i) {
    const ScalarField f = random_band_limited(g, 100, i, 10, 0.0);
    for (const auto& r : check_estimates(f, p)) {
      INFO(r.name);
      CHECK(r.passed);
      CHECK(r.lhs <= r.rhs * (1.0 + kWrapSlack));
    }
  }
  CHECK_FALSE(make_report("x", 1.1, 1.0).passed);
  CHECK(make_report("x", 1.0 + 1e-7, 1.0).passed);
}

TEST_CASE("self-adjointness, Leibniz rule and commutation") {
  const GridSpec g{32, 2.0 * kPi};
  const FilterParams p{0.2};
  const ScalarField f = random_band_limited(g, 5, 0, 10);
  const ScalarField h = random_band_limited(g, 5, 1, 10);
  CHECK(check_self_adjoint(f, h, p).passed);
  CHECK(check_leibniz(f, h, p).passed);
  CHECK(check_derivative_commutation(f, p).passed);
  CHECK(check_double_filter(f, p).passed);
  const ScalarField wide = random_band_limited(g, 5, 2, 12);
  CHECK_THROWS_AS(check_leibniz(wide, h, p), std::domain_error);
}

TEST_CASE("convergence table on a smooth bump") {
  const GridSpec g{32, 2.0 * kPi};
  const ScalarField f = gaussian_bump(g, g.length / 4.0);
  const std::vector<double> alphas{0.2, 0.1, 0.05};
  const ConvergenceTable t = check_convergence_rate(f, alphas);
  CHECK(t.all_rows_passed());
  CHECK(t.slope == doctest::Approx(2.0).epsilon(0.05));
  CHECK_THROWS(check_convergence_rate(f, std::span<const double>{}));
}

TEST_CASE("elliptic gain ratio") {
  const GridSpec g{32, 2.0 * kPi};
  const FilterParams p{0.25};
  // One mode |k| = 1, s = 0: ||fbar||_{2,2} / (||f|| / alpha) = alpha (1 + 1 + 1) / (1 + alpha^2).
  const ScalarField f = ScalarField::from_function(g, [](double x, double, double) { return std::sin(x); });
  CHECK(elliptic_gain_ratio(f, p, 0) == doctest::Approx(0.25 * 3.0 / 1.0625).epsilon(1e-12));
  CHECK(elliptic_gain_sweep(g, p, 10, 3, 10) <= kEllipticConstant);
}
