#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "bardina/filter.hpp"
#include "bardina/kernels.hpp"
#include "bardina/random_fields.hpp"

using namespace bardina;
namespace sk = bardina::kernels::serial;
namespace pk = bardina::kernels::parallel;

namespace {

std::vector<double> sample(std::size_t count, std::uint64_t stream) {
  const CounterRng rng(77);
  std::vector<double> v(count);
  for (std::size_t i = 0; i < count; ++i) v[i] = rng.normal(stream, i);
  return v;
}

}  // namespace

TEST_CASE("parallel reductions match the serial reference") {
  const int n = 16;
  const auto a = sample(n * n * n, 0);
  const auto b = sample(n * n * n, 1);
  CHECK(pk::sum_abs_pow(a, 1, n) == doctest::Approx(sk::sum_abs_pow(a, 1)).epsilon(1e-13));
  CHECK(pk::sum_abs_pow(a, 2, n) == doctest::Approx(sk::sum_abs_pow(a, 2)).epsilon(1e-13));
  CHECK(pk::max_abs(a, n) == sk::max_abs(a));
  CHECK(pk::dot(a, b, n) == doctest::Approx(sk::dot(a, b)).epsilon(1e-12));

  std::vector<double> p1(a.size()), p2(a.size());
  sk::multiply(a, b, p1);
  pk::multiply(a, b, p2);
  CHECK(p1 == p2);

  std::vector<std::complex<double>> c1(a.size()), c2;
  for (std::size_t i = 0; i < a.size(); ++i) c1[i] = {a[i], b[i]};
  c2 = c1;
  sk::scale_modes(c1, b);
  pk::scale_modes(c2, b);
  CHECK(c1 == c2);
}

TEST_CASE("parallel convolution matches the serial reference") {
  const int n = 8;
  const auto w = sample(n * n * n, 2);
  const auto s = sample(n * n * n, 3);
  std::vector<double> o1(n * n * n), o2(n * n * n);
  sk::convolve_periodic(n, w, s, 0.5, o1);
  pk::convolve_periodic(n, w, s, 0.5, o2);
  for (std::size_t i = 0; i < o1.size(); ++i) CHECK(o2[i] == doctest::Approx(o1[i]).epsilon(1e-12));

  // A unit impulse reproduces the shifted weights.
  std::vector<double> delta(n * n * n, 0.0);
  delta[(2 * n + 1) * n + 3] = 1.0;
  pk::convolve_periodic(n, w, delta, 1.0, o2);
  for (int z = 0; z < n; ++z)
    for (int y = 0; y < n; ++y)
      for (int x = 0; x < n; ++x) {
        const int wi = (((z - 2 + n) % n) * n + (y - 1 + n) % n) * n + (x - 3 + n) % n;
        CHECK(o2[(z * n + y) * n + x] == w[wi]);
      }
}

TEST_CASE("parallel results are bitwise identical for every thread cap") {
  const int n = 16;
  const auto a = sample(n * n * n, 4);
  const auto w = sample(n * n * n, 5);
  kernels::set_thread_cap(1);
  const double s1 = pk::sum_abs_pow(a, 2, n);
  const double d1 = pk::dot(a, w, n);
  std::vector<double> c1(a.size());
  pk::convolve_periodic(n, w, a, 1.0, c1);
  for (int threads : {2, 3, 4}) {
    kernels::set_thread_cap(threads);
    CHECK(pk::sum_abs_pow(a, 2, n) == s1);
    CHECK(pk::dot(a, w, n) == d1);
    std::vector<double> c(a.size());
    pk::convolve_periodic(n, w, a, 1.0, c);
    CHECK(c == c1);
  }
  kernels::set_thread_cap(0);
}
