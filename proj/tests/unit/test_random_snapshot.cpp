#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "bardina/fft.hpp"
#include "bardina/norms.hpp"
#include "bardina/operators.hpp"
#include "bardina/random_fields.hpp"
#include "bardina/snapshot.hpp"

using namespace bardina;

TEST_CASE("counter generator is a pure function of its key") {
  const CounterRng a(42), b(42), c(43);
  CHECK(a.bits(3, 7) == b.bits(3, 7));
  CHECK(a.bits(3, 7) != c.bits(3, 7));
  CHECK(a.bits(3, 7) != a.bits(3, 8));
  CHECK(a.bits(3, 7) != a.bits(4, 7));
  double mean = 0.0, var = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const double u = a.uniform(0, i);
    CHECK(u > 0.0);
    CHECK(u < 1.0);
    const double z = a.normal(1, i);
    mean += z;
    var += z * z;
  }
  CHECK(std::abs(mean / n) < 0.03);
  CHECK(std::abs(var / n - 1.0) < 0.05);
}

TEST_CASE("random band-limited fields") {
  const GridSpec g{32, 2.0};
  const ScalarField f = random_band_limited(g, 7, 0, 6, -5.0 / 3.0);
  const ScalarField h = random_band_limited(g, 7, 0, 6, -5.0 / 3.0);
  CHECK(f.values == h.values);
  CHECK(spectral::band_limit(transform_forward(f)) == 6);
  const double rms = norm_lp(f, Lp::two) / std::sqrt(g.volume());
  CHECK(rms == doctest::Approx(1.0).epsilon(1e-13));
  double mean = 0.0;
  for (double v : f.values) mean += v;
  CHECK(std::abs(mean) < 1e-10);
}

TEST_CASE("random solenoidal field is divergence-free") {
  const GridSpec g{16, 2.0 * std::numbers::pi};
  const VectorField u = random_solenoidal(g, 1, 4, 0.0);
  CHECK(max_divergence(u) <= 1e-12 * norm_lp(u, Lp::inf) * 4.0);
}

TEST_CASE("snapshot round trip and corruption checks") {
  const GridSpec g{8, 1.5};
  const VectorField u = random_solenoidal(g, 2, 2, 0.0);
  const auto dir = std::filesystem::temp_directory_path() / "bardina_snapshot_test";
  std::filesystem::create_directories(dir);
  write_snapshot(dir / "u.bin", u);
  const Snapshot s = read_snapshot(dir / "u.bin");
  CHECK(s.grid == g);
  REQUIRE(s.components.size() == 3);
  for (int c = 0; c < 3; ++c) CHECK(s.components[c].values == u[c].values);

  std::vector<const ScalarField*> comps{&u[0]};
  auto bytes = encode_snapshot(g, comps);
  CHECK(bytes.size() == 4 + 4 + 4 + 8 + 4 + 8 * g.points());
  CHECK(bytes[0] == 'B');
  CHECK(decode_snapshot(bytes).components[0].values == u[0].values);

  auto truncated = bytes;
  truncated.pop_back();
  CHECK_THROWS(decode_snapshot(truncated));
  auto trailing = bytes;
  trailing.push_back(0);
  CHECK_THROWS(decode_snapshot(trailing));
  auto magic = bytes;
  magic[0] = 'X';
  CHECK_THROWS(decode_snapshot(magic));
  auto version = bytes;
  version[4] = 9;
  CHECK_THROWS(decode_snapshot(version));
  CHECK_THROWS(read_snapshot(dir / "missing.bin"));
  std::filesystem::remove_all(dir);
}
