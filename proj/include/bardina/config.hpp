#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>

#include "bardina/fields.hpp"
#include "bardina/grid.hpp"
#include "bardina/solver.hpp"

namespace bardina {

/// Invalid or unreadable run configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class IntegratorMode { if_rk4, picard };

struct RunConfig {
  GridSpec grid{32, 2.0 * 3.141592653589793};
  double nu = 0.05;
  double alpha = 0.25;

  IntegratorMode mode = IntegratorMode::if_rk4;
  double dt = 1e-3;
  double t_end = 1.0;
  int n_max = 40;
  double tol = 1e-10;
  int panels = 16;

  double c_pic = kCalibratedCPic;
  int segments = 3;

  /// taylor-green | random | beltrami | zero
  std::string kind = "taylor-green";
  std::uint64_t seed = 1;
  double spectrum_slope = -5.0 / 3.0;
  int max_mode = 4;

  std::filesystem::path out_dir = "bardina-out";
  int sample_every = 100;

  /// Throws ConfigError naming the first violated invariant.
  void validate() const;
  SolverParams solver_params() const;
};

/// Parses `key = value` lines grouped under [grid], [physics], [integrator],
/// [picard], [initial_data] and [output]. Unknown sections or keys are errors.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::filesystem::path& path);
/// Canonical text form; parse_config(format_config(c)) reproduces c.
std::string format_config(const RunConfig& c);

/// Unfiltered, solenoidal initial velocity for the configured kind.
VectorField make_initial_field(const RunConfig& c);

const char* to_string(IntegratorMode m);

}  // namespace bardina
