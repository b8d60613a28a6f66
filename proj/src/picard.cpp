#include "bardina/picard.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "bardina/norms.hpp"
#include "bardina/operators.hpp"

namespace bardina {

double tau_max(double sigma, double nu, double alpha, double c_pic) {
  if (!(sigma > 0.0) || !(nu > 0.0) || !(alpha > 0.0) || !(c_pic > 0.0)) {
    throw std::invalid_argument("tau_max: all arguments must be > 0");
  }
  return nu * std::pow(alpha, 6) / (4.0 * c_pic * c_pic * sigma);
}

double tau_lip(double e0, double nu, double alpha, double c_pic) {
  const double tm = tau_max(e0, nu, alpha, c_pic);
  return std::min(nu * std::pow(alpha, 4) / (16.0 * c_pic * c_pic * e0), tm);
}

const char* to_string(PicardStatus s) {
  switch (s) {
    case PicardStatus::converged: return "converged";
    case PicardStatus::max_iterations: return "max_iterations";
    case PicardStatus::diverged: return "diverged";
  }
  return "unknown";
}

double PicardRun::max_ratio() const {
  return ratios.empty() ? 0.0 : *std::max_element(ratios.begin(), ratios.end());
}

double PicardRun::max_energy() const {
  return max_energies.empty() ? 0.0 : *std::max_element(max_energies.begin(), max_energies.end());
}

namespace {

// 3-point Gauss-Legendre on [-1, 1].
constexpr std::array<double, 3> kGaussNodes{-0.7745966692414834, 0.0, 0.7745966692414834};
constexpr std::array<double, 3> kGaussWeights{5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};

std::vector<double> symbol(const GridSpec& g, double nu, double t) {
  std::vector<double> s(g.modes());
  for_each_mode(g, [&](std::size_t i, const Wavevector& k) { s[i] = std::exp(-nu * k.norm2() * t); });
  return s;
}

SpectralVector scaled(SpectralVector v, const std::vector<double>& s) {
  for (auto& c : v)
    for (std::size_t i = 0; i < s.size(); ++i) c.coeffs[i] *= s[i];
  return v;
}

// Cubic Lagrange interpolation of mesh values at time `t` (uniform spacing h).
SpectralVector interpolate(const std::vector<SpectralVector>& mesh, double h, double t) {
  const int last = static_cast<int>(mesh.size()) - 1;
  const int panel = std::clamp(static_cast<int>(std::floor(t / h)), 0, last - 1);
  const int start = std::clamp(panel - 1, 0, last - 3);
  const double x = t / h - start;
  std::array<double, 4> w;
  for (int a = 0; a < 4; ++a) {
    double l = 1.0;
    for (int b = 0; b < 4; ++b)
      if (b != a) l *= (x - b) / static_cast<double>(a - b);
    w[a] = l;
  }
  SpectralVector out = zeros_like(mesh[0]);
  for (int a = 0; a < 4; ++a) axpy(out, w[a], mesh[start + a]);
  return out;
}

}  // namespace

PicardRun picard_iterate(const SpectralVector& u_init, const SolverParams& params, const PicardOptions& opts) {
  params.validate();
  if (!(opts.tau > 0.0)) throw std::invalid_argument("picard_iterate: tau must be > 0");
  if (opts.panels < 3) throw std::invalid_argument("picard_iterate: need at least 3 time panels");
  if (opts.n_max < 1) throw std::invalid_argument("picard_iterate: n_max must be >= 1");

  const GridSpec& g = u_init[0].grid;
  const double alpha = params.filter.alpha;
  const int m = opts.panels;
  const double h = opts.tau / m;

  PicardRun run;
  run.tau = opts.tau;
  run.e_alpha0 = energy_alpha(u_init, alpha);
  if (run.e_alpha0 > 0.0) {
    run.tau_max = tau_max(run.e_alpha0, params.nu, alpha, params.c_pic);
    run.tau_lip = tau_lip(run.e_alpha0, params.nu, alpha, params.c_pic);
  }
  run.tau_exceeds_lip = opts.tau > run.tau_lip * (1.0 + 1e-12);
  for (int j = 0; j <= m; ++j) run.times.push_back(j * h);

  const auto step = symbol(g, params.nu, h);
  std::array<std::vector<double>, 3> to_panel_end;
  for (int q = 0; q < 3; ++q) to_panel_end[q] = symbol(g, params.nu, 0.5 * h * (1.0 - kGaussNodes[q]));

  // Free evolution e^{nu t_j Laplacian} u_init.
  std::vector<SpectralVector> free(m + 1);
  free[0] = u_init;
  for (int j = 1; j <= m; ++j) free[j] = scaled(free[j - 1], step);

  auto max_energy = [&](const std::vector<SpectralVector>& it) {
    double e = 0.0;
    for (const auto& u : it) e = std::max(e, energy_alpha(u, alpha));
    return e;
  };

  std::vector<SpectralVector> prev(m + 1, u_init);
  run.max_energies.push_back(max_energy(prev));
  if (opts.keep_iterates) run.iterates.push_back(prev);

  int rising = 0;
  for (int n = 1; n <= opts.n_max; ++n) {
    std::vector<SpectralVector> next(m + 1);
    next[0] = u_init;
    SpectralVector duhamel = zeros_like(u_init);
    for (int j = 0; j < m; ++j) {
      duhamel = scaled(std::move(duhamel), step);
      for (int q = 0; q < 3; ++q) {
        const double s = j * h + 0.5 * h * (1.0 + kGaussNodes[q]);
        const SpectralVector g_s = projected_tendency(interpolate(prev, h, s), params);
        axpy(duhamel, 0.5 * h * kGaussWeights[q], scaled(g_s, to_panel_end[q]));
      }
      next[j + 1] = free[j + 1] + duhamel;
    }

    double d = 0.0;
    for (int j = 0; j <= m; ++j) d = std::max(d, norm_wmp(next[j] - prev[j], 2, Lp::two));
    if (!run.differences.empty()) {
      const double last = run.differences.back();
      run.ratios.push_back(last > 0.0 ? d / last : 0.0);
      rising = d > last ? rising + 1 : 0;
    }
    run.differences.push_back(d);
    run.max_energies.push_back(max_energy(next));
    if (opts.keep_iterates) run.iterates.push_back(next);
    prev = std::move(next);
    run.iterations = n;

    if (!std::isfinite(d) || rising >= 3) {
      run.status = PicardStatus::diverged;
      break;
    }
    if (d <= opts.tol * run.differences.front()) {
      run.status = PicardStatus::converged;
      break;
    }
  }
  run.solution = std::move(prev);
  return run;
}

std::vector<double> ExtensionRun::breakpoints() const {
  std::vector<double> t;
  for (const auto& s : segments) t.push_back(s.t_start);
  if (!segments.empty()) t.push_back(segments.back().t_start + segments.back().tau);
  return t;
}

ExtensionRun global_extension(const SpectralVector& u_init, const SolverParams& params, const ExtensionOptions& opts) {
  if (!(opts.t_total > 0.0)) throw std::invalid_argument("global_extension: T_total must be > 0");
  if (opts.max_segments < 1) throw std::invalid_argument("global_extension: need at least one segment");
  const double alpha = params.filter.alpha;
  ExtensionRun run;
  run.times.push_back(0.0);
  run.states.push_back(u_init);

  double e_n = energy_alpha(u_init, alpha);
  if (e_n == 0.0) {
    // Zero data stays zero; one trivial segment.
    const double span = std::isfinite(opts.t_total) ? opts.t_total : 0.0;
    run.segments.push_back({0.0, span, 0.0, 0, {}, 0.0, 1.0, PicardStatus::converged});
    run.times.push_back(span);
    run.states.push_back(u_init);
    return run;
  }

  double t = 0.0;
  double prev_tau = 0.0;
  SpectralVector u = u_init;
  while (static_cast<int>(run.segments.size()) < opts.max_segments && t < opts.t_total) {
    const double full = tau_lip(e_n, params.nu, alpha, params.c_pic);
    const double tau = std::min(full, opts.t_total - t);
    PicardOptions po = opts.picard;
    po.tau = tau;
    PicardRun pr = picard_iterate(u, params, po);
    if (pr.status == PicardStatus::diverged) {
      throw PicardDivergence("global_extension: Picard iteration diverged on segment starting at t = " +
                             std::to_string(t));
    }
    run.segments.push_back({t, tau, e_n, pr.iterations, pr.ratios, pr.max_ratio(), pr.max_energy() / e_n, pr.status});
    if (tau == full && prev_tau > 0.0 && full < prev_tau) run.tau_non_decreasing = false;
    prev_tau = tau == full ? full : prev_tau;
    for (std::size_t j = 1; j < pr.times.size(); ++j) {
      run.times.push_back(t + pr.times[j]);
      run.states.push_back(pr.solution[j]);
    }
    u = pr.solution.back();
    t += tau;
    const double e_next = energy_alpha(u, alpha);
    if (e_next > e_n) run.energy_non_increasing = false;
    e_n = e_next;
  }
  run.e_alpha_final = e_n;
  return run;
}

std::vector<CalibrationPoint> sweep_c_pic(const SpectralVector& u_init, const SolverParams& params,
                                          const PicardOptions& opts, std::span<const double> values) {
  std::vector<CalibrationPoint> out;
  const double e0 = energy_alpha(u_init, params.filter.alpha);
  for (double c : values) {
    SolverParams p = params;
    p.c_pic = c;
    PicardOptions po = opts;
    po.tau = tau_lip(e0, p.nu, p.filter.alpha, c);
    const PicardRun r = picard_iterate(u_init, p, po);
    const double er = r.max_energy() / e0;
    const bool ok = r.status == PicardStatus::converged && r.max_ratio() <= 0.5 && er <= 8.0;
    out.push_back({c, po.tau, r.max_ratio(), er, ok});
  }
  return out;
}

Calibration calibrate_c_pic(const SpectralVector& u_init, const SolverParams& params, const PicardOptions& opts,
                            double lo, double hi, int bisections) {
  if (!(lo > 0.0) || !(hi > lo)) throw std::invalid_argument("calibrate_c_pic: need 0 < lo < hi");
  Calibration cal;
  auto probe = [&](double c) {
    const std::array<double, 1> v{c};
    cal.history.push_back(sweep_c_pic(u_init, params, opts, v).front());
    return cal.history.back().ok;
  };
  if (!probe(hi)) throw std::runtime_error("calibrate_c_pic: upper bracket does not contract");
  for (int i = 0; i < bisections; ++i) {
    const double mid = std::sqrt(lo * hi);
    if (probe(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  cal.c_pic = hi;
  return cal;
}

}  // namespace bardina
