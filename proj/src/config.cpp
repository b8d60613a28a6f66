#include "bardina/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "bardina/random_fields.hpp"

namespace bardina {

namespace pt = boost::property_tree;

namespace {

const std::map<std::string, std::set<std::string>> kSchema{
    {"grid", {"N", "L"}},
    {"physics", {"nu", "alpha"}},
    {"integrator", {"mode", "dt", "t_end", "n_max", "tol", "panels"}},
    {"picard", {"C_pic", "segments"}},
    {"initial_data", {"kind", "seed", "spectrum_slope", "max_mode"}},
    {"output", {"dir", "sample_every"}},
};

template <class T>
void read(const pt::ptree& tree, const std::string& key, T& out) {
  const auto node = tree.get_child_optional(pt::ptree::path_type(key, '.'));
  if (!node) return;
  try {
    out = node->get_value<T>();
  } catch (const pt::ptree_bad_data&) {
    throw ConfigError("config: cannot parse '" + node->data() + "' for " + key);
  }
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError("config: " + what);
}

}  // namespace

const char* to_string(IntegratorMode m) { return m == IntegratorMode::picard ? "picard" : "if-rk4"; }

void RunConfig::validate() const {
  require(grid.n >= 8 && (grid.n & (grid.n - 1)) == 0, "grid.N must be a power of two >= 8");
  require(grid.length > 0.0, "grid.L must be > 0");
  require(nu > 0.0, "physics.nu must be > 0");
  require(alpha > 0.0 && alpha <= 1.0, "physics.alpha must lie in (0, 1]");
  require(alpha <= grid.length / 20.0, "physics.alpha must be <= L/20");
  require(dt > 0.0, "integrator.dt must be > 0");
  require(t_end >= 0.0, "integrator.t_end must be >= 0");
  require(n_max >= 1, "integrator.n_max must be >= 1");
  require(tol > 0.0, "integrator.tol must be > 0");
  require(panels >= 3, "integrator.panels must be >= 3");
  require(c_pic > 0.0, "picard.C_pic must be > 0");
  require(segments >= 1, "picard.segments must be >= 1");
  require(kind == "taylor-green" || kind == "random" || kind == "beltrami" || kind == "zero",
          "initial_data.kind must be taylor-green, random, beltrami or zero");
  require(max_mode >= 1 && 3 * max_mode < grid.n, "initial_data.max_mode must satisfy 1 <= 3 max_mode < N");
  require(sample_every >= 1, "output.sample_every must be >= 1");
}

SolverParams RunConfig::solver_params() const {
  SolverParams p;
  p.nu = nu;
  p.filter = FilterParams{alpha};
  p.dt = dt;
  p.t_end = t_end;
  p.c_pic = c_pic;
  return p;
}

RunConfig parse_config(const std::string& text) {
  pt::ptree tree;
  std::istringstream in(text);
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("config: ") + e.message() + " at line " + std::to_string(e.line()));
  }
  for (const auto& [section, body] : tree) {
    const auto it = kSchema.find(section);
    require(it != kSchema.end() && body.data().empty(), "unknown section or top-level key '" + section + "'");
    for (const auto& [key, value] : body) {
      require(it->second.count(key) == 1, "unknown key '" + section + "." + key + "'");
    }
  }

  RunConfig c;
  read(tree, "grid.N", c.grid.n);
  read(tree, "grid.L", c.grid.length);
  read(tree, "physics.nu", c.nu);
  read(tree, "physics.alpha", c.alpha);
  std::string mode = to_string(c.mode);
  read(tree, "integrator.mode", mode);
  require(mode == "if-rk4" || mode == "picard", "integrator.mode must be if-rk4 or picard");
  c.mode = mode == "picard" ? IntegratorMode::picard : IntegratorMode::if_rk4;
  read(tree, "integrator.dt", c.dt);
  read(tree, "integrator.t_end", c.t_end);
  read(tree, "integrator.n_max", c.n_max);
  read(tree, "integrator.tol", c.tol);
  read(tree, "integrator.panels", c.panels);
  read(tree, "picard.C_pic", c.c_pic);
  read(tree, "picard.segments", c.segments);
  read(tree, "initial_data.kind", c.kind);
  read(tree, "initial_data.seed", c.seed);
  read(tree, "initial_data.spectrum_slope", c.spectrum_slope);
  read(tree, "initial_data.max_mode", c.max_mode);
  std::string dir = c.out_dir.string();
  read(tree, "output.dir", dir);
  c.out_dir = dir;
  read(tree, "output.sample_every", c.sample_every);
  c.validate();
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

std::string format_config(const RunConfig& c) {
  std::ostringstream o;
  o << std::setprecision(17);
  o << "[grid]\nN = " << c.grid.n << "\nL = " << c.grid.length << "\n\n";
  o << "[physics]\nnu = " << c.nu << "\nalpha = " << c.alpha << "\n\n";
  o << "[integrator]\nmode = " << to_string(c.mode) << "\ndt = " << c.dt << "\nt_end = " << c.t_end
    << "\nn_max = " << c.n_max << "\ntol = " << c.tol << "\npanels = " << c.panels << "\n\n";
  o << "[picard]\nC_pic = " << c.c_pic << "\nsegments = " << c.segments << "\n\n";
  o << "[initial_data]\nkind = " << c.kind << "\nseed = " << c.seed << "\nspectrum_slope = " << c.spectrum_slope
    << "\nmax_mode = " << c.max_mode << "\n\n";
  o << "[output]\ndir = " << c.out_dir.string() << "\nsample_every = " << c.sample_every << "\n";
  return o.str();
}

VectorField make_initial_field(const RunConfig& c) {
  if (c.kind == "taylor-green") return taylor_green(c.grid);
  if (c.kind == "random") return random_solenoidal(c.grid, c.seed, c.max_mode, c.spectrum_slope);
  if (c.kind == "beltrami") return abc_flow(c.grid);
  if (c.kind == "zero") return VectorField(c.grid);
  throw ConfigError("config: unknown initial_data.kind '" + c.kind + "'");
}

}  // namespace bardina
