#include "diracwig/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "diracwig/errors.hpp"
#include "diracwig/report_io.hpp"

namespace diracwig {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  double out = 0.0;
  std::istringstream in(v);
  in >> out;
  if (in.fail() || !in.eof() || !std::isfinite(out)) throw ConfigError("bad number for '" + key + "': " + v);
  return out;
}

int to_int(const std::string& key, const std::string& v) {
  int out = 0;
  const auto* end = v.data() + v.size();
  const auto res = std::from_chars(v.data(), end, out);
  if (res.ec != std::errc{} || res.ptr != end) throw ConfigError("bad integer for '" + key + "': " + v);
  return out;
}

std::string one_of(const std::string& key, const std::string& v, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (v == a) return v;
  }
  std::string msg = "bad value for '" + key + "': " + v + " (expected";
  for (const char* a : allowed) msg += std::string(" ") + a;
  throw ConfigError(msg + ")");
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys{
      "figure", "state", "m",     "kz2",   "eB",    "a",     "symmetry", "n",       "pol",    "l",
      "epsilon", "t_min", "t_max", "t_steps", "t",   "s_min", "s_max",    "k_min",   "k_max",  "ns",
      "nk",     "rule",  "quantity", "route", "format", "threads", "out"};
  return keys;
}

void apply_setting(Config& cfg, const std::string& key, const std::string& raw) {
  const std::string v = trim(raw);
  if (key == "figure") {
    const int id = to_int(key, v);
    if (id < 1 || id > 8) throw ConfigError("figure id must be 1..8");
    cfg.figure = id;
  } else if (key == "state") {
    cfg.state = one_of(key, v, {"gaussian", "cat"});
  } else if (key == "m") {
    cfg.m = to_double(key, v);
  } else if (key == "kz2") {
    cfg.kz2 = to_double(key, v);
  } else if (key == "eB") {
    cfg.eB = to_double(key, v);
  } else if (key == "a") {
    cfg.a = to_double(key, v);
  } else if (key == "symmetry") {
    cfg.symmetry = to_string(parse_symmetry(v));
  } else if (key == "n") {
    cfg.n = to_int(key, v);
  } else if (key == "pol") {
    cfg.pol = to_int(key, v);
  } else if (key == "l") {
    cfg.l = to_int(key, v);
  } else if (key == "epsilon") {
    cfg.epsilon = to_double(key, v);
    if (!(cfg.epsilon > 0.0 && cfg.epsilon < 1.0)) throw ConfigError("epsilon must lie in (0, 1)");
  } else if (key == "t_min") {
    cfg.t_min = to_double(key, v);
  } else if (key == "t_max") {
    cfg.t_max = to_double(key, v);
  } else if (key == "t_steps") {
    cfg.t_steps = to_int(key, v);
    if (cfg.t_steps < 1) throw ConfigError("t_steps must be >= 1");
  } else if (key == "t") {
    cfg.t = to_double(key, v);
  } else if (key == "s_min") {
    cfg.quad.s_min = to_double(key, v);
  } else if (key == "s_max") {
    cfg.quad.s_max = to_double(key, v);
  } else if (key == "k_min") {
    cfg.quad.k_min = to_double(key, v);
  } else if (key == "k_max") {
    cfg.quad.k_max = to_double(key, v);
  } else if (key == "ns") {
    cfg.quad.ns = to_int(key, v);
  } else if (key == "nk") {
    cfg.quad.nk = to_int(key, v);
  } else if (key == "rule") {
    cfg.quad.rule = parse_quad_rule(v);
  } else if (key == "quantity") {
    cfg.quantity = one_of(key, v, {"density", "purity", "concurrence"});
  } else if (key == "route") {
    cfg.route = one_of(key, v, {"analytic", "grid"});
  } else if (key == "format") {
    cfg.format = one_of(key, v, {"csv", "json"});
  } else if (key == "threads") {
    cfg.threads = to_int(key, v);
  } else if (key == "out") {
    if (v.empty()) throw ConfigError("out must not be empty");
    cfg.out = v;
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
}

std::map<std::string, std::string> parse_config_text(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) + ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
    out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

void apply_config_file(Config& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  for (const auto& [key, value] : parse_config_text(buf.str())) apply_setting(cfg, key, value);
}

PhysParams physical_params(const Config& cfg) {
  PhysParams p = PhysParams::from_kz2(cfg.m.value_or(1.0), cfg.kz2.value_or(1.0), cfg.eB.value_or(1.0));
  p.validate();
  return p;
}

StateSpec make_state(const Config& cfg) {
  const PhysParams p = physical_params(cfg);
  if (cfg.state == "gaussian") {
    GaussianSpec g{cfg.pol.value_or(1), cfg.n.value_or(1), p};
    g.validate();
    return g;
  }
  const Symmetry sym = parse_symmetry(cfg.symmetry.value_or("S"));
  const double a = cfg.a.value_or(1.0);
  if (!(a > 0.0)) throw ConfigError("cat separation a must be positive");
  CatSpec c = cfg.l ? CatSpec{} : CatSpec::with_auto_l(sym, a, p, cfg.epsilon);
  c.sym = sym;
  c.a = a;
  c.p = p;
  c.pol = cfg.pol.value_or(1);
  if (cfg.l) c.l = *cfg.l;
  c.warn_threshold = cfg.epsilon;
  c.validate();
  return c;
}

std::vector<double> time_samples(const Config& cfg, const StateSpec& state) {
  double scale = 1.0;
  double lo = 0.0;
  double hi = 0.0;
  if (const auto* g = std::get_if<GaussianSpec>(&state)) {
    // Gaussian axes are given as phases E_n t.
    scale = 1.0 / level_data(g->n, g->p).E;
    lo = cfg.t_min.value_or(0.0);
    hi = cfg.t_max.value_or(2.0 * std::numbers::pi);
  } else {
    const CatSpec& c = std::get<CatSpec>(state);
    lo = cfg.t_min.value_or(0.0);
    hi = cfg.t_max.value_or(2.0 * std::numbers::pi / level_data(1, c.p).E);
  }
  if (hi < lo) throw ConfigError("t_max must not be below t_min");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(cfg.t_steps));
  if (cfg.t_steps == 1) {
    out.push_back(lo * scale);
    return out;
  }
  for (int i = 0; i < cfg.t_steps; ++i) {
    out.push_back((lo + (hi - lo) * i / (cfg.t_steps - 1)) * scale);
  }
  return out;
}

std::string render_defaults() {
  const Config cfg;
  std::ostringstream o;
  o.precision(17);
  o << "# diracwig defaults; any key may appear in a config file or as --key value\n";
  o << "# figure = 1..8 (figure command only; figure sweeps replace unset physical keys)\n";
  o << "state = " << cfg.state << "\n";
  o << "m = 1\nkz2 = 1\neB = 1\n";
  o << "a = 1\nsymmetry = S\n";
  o << "n = 1\npol = 1\n";
  o << "# l unset: smallest l with truncation error below epsilon\n";
  o << "epsilon = " << format_number(cfg.epsilon) << "\n";
  o << "# Gaussian states: t_min/t_max are phases E_n t, default 0 .. 2pi\n";
  o << "# cat states: t_min/t_max are times, default 0 .. 2pi/E_1\n";
  o << "t_steps = " << cfg.t_steps << "\n";
  o << "# t: snapshot time for grid (default 0)\n";
  o << "s_min = " << cfg.quad.s_min << "\ns_max = " << cfg.quad.s_max << "\n";
  o << "k_min = " << cfg.quad.k_min << "\nk_max = " << cfg.quad.k_max << "\n";
  o << "ns = " << cfg.quad.ns << "\nnk = " << cfg.quad.nk << "\n";
  o << "rule = " << to_string(cfg.quad.rule) << "\n";
  o << "quantity = " << cfg.quantity << "\n";
  o << "route = " << cfg.route << "\n";
  o << "format = " << cfg.format << "\n";
  o << "threads = " << cfg.threads << "  # 0: hardware concurrency\n";
  o << "# out: output path (required by figure, grid, report)\n";
  return o.str();
}

}  // namespace diracwig
