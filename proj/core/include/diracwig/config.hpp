#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diracwig/quadrature.hpp"
#include "diracwig/states.hpp"

namespace diracwig {

/// Flat run configuration. Physical keys stay unset unless given, so figure
/// scenarios can tell an override from a default and keep their own sweeps.
struct Config {
  std::optional<int> figure;
  std::optional<double> m;
  std::optional<double> kz2;
  std::optional<double> eB;
  std::optional<double> a;
  std::optional<std::string> symmetry;
  std::optional<int> n;
  std::optional<int> pol;
  std::optional<double> t_min;
  std::optional<double> t_max;
  int t_steps = 401;
  std::optional<double> t;  // snapshot time for `grid`
  std::optional<int> l;
  double epsilon = 1e-6;
  std::string state = "gaussian";     // gaussian | cat
  std::string quantity = "density";   // density | purity | concurrence
  std::string route = "analytic";     // analytic | grid
  std::string format = "csv";         // csv | json
  QuadratureSpec quad;
  std::optional<std::string> out;
  int threads = 0;
};

/// Recognised keys, in the order `defaults` prints them.
const std::vector<std::string>& config_keys();

/// Parses `value` into `key`. Throws ConfigError on unknown keys or bad values.
void apply_setting(Config& cfg, const std::string& key, const std::string& value);

/// `key = value` lines, `#` starts a comment, blank lines ignored.
std::map<std::string, std::string> parse_config_text(const std::string& text);
void apply_config_file(Config& cfg, const std::string& path);

/// Fallback values for the unset optional keys of single-state commands.
PhysParams physical_params(const Config& cfg);

/// Single state described by the config (state, pol, n, symmetry, a, l/epsilon).
StateSpec make_state(const Config& cfg);

/// Time samples: uniform in E_n t (given as phases) for Gaussian states,
/// uniform in t for cat states. Defaults cover [0, 2 pi] in phase and
/// [0, 2 pi / E_1] in t.
std::vector<double> time_samples(const Config& cfg, const StateSpec& state);

/// `key = value` listing of every default, with the time-axis conventions as comments.
std::string render_defaults();

}  // namespace diracwig
