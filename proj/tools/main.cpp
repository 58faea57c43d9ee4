#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "diracwig/config.hpp"
#include "diracwig/errors.hpp"
#include "diracwig/report_io.hpp"
#include "diracwig/scenario.hpp"
#include "diracwig/validate.hpp"

namespace {

enum Exit { kOk = 0, kConfig = 1, kValidation = 2, kNumerical = 3 };

// Every config key doubles as a --key flag. Flags are collected as strings and
// applied after the config file, so they override it.
struct KeyFlags {
  std::map<std::string, std::optional<std::string>> values;
  std::optional<std::string> config_file;

  void attach(CLI::App* cmd, std::initializer_list<const char*> skip = {}) {
    cmd->add_option("--config", config_file, "key = value file; flags override its entries");
    for (const auto& key : diracwig::config_keys()) {
      bool skipped = false;
      for (const char* s : skip) skipped = skipped || key == s;
      if (skipped) continue;
      cmd->add_option("--" + key, values[key], "override '" + key + "'");
    }
  }

  diracwig::Config resolve() const {
    diracwig::Config cfg;
    if (config_file) diracwig::apply_config_file(cfg, *config_file);
    for (const auto& [key, value] : values) {
      if (value) diracwig::apply_setting(cfg, key, *value);
    }
    return cfg;
  }
};

const std::string& require_out(const diracwig::Config& cfg) {
  if (!cfg.out) throw diracwig::ConfigError("an output path is required (--out or 'out =')");
  return *cfg.out;
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
}

int run_figure(const KeyFlags& flags, int id) {
  diracwig::Config cfg = flags.resolve();
  if (id > 0) cfg.figure = id;
  if (!cfg.figure) throw diracwig::ConfigError("figure id required (--id or 'figure =')");
  const std::string& out = require_out(cfg);
  const diracwig::Scenario sc = diracwig::figure_scenario(*cfg.figure, cfg);
  const diracwig::FigureResult result = diracwig::run_figure(sc, cfg.threads);
  diracwig::write_figure(out, cfg.format, result, sc);
  print_warnings(result.warnings);
  std::cout << "figure " << *cfg.figure << ": " << result.rows.size() << " rows, " << result.rasters.size()
            << " rasters -> " << out << '\n';
  return kOk;
}

int run_grid(const KeyFlags& flags) {
  const diracwig::Config cfg = flags.resolve();
  const std::string& out = require_out(cfg);
  const diracwig::StateSpec state = diracwig::make_state(cfg);
  diracwig::Diagnostics diag;
  const diracwig::RasterPanel panel{diracwig::describe(state), state, cfg.t.value_or(0.0), cfg.quantity};
  const auto raster = diracwig::run_raster(panel, cfg.quad, cfg.threads, &diag);
  {
    std::ofstream file(out, std::ios::binary);
    if (!file) throw diracwig::ConfigError("cannot open output file " + out);
    if (cfg.format == "json") {
      diracwig::write_rasters_json(file, {raster});
    } else {
      diracwig::write_rasters_csv(file, {raster});
    }
  }
  diracwig::write_metadata(out, "grid", {panel.label, "t = " + diracwig::format_number(panel.t)}, diag.warnings);
  print_warnings(diag.warnings);
  std::cout << "grid " << cfg.quantity << ": " << raster.points.size() << " points -> " << out << '\n';
  return kOk;
}

int run_report(const KeyFlags& flags) {
  const diracwig::Config cfg = flags.resolve();
  const std::string& out = require_out(cfg);
  const diracwig::StateSpec state = diracwig::make_state(cfg);
  diracwig::Diagnostics diag;
  const diracwig::CurveCase curve{diracwig::describe(state), state, diracwig::time_samples(cfg, state)};
  const auto route = cfg.route == "grid" ? diracwig::Route::grid : diracwig::Route::analytic;
  const auto rows = diracwig::run_curve(curve, route, cfg.quad, cfg.threads, &diag);
  {
    std::ofstream file(out, std::ios::binary);
    if (!file) throw diracwig::ConfigError("cannot open output file " + out);
    if (cfg.format == "json") {
      diracwig::write_rows_json(file, rows);
    } else {
      diracwig::write_rows_csv(file, rows);
    }
  }
  std::vector<std::string> notes{curve.label, "route = " + cfg.route};
  if (std::string gap = diracwig::classical_gap_note(curve); !gap.empty()) notes.push_back(std::move(gap));
  diracwig::write_metadata(out, "report", notes, diag.warnings);
  print_warnings(diag.warnings);
  std::cout << "report: " << rows.size() << " rows -> " << out << '\n';
  return kOk;
}

int run_validate(const std::string& level, const std::string& fault, int threads) {
  diracwig::FaultInjection inject;
  if (fault == "a34") {
    inject.flip_a34 = true;
  } else if (!fault.empty()) {
    throw diracwig::ConfigError("unknown fault '" + fault + "' (expected a34)");
  }
  const auto report = diracwig::run_validate(diracwig::parse_validation_level(level), inject, threads);
  for (const auto& c : report.checks) std::cout << diracwig::format_check(c) << '\n';
  std::cout << (report.ok() ? "validation passed" : "validation FAILED") << '\n';
  return report.ok() ? kOk : kValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dirac spinor Wigner functions and spin-parity information quantifiers"};
  app.require_subcommand(1);

  KeyFlags figure_flags;
  int figure_id = 0;
  auto* figure = app.add_subcommand("figure", "reproduce the data behind one figure");
  figure->add_option("--id", figure_id, "figure id 1..8");
  figure_flags.attach(figure, {"figure"});

  KeyFlags grid_flags;
  auto* grid = app.add_subcommand("grid", "phase-space raster of density, purity or local concurrence");
  grid_flags.attach(grid, {"figure"});

  KeyFlags report_flags;
  auto* report = app.add_subcommand("report", "quantifier time series for one state");
  report_flags.attach(report, {"figure"});

  std::string level = "quick";
  std::string fault;
  int threads = 0;
  auto* validate = app.add_subcommand("validate", "run the invariant suites");
  validate->add_option("--level", level, "quick|full");
  validate->add_option("--inject-fault", fault, "corrupt a coefficient to exercise a failing suite (a34)");
  validate->add_option("--threads", threads, "worker threads (0: hardware concurrency)");

  auto* defaults = app.add_subcommand("defaults", "print every configuration default");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }

  try {
    if (*figure) return run_figure(figure_flags, figure_id);
    if (*grid) return run_grid(grid_flags);
    if (*report) return run_report(report_flags);
    if (*validate) return run_validate(level, fault, threads);
    if (*defaults) {
      std::cout << diracwig::render_defaults();
      return kOk;
    }
  } catch (const diracwig::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const diracwig::DomainError& e) {
    std::cerr << "invalid parameters: " << e.what() << '\n';
    return kConfig;
  } catch (const diracwig::ConvergenceError& e) {
    std::cerr << "numerical non-convergence: " << e.what() << '\n';
    return kNumerical;
  }
  return kConfig;
}
