#include "diracwig/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "diracwig/errors.hpp"
#include "parallel.hpp"

namespace diracwig {

namespace {

template <typename T>
std::vector<T> sweep(const std::optional<T>& value, std::vector<T> fallback) {
  if (value) return {*value};
  return fallback;
}

Config with_physics(const Config& cfg, double m, double kz2, double eB) {
  Config c = cfg;
  c.m = m;
  c.kz2 = kz2;
  c.eB = eB;
  return c;
}

double kz2_of(const PhysParams& p) { return p.kz * p.kz; }

std::string format_gap(double x) {
  std::ostringstream o;
  o.precision(6);
  o << std::scientific << x;
  return o.str();
}

}  // namespace

std::string describe(const StateSpec& state) {
  std::ostringstream o;
  const PhysParams& p = params_of(state);
  if (const auto* g = std::get_if<GaussianSpec>(&state)) {
    o << "gaussian pol=" << g->pol << " n=" << g->n;
  } else {
    const CatSpec& c = std::get<CatSpec>(state);
    o << "cat " << to_string(c.sym) << " a=" << c.a << " l=" << c.l;
  }
  o << " m=" << p.m << " kz2=" << kz2_of(p) << " eB=" << p.eB;
  return o.str();
}

Scenario figure_scenario(int id, const Config& cfg) {
  Scenario sc;
  sc.figure = id;
  sc.window = cfg.quad;
  sc.route = cfg.route == "grid" ? Route::grid : Route::analytic;
  const double pi = std::numbers::pi;

  auto gaussian = [&](int pol, int n, double m, double kz2, double eB) {
    Config c = with_physics(cfg, m, kz2, eB);
    c.state = "gaussian";
    c.pol = pol;
    c.n = n;
    return make_state(c);
  };
  auto cat = [&](const std::string& sym, double a, double m, double kz2, double eB) {
    Config c = with_physics(cfg, m, kz2, eB);
    c.state = "cat";
    c.symmetry = sym;
    c.a = a;
    c.pol = 1;
    return make_state(c);
  };
  auto add_panels = [&](const StateSpec& state, const std::vector<double>& phases, const std::string& quantity) {
    const int n = std::holds_alternative<GaussianSpec>(state) ? std::get<GaussianSpec>(state).n : 1;
    const double E = level_data(n, params_of(state)).E;
    for (double phase : phases) {
      sc.panels.push_back(RasterPanel{describe(state), state, phase / E, quantity});
    }
  };
  auto add_curve = [&](const StateSpec& state) {
    sc.curves.push_back(CurveCase{describe(state), state, time_samples(cfg, state)});
  };
  auto phases = [&](std::vector<double> fallback) {
    // A snapshot override `t` is read as a phase E_n t for Gaussian panels.
    if (cfg.t) return std::vector<double>{*cfg.t};
    return fallback;
  };

  switch (id) {
    case 1:
      for (int pol : sweep(cfg.pol, {2, 1})) {
        for (double m : sweep(cfg.m, {1.0}))
          for (double kz2 : sweep(cfg.kz2, {1.0}))
            for (double eB : sweep(cfg.eB, {1.0}))
              add_panels(gaussian(pol, cfg.n.value_or(1), m, kz2, eB), phases({0.0, pi / 2.0}), "density");
      }
      sc.notes.push_back("panels at E_1 t = 0 and pi/2; value = Tr[W gamma0]/sqrt(eB)");
      break;
    case 2:
      for (double m : sweep(cfg.m, {1.0}))
        for (double kz2 : sweep(cfg.kz2, {1.0}))
          for (double eB : sweep(cfg.eB, {1.0}))
            add_panels(gaussian(cfg.pol.value_or(1), cfg.n.value_or(1), m, kz2, eB),
                       phases({0.0, pi / 4.0, pi / 2.0}), "purity");
      sc.notes.push_back("panels at E_1 t = j pi/4, j = 0, 1, 2; value = Tr[(W gamma0)^2]/eB");
      break;
    case 3:
      for (double kz2 : sweep(cfg.kz2, {0.0, 10.0, 100.0}))
        for (double eB : sweep(cfg.eB, {0.1, 1.0, 10.0}))
          for (double m : sweep(cfg.m, {1.0})) add_curve(gaussian(cfg.pol.value_or(1), cfg.n.value_or(1), m, kz2, eB));
      sc.notes.push_back("time axis uniform in E_n t");
      break;
    case 4:
      for (int n : sweep(cfg.n, {1, 5}))
        for (double m : sweep(cfg.m, {1.0}))
          for (double kz2 : sweep(cfg.kz2, {1.0}))
            for (double eB : sweep(cfg.eB, {1.0}))
              add_panels(gaussian(cfg.pol.value_or(1), n, m, kz2, eB), phases({pi / 8.0, pi / 4.0, pi / 2.0}),
                         "concurrence");
      sc.notes.push_back("panels at E_n t = pi/j, j = 8, 4, 2; value = C^2[W](s, kx)/eB");
      break;
    case 5:
      for (double eB : sweep(cfg.eB, {1.0, 3.0}))
        for (double kz2 : sweep(cfg.kz2, {0.01, 10.0}))
          for (double m : sweep(cfg.m, {1.0})) add_curve(gaussian(cfg.pol.value_or(1), cfg.n.value_or(1), m, kz2, eB));
      sc.notes.push_back("time axis uniform in E_n t; EoF and chi columns carry the plotted curves");
      break;
    case 6: {
      const std::vector<std::string> syms = cfg.symmetry ? std::vector<std::string>{*cfg.symmetry}
                                                         : std::vector<std::string>{"S", "A"};
      for (const auto& sym : syms)
        for (double a : sweep(cfg.a, {1.0, 5.0}))
          for (double m : sweep(cfg.m, {1.0}))
            for (double kz2 : sweep(cfg.kz2, {1.0}))
              for (double eB : sweep(cfg.eB, {1.0})) {
                const StateSpec s = cat(sym, a, m, kz2, eB);
                sc.panels.push_back(RasterPanel{describe(s), s, cfg.t.value_or(0.0), "density"});
              }
      sc.notes.push_back("cat panels at t = 0 unless t is given; value = Tr[W gamma0]/sqrt(eB)");
      break;
    }
    case 7:
    case 8: {
      const std::vector<std::string> syms = cfg.symmetry ? std::vector<std::string>{*cfg.symmetry}
                                                         : std::vector<std::string>{"S", "A"};
      for (double a : sweep(cfg.a, {1.0, 5.0}))
        for (const auto& sym : syms)
          for (double eB : sweep(cfg.eB, {0.1, 1.0}))
            for (double m : sweep(cfg.m, {1.0}))
              for (double kz2 : sweep(cfg.kz2, {1.0})) add_curve(cat(sym, a, m, kz2, eB));
      sc.notes.push_back("cat time axis uniform in t over [0, 2 pi / E_1] of each parameter set unless t_min/t_max given");
      sc.notes.push_back("kz2 defaults to 1 (not fixed by the figure caption)");
      sc.notes.push_back(id == 7 ? "plotted column: M" : "plotted column: EoF");
      break;
    }
    default:
      throw ConfigError("figure id must be 1..8");
  }
  return sc;
}

const std::vector<std::string>& report_row_fields() {
  static const std::vector<std::string> fields = [] {
    std::vector<std::string> f{"label", "family", "pol", "n", "symmetry", "a", "l", "m", "kz2", "eB"};
    for (const auto& name : info_report_fields()) f.push_back(name);
    return f;
  }();
  return fields;
}

double raster_value(const std::string& quantity, const WignerValue& W, double eB) {
  if (quantity == "density") return quasi_density(W) / std::sqrt(eB);
  if (quantity == "purity") {
    Matrix4c Wg = W;
    Wg.col(2) *= -1.0;
    Wg.col(3) *= -1.0;
    return (Wg * Wg).trace().real() / eB;
  }
  if (quantity == "concurrence") return concurrence_local(W) / eB;
  throw ConfigError("unknown raster quantity '" + quantity + "'");
}

std::vector<ReportRow> run_curve(const CurveCase& c, Route route, const QuadratureSpec& quad, int threads,
                                 Diagnostics* diag) {
  ReportRow base;
  base.label = c.label;
  const PhysParams& p = params_of(c.state);
  base.m = p.m;
  base.kz2 = kz2_of(p);
  base.eB = p.eB;
  if (const auto* g = std::get_if<GaussianSpec>(&c.state)) {
    base.family = "gaussian";
    base.pol = g->pol;
    base.n = g->n;
  } else {
    const CatSpec& cs = std::get<CatSpec>(c.state);
    base.family = "cat";
    base.pol = cs.pol;
    base.symmetry = to_string(cs.sym);
    base.a = cs.a;
    base.l = cs.l;
    // Surface the truncation warning once per curve.
    if (diag != nullptr) cat_expansion(cs, 0.0, diag);
  }

  std::vector<ReportRow> rows(c.times.size(), base);
  auto work = [&](std::size_t i) {
    rows[i].info = route == Route::analytic ? info_report(c.state, c.times[i])
                                            : info_report_grid(c.state, c.times[i], quad, 1).report;
  };
  detail::parallel_for(rows.size(), threads, work);
  return rows;
}

RasterResult run_raster(const RasterPanel& panel, const QuadratureSpec& window, int threads, Diagnostics* diag) {
  QuadratureSpec q = window;
  q.rule = QuadRule::trapezoid;
  q.ns += q.ns % 2;
  q.nk += q.nk % 2;
  const WignerSeries series = state_wigner_series(panel.state, panel.t, diag);
  const WignerGrid grid(series, q, threads);
  RasterResult out{panel.label, panel.quantity, panel.t, {}};
  out.points.reserve(grid.rows() * grid.cols());
  for (std::size_t i = 0; i < grid.rows(); ++i) {
    for (std::size_t j = 0; j < grid.cols(); ++j) {
      out.points.push_back(
          RasterPoint{grid.s_nodes().x[i], grid.k_nodes().x[j], raster_value(panel.quantity, grid.at(i, j), grid.eB())});
    }
  }
  return out;
}

std::string classical_gap_note(const CurveCase& c) {
  const auto* g = std::get_if<GaussianSpec>(&c.state);
  if (g == nullptr || g->pol != 1 || g->n < 1) return {};
  double worst = 0.0;
  for (double t : c.times) worst = std::max(worst, std::abs(classical_gap(g->n, g->p, t)));
  return "diagnostic D1 classical_gap (M_cl closed form minus decohered-matrix M), max " + format_gap(worst) +
         ": " + c.label;
}

FigureResult run_figure(const Scenario& scenario, int threads) {
  FigureResult out;
  out.figure = scenario.figure;
  out.notes = scenario.notes;
  Diagnostics diag;
  for (const CurveCase& c : scenario.curves) {
    auto rows = run_curve(c, scenario.route, scenario.window, threads, &diag);
    out.rows.insert(out.rows.end(), rows.begin(), rows.end());
    if (std::string note = classical_gap_note(c); !note.empty()) out.notes.push_back(std::move(note));
  }
  for (const RasterPanel& panel : scenario.panels) {
    out.rasters.push_back(run_raster(panel, scenario.window, threads, &diag));
  }
  for (const auto& w : diag.warnings) {
    if (std::find(out.warnings.begin(), out.warnings.end(), w) == out.warnings.end()) out.warnings.push_back(w);
  }
  return out;
}

}  // namespace diracwig
