#include "diracwig/infoquant.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "diracwig/errors.hpp"

namespace diracwig {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

constexpr double gsign(int mu) { return mu < 2 ? 1.0 : -1.0; }

struct SinData {
  LevelData d;
  double s2 = 0.0;  // sin²(E t)
  double x = 0.0;   // eta² sin²
};

SinData sin_data(int n, const PhysParams& p, double t) {
  SinData out;
  out.d = level_data(n, p);
  const double sn = std::sin(out.d.E * t);
  out.s2 = sn * sn;
  out.x = out.d.eta * out.d.eta * out.s2;
  return out;
}

double eof_or_nan(double C2) {
  if (!(C2 >= -1e-9 && C2 <= 1.0 + 1e-9)) return kNaN;
  return eof(C2);
}

}  // namespace

const std::vector<std::string>& info_report_fields() {
  static const std::vector<std::string> names{"t",  "purity", "I_SP", "I_xk", "M",
                                              "M_cl", "C2",   "EoF",  "chi",  "truncation_error"};
  return names;
}

std::vector<double> info_report_values(const InfoReport& r) {
  return {r.t, r.purity, r.I_SP, r.I_xk, r.M, r.M_cl, r.C2, r.EoF, r.chi, r.truncation_error};
}

double gaussian_linear_entropy(int n, const PhysParams& p, double t) {
  const SinData q = sin_data(n, p, t);
  const double b2 = q.d.B * q.d.B;
  return 8.0 * b2 * q.x * (1.0 - 4.0 * b2 * q.x);
}

double gaussian_mutual_information(int n, const PhysParams& p, double t) {
  const SinData q = sin_data(n, p, t);
  const double eta2 = q.d.eta * q.d.eta;
  const double b2 = q.d.B * q.d.B;
  return 16.0 * q.s2 * eta2 * b2 * (1.0 - 4.0 * b2 * eta2 * q.s2);
}

double classical_mutual_information(int n, const PhysParams& p, double t) {
  const SinData q = sin_data(n, p, t);
  const double a2 = q.d.A * q.d.A;
  const double b2 = q.d.B * q.d.B;
  const double eta2 = q.d.eta * q.d.eta;
  const double eta4s4 = eta2 * eta2 * q.s2 * q.s2;
  return -32.0 * b2 * b2 * eta4s4 + 8.0 * b2 * eta2 * q.s2 + 32.0 * b2 * a2 * eta4s4;
}

double gaussian_concurrence_sq(int n, const PhysParams& p, double t) {
  const SinData q = sin_data(n, p, t);
  const double eta2 = q.d.eta * q.d.eta;
  const double sum = q.d.A * q.d.A + q.d.B * q.d.B;
  return 8.0 * eta2 * eta2 * q.s2 * q.d.B * q.d.B * (1.0 / eta2 - 4.0 * q.s2 * sum);
}

double chirality(int n, const PhysParams& p, double t) {
  const SinData q = sin_data(n, p, t);
  return 4.0 * q.d.eta * q.d.A * p.m * q.s2 / q.d.E;
}

double decohered_mutual_information(int n, const PhysParams& p, double t) {
  const GaussianWignerCoeffs c = gaussian_coeffs(n, t, p);
  const InfoReport r = measure_series(gaussian_coefficient_series(c, n, p.eB).decohered());
  return r.M;
}

double classical_gap(int n, const PhysParams& p, double t) {
  return classical_mutual_information(n, p, t) - decohered_mutual_information(n, p, t);
}

double concurrence_sq(const Matrix4c& rho) {
  const Matrix4c& Y = gammas().sigma_y_sigma_y;
  return (rho * Y * rho.conjugate() * Y).trace().real();
}

double chirality(const Matrix4c& rho) { return (rho * gammas().gamma5).trace().real(); }

Matrix4c spin_parity_density(const WignerValue& mean) {
  Matrix4c rho = mean;
  for (int nu = 2; nu < 4; ++nu) rho.col(nu) *= -1.0;
  return rho;
}

WignerValue decohere(const WignerValue& W) {
  WignerValue out = WignerValue::Zero();
  out.diagonal() = W.diagonal();
  return out;
}

double concurrence_local(const WignerValue& W) {
  const Matrix4c& flip = gammas().spin_flip;
  return -(W * flip * W.conjugate() * flip).trace().real();
}

double eof(double C2) {
  if (!(C2 >= -1e-9 && C2 <= 1.0 + 1e-9)) {
    throw DomainError("eof: C2 outside [0, 1]");
  }
  const double c2 = std::clamp(C2, 0.0, 1.0);
  const double lambda = 0.5 * (1.0 - std::sqrt(1.0 - c2));
  auto h = [](double v) { return v > 0.0 ? -v * std::log2(v) : 0.0; };
  return h(lambda) + h(1.0 - lambda);
}

InfoReport measure_series(const WignerSeries& W) {
  InfoReport r;
  const Matrix4c rho = spin_parity_density(W.mean());
  double purity = 0.0;
  double marginal = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      purity += gsign(mu) * gsign(nu) * W.quadratic(mu, nu, nu, mu).real();
      marginal += gsign(mu) * gsign(nu) * W.quadratic(mu, mu, nu, nu).real();
    }
  }
  r.purity = purity;
  r.I_SP = 1.0 - (rho * rho).trace().real();
  r.I_xk = 1.0 - marginal;
  r.M = r.I_SP + r.I_xk + r.purity - 1.0;
  r.M_cl = kNaN;
  r.C2 = concurrence_sq(rho);
  r.EoF = eof_or_nan(r.C2);
  r.chi = chirality(rho);
  return r;
}

GridMeasure measure_grid(const WignerGrid& grid) {
  const double quad_factor = quadratic_average_factor(grid.eB());
  auto trace_g0 = [](const WignerValue& W) { return W(0, 0) + W(1, 1) - W(2, 2) - W(3, 3); };

  WignerValue mean = WignerValue::Zero();
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      mean(mu, nu) = grid.integrate([mu, nu](const WignerValue& W) { return W(mu, nu); }).value;
    }
  }
  const auto norm = grid.integrate([&](const WignerValue& W) { return trace_g0(W).real(); });
  const auto pur = grid.integrate([](const WignerValue& W) {
    Matrix4c Wg = W;
    Wg.col(2) *= -1.0;
    Wg.col(3) *= -1.0;
    return (Wg * Wg).trace().real();
  });
  const auto marg = grid.integrate([&](const WignerValue& W) {
    const double f = trace_g0(W).real();
    return f * f;
  });
  const auto local = grid.integrate([](const WignerValue& W) { return concurrence_local(W); });

  GridMeasure g;
  const Matrix4c rho = spin_parity_density(mean);
  g.norm = norm.value;
  g.norm_error = norm.error;
  g.purity_error = quad_factor * pur.error;
  g.concurrence_local_avg = quad_factor * local.value;
  InfoReport& r = g.report;
  r.purity = quad_factor * pur.value;
  r.I_SP = 1.0 - (rho * rho).trace().real();
  r.I_xk = 1.0 - quad_factor * marg.value;
  r.M = r.I_SP + r.I_xk + r.purity - 1.0;
  r.M_cl = kNaN;
  r.C2 = concurrence_sq(rho);
  r.EoF = eof_or_nan(r.C2);
  r.chi = chirality(rho);
  return g;
}

InfoReport coefficient_report(const GaussianWignerCoeffs& c, int n, const PhysParams& p, double t) {
  InfoReport r = measure_series(gaussian_coefficient_series(c, n, p.eB));
  r.t = t;
  r.M_cl = classical_mutual_information(n, p, t);
  return r;
}

CatAverages cat_averages(const CatSpec& spec, double t) {
  spec.validate();
  if (spec.pol != 1) throw DomainError("cat_averages: closed-form sums exist for polarization 1 only");
  const cplx i{0.0, 1.0};
  const double log_half_a2 = std::log(spec.a * spec.a / 2.0);
  const double norm = cat_norm_constant(spec.sym, spec.a);
  CatAverages out;
  for (int k = 0; k <= spec.l; ++k) {
    const int j = spec.spatial_index(k);
    const LevelData d = level_data(j + 1, spec.p);
    const double w2 = norm * std::exp(j * log_half_a2 - std::lgamma(j + 1.0));
    const double sn = std::sin(d.E * t);
    const cplx c1 = std::polar(1.0, -d.E * t) + (d.A * d.A + d.B * d.B) * std::polar(1.0, d.E * t);
    const double eta2 = d.eta * d.eta;
    out.W11 += w2 * eta2 * std::norm(c1);
    out.W33 -= w2 * 4.0 * eta2 * sn * sn * d.A * d.A;
    out.W44 -= w2 * 4.0 * eta2 * sn * sn * d.B * d.B;
    out.W31 += w2 * (-2.0 * i * d.eta * sn * d.A) * std::conj(d.eta * c1);
  }
  return out;
}

WignerSeries state_wigner_series(const StateSpec& state, double t, Diagnostics* diag) {
  if (const auto* g = std::get_if<GaussianSpec>(&state)) {
    g->validate();
    return WignerSeries(gaussian_expansion(*g, t));
  }
  const CatSpec& c = std::get<CatSpec>(state);
  c.validate();
  return WignerSeries(cat_expansion(c, t, diag));
}

InfoReport info_report(const StateSpec& state, double t, Diagnostics* diag) {
  if (const auto* g = std::get_if<GaussianSpec>(&state)) {
    g->validate();
    InfoReport r;
    if (g->pol == 1) {
      const GaussianWignerCoeffs c = gaussian_coeffs(g->n, t, g->p);
      const double trace = c.a11 - c.a33 - c.a44;
      r.purity = trace * trace;
      r.I_SP = gaussian_linear_entropy(g->n, g->p, t);
      r.I_xk = r.I_SP;
      r.M = gaussian_mutual_information(g->n, g->p, t);
      r.C2 = gaussian_concurrence_sq(g->n, g->p, t);
      r.EoF = eof_or_nan(r.C2);
      r.chi = chirality(g->n, g->p, t);
    } else {
      r = measure_series(WignerSeries(gaussian_expansion(*g, t)));
    }
    r.t = t;
    r.M_cl = classical_mutual_information(g->n, g->p, t);
    r.truncation_error = 0.0;
    return r;
  }

  const CatSpec& c = std::get<CatSpec>(state);
  c.validate();
  InfoReport r = measure_series(WignerSeries(cat_expansion(c, t, diag)));
  if (c.pol == 1) {
    const CatAverages avg = cat_averages(c, t);
    const double trace = avg.W11 - avg.W33 - avg.W44;
    r.purity = trace * trace;
    r.I_SP = 1.0 - avg.W11 * avg.W11 - avg.W33 * avg.W33 - avg.W44 * avg.W44 - 2.0 * std::norm(avg.W31);
    r.M = r.I_SP + r.I_xk + r.purity - 1.0;
    r.C2 = -2.0 * avg.W11 * avg.W44;
    r.EoF = eof_or_nan(r.C2);
    r.chi = 2.0 * avg.W31.real();
  }
  r.t = t;
  r.M_cl = kNaN;
  r.truncation_error = c.truncation_error();
  return r;
}

QuadratureSpec fitted_window(const StateSpec& state, QuadratureSpec quad) {
  const PhysParams& p = params_of(state);
  int max_index = 0;
  if (const auto* g = std::get_if<GaussianSpec>(&state)) {
    max_index = g->n;
  } else {
    max_index = std::get<CatSpec>(state).max_index();
  }
  return widen_to_fit(quad, max_index, p.eB);
}

GridMeasure info_report_grid(const StateSpec& state, double t, const QuadratureSpec& quad, int threads,
                             Diagnostics* diag, const GridTolerance& tol) {
  const WignerSeries series = state_wigner_series(state, t, diag);
  QuadratureSpec q = fitted_window(state, quad);
  GridMeasure g;
  for (int r = 0;; ++r) {
    g = measure_grid(WignerGrid(series, q, threads));
    if (g.norm_error <= tol.norm && g.purity_error <= tol.purity) break;
    if (r == tol.max_refinements) {
      throw ConvergenceError("grid report: error estimate above tolerance after " + std::to_string(r) +
                             " refinements (norm " + std::to_string(g.norm_error) + ", purity " +
                             std::to_string(g.purity_error) + ", ns = " + std::to_string(q.ns) + ")");
    }
    q = q.refined(2);
  }
  g.report.t = t;
  if (const auto* gs = std::get_if<GaussianSpec>(&state)) {
    g.report.M_cl = classical_mutual_information(gs->n, gs->p, t);
  } else {
    g.report.truncation_error = std::get<CatSpec>(state).truncation_error();
  }
  return g;
}

double purity(const StateSpec& state, double t, Route route, const QuadratureSpec& quad) {
  if (route == Route::analytic) return info_report(state, t).purity;
  return info_report_grid(state, t, quad).report.purity;
}

std::pair<double, double> linear_entropies(const StateSpec& state, double t) {
  const InfoReport r = info_report(state, t);
  return {r.I_SP, r.I_xk};
}

double mutual_information(const StateSpec& state, double t) { return info_report(state, t).M; }

double concurrence_avg(const StateSpec& state, double t) { return info_report(state, t).C2; }

}  // namespace diracwig
