#include "diracwig/validate.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>

#include "diracwig/errors.hpp"
#include "diracwig/grid.hpp"
#include "diracwig/infoquant.hpp"

namespace diracwig {

namespace {

constexpr double kPi = std::numbers::pi;

CheckResult timed(const std::string& name, double tolerance, const std::function<double(std::string&)>& body) {
  CheckResult r;
  r.name = name;
  r.tolerance = tolerance;
  const auto start = std::chrono::steady_clock::now();
  try {
    r.measured = body(r.detail);
    r.passed = std::isfinite(r.measured) && r.measured <= tolerance;
  } catch (const std::exception& e) {
    r.passed = false;
    r.measured = std::numeric_limits<double>::infinity();
    r.detail = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

// Basis functions on one tensor grid, integrated with ∫dx = eB^{-1/2} ∫ds.
double basis_orthonormality(int cutoff, double eB) {
  const QuadratureSpec quad = widen_to_fit(auto_window(cutoff, 0.0, 192), cutoff, eB, 1e-12);
  const Nodes sn = make_nodes(quad.s_min, quad.s_max, quad.ns, quad.rule);
  const Nodes kn = make_nodes(quad.k_min, quad.k_max, quad.nk, quad.rule);
  const int N = cutoff + 1;
  const std::size_t pairs = static_cast<std::size_t>(N * N);
  std::vector<cplx> single(pairs);
  std::vector<cplx> product(pairs * pairs);
  std::vector<double> LL(static_cast<std::size_t>(N * N)), MM(static_cast<std::size_t>(N * N)), Ms(static_cast<std::size_t>(N));
  std::vector<double> Lv(static_cast<std::size_t>(N)), Mv(static_cast<std::size_t>(N));
  for (std::size_t i = 0; i < sn.x.size(); ++i) {
    for (std::size_t j = 0; j < kn.x.size(); ++j) {
      const double w = sn.w[i] * kn.w[j];
      const BasisPoint bp{sn.x[i], kn.x[j], eB};
      const FrakLTable table(cutoff, bp);
      for (int a = 0; a < N; ++a) {
        Lv[static_cast<std::size_t>(a)] = lag_L(a, bp);
        Mv[static_cast<std::size_t>(a)] = lag_M(a, bp);
      }
      for (int a = 0; a < N; ++a) {
        Ms[static_cast<std::size_t>(a)] += w * Mv[static_cast<std::size_t>(a)];
        for (int b = 0; b < N; ++b) {
          LL[static_cast<std::size_t>(a * N + b)] += w * Lv[static_cast<std::size_t>(a)] * Lv[static_cast<std::size_t>(b)];
          MM[static_cast<std::size_t>(a * N + b)] += w * Mv[static_cast<std::size_t>(a)] * Mv[static_cast<std::size_t>(b)];
        }
      }
      for (std::size_t u = 0; u < pairs; ++u) {
        const cplx fu = table(static_cast<int>(u) / N, static_cast<int>(u) % N);
        single[u] += w * fu;
        for (std::size_t v = 0; v < pairs; ++v) {
          product[u * pairs + v] += w * fu * table(static_cast<int>(v) / N, static_cast<int>(v) % N);
        }
      }
    }
  }
  const double jac = phase_space_jacobian(eB);
  const double norm2 = std::sqrt(eB) / (2.0 * kPi);
  double worst = 0.0;
  for (int a = 0; a < N; ++a) {
    worst = std::max(worst, std::abs(jac * Ms[static_cast<std::size_t>(a)]));
    for (int b = 0; b < N; ++b) {
      const double target = a == b ? norm2 : 0.0;
      worst = std::max(worst, std::abs(jac * LL[static_cast<std::size_t>(a * N + b)] - target));
      // M_0 is identically zero, so only n >= 1 enters the M orthonormality.
      if (a > 0 && b > 0) worst = std::max(worst, std::abs(jac * MM[static_cast<std::size_t>(a * N + b)] - target));
    }
  }
  for (std::size_t u = 0; u < pairs; ++u) {
    const int m = static_cast<int>(u) / N;
    const int n = static_cast<int>(u) % N;
    worst = std::max(worst, std::abs(jac * single[u] - (m == n ? 1.0 : 0.0)));
    for (std::size_t v = 0; v < pairs; ++v) {
      const int mp = static_cast<int>(v) / N;
      const int np = static_cast<int>(v) % N;
      const double target = (m == np && n == mp) ? norm2 : 0.0;
      worst = std::max(worst, std::abs(jac * product[u * pairs + v] - target));
    }
  }
  return worst;
}

std::vector<StateSpec> families(const PhysParams& p) {
  std::vector<StateSpec> out;
  for (int pol = 1; pol <= 4; ++pol) out.emplace_back(GaussianSpec{pol, 1, p});
  for (Symmetry sym : {Symmetry::S, Symmetry::A}) {
    for (double a : {1.0, 5.0}) out.emplace_back(CatSpec::with_auto_l(sym, a, p));
  }
  return out;
}

double oracle_sweep(const StateSpec& state, int points, double& max_entry) {
  const PhysParams& p = params_of(state);
  const double E1 = level_data(1, p).E;
  int max_index = 0;
  double center = 0.0;
  SpinorField field;
  if (const auto* g = std::get_if<GaussianSpec>(&state)) {
    max_index = g->n;
    field = [g](double s, double t) { return gaussian_eval(*g, s, t); };
  } else {
    const CatSpec& c = std::get<CatSpec>(state);
    max_index = c.max_index();
    center = c.a;
    field = [c](double s, double t) { return cat_eval(c, s, t); };
  }
  OracleSpec os;
  os.support = support_radius(max_index);
  const double s_half = std::abs(center) + 4.0;
  const double k_half = 4.0;
  std::vector<double> ks(static_cast<std::size_t>(points));
  for (int j = 0; j < points; ++j) ks[static_cast<std::size_t>(j)] = -k_half + 2.0 * k_half * j / (points - 1);

  double worst = 0.0;
  for (double t : {0.0, kPi / (4.0 * E1), kPi / (2.0 * E1)}) {
    const WignerSeries series = state_wigner_series(state, t);
    for (int i = 0; i < points; ++i) {
      const double s = -s_half + 2.0 * s_half * i / (points - 1);
      const auto column = weyl_oracle_column(field, t, s, ks, os);
      for (std::size_t j = 0; j < ks.size(); ++j) {
        WignerValue analytic;
        if (const auto* g = std::get_if<GaussianSpec>(&state)) {
          analytic = gaussian_wigner(*g, t, BasisPoint{s, ks[j], p.eB});
        } else {
          analytic = series(BasisPoint{s, ks[j], p.eB});
        }
        worst = std::max(worst, (analytic - column[j]).cwiseAbs().maxCoeff());
        max_entry = std::max(max_entry, analytic.cwiseAbs().maxCoeff());
      }
    }
  }
  return worst;
}

}  // namespace

ValidationLevel parse_validation_level(const std::string& name) {
  if (name == "quick") return ValidationLevel::quick;
  if (name == "full") return ValidationLevel::full;
  throw ConfigError("validation level must be quick|full");
}

bool ValidationReport::ok() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return !checks.empty();
}

std::string format_check(const CheckResult& c) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-4s %-28s defect=%.3e tol=%.1e (%.2fs)", c.passed ? "PASS" : "FAIL", c.name.c_str(),
                c.measured, c.tolerance, c.seconds);
  std::string out = buf;
  if (!c.detail.empty()) out += "  " + c.detail;
  return out;
}

ValidationReport run_validate(ValidationLevel level, const FaultInjection& fault, int threads) {
  ValidationReport report;
  const PhysParams unit{1.0, 1.0, 1.0};

  report.checks.push_back(timed("basis orthonormality", 1e-8, [&](std::string& detail) {
    const int cutoff = level == ValidationLevel::full ? 8 : 5;
    detail = "indices <= " + std::to_string(cutoff) + ", eB in {1, 2.5}";
    return std::max(basis_orthonormality(cutoff, 1.0), basis_orthonormality(cutoff, 2.5));
  }));

  report.checks.push_back(timed("spinor orthonormality", 1e-8, [&](std::string& detail) {
    detail = "levels <= 8";
    QuadratureSpec q = widen_to_fit(auto_window(8), 8, 1.0);
    double worst = 0.0;
    for (const PhysParams& p : {unit, PhysParams{0.5, 2.0, 3.0}, PhysParams{0.0, 0.0, 0.2}}) {
      worst = std::max(worst, orthonormality_defect(8, p, widen_to_fit(q, 8, p.eB)));
    }
    return worst;
  }));

  report.checks.push_back(timed("pure-state constraint", 1e-5, [&](std::string& detail) {
    double worst = 0.0;
    for (const StateSpec& s : families(unit)) {
      for (double t : {0.0, 0.4, 1.3}) worst = std::max(worst, std::abs(info_report(s, t).purity - 1.0));
    }
    const GridMeasure g = info_report_grid(GaussianSpec{1, 1, unit}, kPi / 4.0, QuadratureSpec{}, threads);
    worst = std::max(worst, std::abs(g.report.purity - 1.0));
    detail = "analytic, all families; grid, Gaussian n=1";
    return worst;
  }));

  report.checks.push_back(timed("M - M_cl = C2 identity", 1e-12, [&](std::string& detail) {
    std::mt19937_64 rng(20240917);
    std::uniform_real_distribution<double> mass(0.0, 3.0), kz(0.0, 4.0), field(0.1, 10.0);
    std::uniform_int_distribution<int> level(1, 6);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const PhysParams p{mass(rng), kz(rng), field(rng)};
      const int n = level(rng);
      const double E = level_data(n, p).E;
      for (int k = 0; k <= 24; ++k) {
        const double t = (2.0 * kPi * k / 24.0) / E;
        const double closed = gaussian_mutual_information(n, p, t) - classical_mutual_information(n, p, t) -
                              gaussian_concurrence_sq(n, p, t);
        GaussianWignerCoeffs c = gaussian_coeffs(n, t, p);
        if (fault.flip_a34) c.a34 = -c.a34;
        const InfoReport r = coefficient_report(c, n, p, t);
        worst = std::max({worst, std::abs(closed), std::abs(r.M - r.M_cl - r.C2)});
      }
    }
    detail = fault.flip_a34 ? "100 random tuples x 25 times, a34 sign corrupted" : "100 random tuples x 25 times";
    return worst;
  }));

  if (level == ValidationLevel::quick) return report;

  report.checks.push_back(timed("oracle equivalence", 1e-6, [&](std::string& detail) {
    double worst = 0.0;
    double scale = 0.0;
    for (const StateSpec& s : {StateSpec{GaussianSpec{1, 1, unit}}, StateSpec{GaussianSpec{2, 1, unit}},
                               StateSpec{CatSpec::with_auto_l(Symmetry::S, 1.0, unit)},
                               StateSpec{CatSpec::with_auto_l(Symmetry::S, 5.0, unit)},
                               StateSpec{CatSpec::with_auto_l(Symmetry::A, 1.0, unit)},
                               StateSpec{CatSpec::with_auto_l(Symmetry::A, 5.0, unit)}}) {
      worst = std::max(worst, oracle_sweep(s, 128, scale));
    }
    detail = "128x128 points, 3 times, 6 states; largest entry " + std::to_string(scale);
    return worst;
  }));

  report.checks.push_back(timed("grid normalization/purity", 1e-5, [&](std::string& detail) {
    double worst = 0.0;
    for (const StateSpec& s : families(unit)) {
      for (double t : {0.0, 0.7}) {
        const GridMeasure g = info_report_grid(s, t, QuadratureSpec{}, threads);
        worst = std::max({worst, 10.0 * std::abs(g.norm - 1.0), std::abs(g.report.purity - 1.0)});
      }
    }
    detail = "norm to 1e-6 (scaled x10), purity to 1e-5";
    return worst;
  }));

  report.checks.push_back(timed("cat averaging identities", 1e-6, [&](std::string& detail) {
    double worst = 0.0;
    for (double a : {1.0, 5.0}) {
      const CatSpec c = CatSpec::with_auto_l(Symmetry::S, a, unit);
      for (double t : {0.3, 1.1}) {
        const WignerSeries series = state_wigner_series(c, t);
        const WignerGrid grid(series, fitted_window(c, QuadratureSpec{}), threads);
        const CatAverages avg = cat_averages(c, t);
        const double f = quadratic_average_factor(unit.eB);
        const double w11 = f * grid.integrate([](const WignerValue& W) { return (W(0, 0) * W(0, 0)).real(); }).value;
        const double w33 = f * grid.integrate([](const WignerValue& W) { return (W(2, 2) * W(2, 2)).real(); }).value;
        const double w44 = f * grid.integrate([](const WignerValue& W) { return (W(3, 3) * W(3, 3)).real(); }).value;
        worst = std::max({worst, std::abs(w11 - avg.W11 * avg.W11), std::abs(w33 - avg.W33 * avg.W33),
                          std::abs(w44 - avg.W44 * avg.W44)});
      }
    }
    detail = "cat S, a in {1, 5}; <W_ii^2> by quadrature vs <W_ii>^2 by series";
    return worst;
  }));

  return report;
}

}  // namespace diracwig
