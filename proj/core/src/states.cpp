#include "diracwig/states.hpp"

#include <cmath>
#include <sstream>

#include "diracwig/errors.hpp"

namespace diracwig {

void GaussianSpec::validate() const {
  p.validate();
  if (pol < 1 || pol > 4) throw ConfigError("Gaussian polarization must be 1..4");
  if (n < 0) throw ConfigError("Landau level must be non-negative");
  if (n == 0 && (pol == 1 || pol == 3)) {
    throw ConfigError("G^(1) and G^(3) vanish for n = 0; use n >= 1");
  }
}

Symmetry parse_symmetry(const std::string& name) {
  if (name == "S" || name == "s" || name == "symmetric") return Symmetry::S;
  if (name == "A" || name == "a" || name == "antisymmetric") return Symmetry::A;
  throw ConfigError("unknown cat symmetry '" + name + "' (expected S|A)");
}

std::string to_string(Symmetry sym) { return sym == Symmetry::S ? "S" : "A"; }

CatSpec CatSpec::with_auto_l(Symmetry sym, double a, const PhysParams& p, double epsilon) {
  CatSpec spec;
  spec.sym = sym;
  spec.a = a;
  spec.p = p;
  spec.l = auto_truncation(a, sym, epsilon);
  return spec;
}

void CatSpec::validate() const {
  p.validate();
  if (!(a > 0.0) || !std::isfinite(a)) throw ConfigError("cat separation a must be positive");
  if (l < 0) throw ConfigError("cat truncation index l must be non-negative");
  if (pol < 1 || pol > 4) throw ConfigError("cat polarization must be 1..4");
}

double CatSpec::truncation_error() const { return diracwig::truncation_error(a, l, sym); }

const PhysParams& params_of(const StateSpec& state) {
  return std::visit([](const auto& s) -> const PhysParams& { return s.p; }, state);
}

SpinorExpansion gaussian_expansion(const GaussianSpec& spec, double t) {
  const int n = spec.n;
  const PhysParams& p = spec.p;
  const LevelData d = level_data(n, p);
  const cplx early = std::polar(1.0, -d.E * t);  // exp(-i E t)
  const cplx late = std::polar(1.0, d.E * t);    // exp(+i E t)

  auto u = [&](Parity r, Spin s) { return stationary_expansion(n, r, s, p); };
  auto scaled = [](SpinorExpansion e, cplx f) {
    e *= f;
    return e;
  };

  SpinorExpansion g(n, p.eB);
  switch (spec.pol) {
    case 1:
      g += scaled(u(Parity::positive, Spin::up), early);
      g += scaled(u(Parity::negative, Spin::down), -d.A * late);
      g += scaled(u(Parity::negative, Spin::up), d.B * late);
      break;
    case 2:
      g += scaled(u(Parity::positive, Spin::down), early);
      g += scaled(u(Parity::negative, Spin::up), d.A * late);
      g += scaled(u(Parity::negative, Spin::down), d.B * late);
      break;
    case 3:
      g += scaled(u(Parity::negative, Spin::down), late);
      g += scaled(u(Parity::positive, Spin::up), d.A * early);
      g += scaled(u(Parity::positive, Spin::down), -d.B * early);
      break;
    case 4:
      g += scaled(u(Parity::positive, Spin::up), -d.B * early);
      g += scaled(u(Parity::positive, Spin::down), -d.A * early);
      g += scaled(u(Parity::negative, Spin::up), late);
      break;
    default:
      throw ConfigError("Gaussian polarization must be 1..4");
  }
  g *= std::sqrt(d.eta);
  return g;
}

SpinorValue gaussian_eval(const GaussianSpec& spec, double s, double t) {
  return gaussian_expansion(spec, t).eval(s);
}

std::vector<std::pair<int, double>> cat_coefficients(Symmetry sym, double a, int max_index) {
  if (!(a > 0.0)) throw DomainError("cat_coefficients: a must be positive");
  std::vector<std::pair<int, double>> out;
  const double x = a / std::sqrt(2.0);
  for (int j = (sym == Symmetry::S ? 0 : 1); j <= max_index; j += 2) {
    const double log_c = -a * a / 4.0 + j * std::log(x) - 0.5 * std::lgamma(j + 1.0);
    out.emplace_back(j, std::exp(log_c));
  }
  return out;
}

double truncation_error(double a, int l, Symmetry sym) {
  if (l < 0) throw DomainError("truncation_error: l must be non-negative");
  const double x = a * a / 2.0;
  const int offset = sym == Symmetry::S ? 0 : 1;
  // Accumulate the partial sum relative to the full function to stay finite for large a.
  const double log_full = sym == Symmetry::S ? x + std::log1p(std::exp(-2.0 * x)) - std::log(2.0)
                                             : x + std::log1p(-std::exp(-2.0 * x)) - std::log(2.0);
  double partial = 0.0;
  for (int k = 0; k <= l; ++k) {
    const int power = 2 * k + offset;
    if (x == 0.0) {
      partial += power == 0 ? std::exp(-log_full) : 0.0;
      continue;
    }
    partial += std::exp(power * std::log(x) - std::lgamma(power + 1.0) - log_full);
  }
  return 1.0 - partial;
}

int auto_truncation(double a, Symmetry sym, double epsilon) {
  if (!(a > 0.0)) throw DomainError("auto_truncation: a must be positive");
  for (int l = 0; l < 500; ++l) {
    if (truncation_error(a, l, sym) < epsilon) return l;
  }
  throw ConvergenceError("auto_truncation: no l below 500 reaches the requested error");
}

double cat_norm_constant(Symmetry sym, double a) {
  const double x = a * a / 2.0;
  if (sym == Symmetry::S) return 1.0 / std::cosh(x);
  if (x == 0.0) throw DomainError("anti-symmetric cat state with a = 0 is the null state");
  return 1.0 / std::sinh(x);
}

SpinorExpansion cat_expansion(const CatSpec& spec, double t, Diagnostics* diag) {
  const double er = spec.truncation_error();
  if (diag != nullptr && er > spec.warn_threshold) {
    std::ostringstream msg;
    msg << "cat series truncated at l=" << spec.l << " with error " << er << " above threshold "
        << spec.warn_threshold;
    diag->warn(msg.str());
  }
  const double x = spec.a / std::sqrt(2.0);
  const double root_norm = std::sqrt(cat_norm_constant(spec.sym, spec.a));
  SpinorExpansion out(spec.max_index(), spec.p.eB);
  for (int k = 0; k <= spec.l; ++k) {
    const int j = spec.spatial_index(k);
    const double weight = std::exp(j * std::log(x) - 0.5 * std::lgamma(j + 1.0));
    GaussianSpec g{spec.pol, j + 1, spec.p};
    SpinorExpansion term = gaussian_expansion(g, t);
    term *= root_norm * weight;
    out += term;
  }
  return out;
}

SpinorValue cat_eval(const CatSpec& spec, double s, double t, Diagnostics* diag) {
  return cat_expansion(spec, t, diag).eval(s);
}

SpinorExpansion state_expansion(const StateSpec& state, double t, Diagnostics* diag) {
  if (const auto* g = std::get_if<GaussianSpec>(&state)) return gaussian_expansion(*g, t);
  return cat_expansion(std::get<CatSpec>(state), t, diag);
}

}  // namespace diracwig
