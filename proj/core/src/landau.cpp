#include "diracwig/landau.hpp"

#include <cmath>
#include <vector>

#include "diracwig/errors.hpp"

namespace diracwig {

PhysParams PhysParams::from_kz2(double m, double kz2, double eB) {
  if (!(kz2 >= 0.0)) throw ConfigError("kz2 must be non-negative");
  return PhysParams{m, std::sqrt(kz2), eB};
}

void PhysParams::validate() const {
  if (!std::isfinite(m) || !std::isfinite(kz) || !std::isfinite(eB)) {
    throw ConfigError("physical parameters must be finite");
  }
  if (m < 0.0) throw ConfigError("mass must be non-negative");
  if (!(eB > 0.0)) throw ConfigError("magnetic coupling eB must be positive");
}

LevelData level_data(int n, const PhysParams& p) {
  if (n < 0) throw DomainError("level_data: n must be non-negative");
  LevelData d;
  d.n = n;
  d.E = std::sqrt(p.m * p.m + p.kz * p.kz + 2.0 * n * p.eB);
  d.A = p.kz / (d.E + p.m);
  d.B = std::sqrt(2.0 * n * p.eB) / (d.E + p.m);
  d.eta = (d.E + p.m) / (2.0 * d.E);
  return d;
}

namespace {

GammaSet build_gammas() {
  using c = cplx;
  const c i{0.0, 1.0};
  GammaSet g;
  g.gamma[0] << 1, 0, 0, 0,
                0, 1, 0, 0,
                0, 0, -1, 0,
                0, 0, 0, -1;
  // gamma^j = [[0, sigma_j], [-sigma_j, 0]]
  g.gamma[1] << 0, 0, 0, 1,
                0, 0, 1, 0,
                0, -1, 0, 0,
                -1, 0, 0, 0;
  g.gamma[2] << 0, 0, 0, -i,
                0, 0, i, 0,
                0, i, 0, 0,
                -i, 0, 0, 0;
  g.gamma[3] << 0, 0, 1, 0,
                0, 0, 0, -1,
                -1, 0, 0, 0,
                0, 1, 0, 0;
  g.gamma5 = i * g.gamma[0] * g.gamma[1] * g.gamma[2] * g.gamma[3];
  g.spin_flip = g.gamma[2] * g.gamma[0];
  g.sigma_y_sigma_y = -i * g.gamma[2];
  return g;
}

}  // namespace

Matrix4c GammaSet::sigma(int mu, int nu) const {
  const cplx half_i{0.0, 0.5};
  return half_i * (gamma[static_cast<std::size_t>(mu)] * gamma[static_cast<std::size_t>(nu)] -
                   gamma[static_cast<std::size_t>(nu)] * gamma[static_cast<std::size_t>(mu)]);
}

const GammaSet& gammas() {
  static const GammaSet set = build_gammas();
  return set;
}

SpinorExpansion stationary_expansion(int n, Parity r, Spin pol, const PhysParams& p) {
  const LevelData d = level_data(n, p);
  SpinorExpansion u(n, p.eB);
  const double root = std::sqrt(d.eta);
  if (r == Parity::positive) {
    if (pol == Spin::up) {
      u.add(0, n - 1, root);
      u.add(2, n - 1, root * d.A);
      u.add(3, n, -root * d.B);
    } else {
      u.add(1, n, root);
      u.add(2, n - 1, -root * d.B);
      u.add(3, n, -root * d.A);
    }
  } else {
    if (pol == Spin::up) {
      u.add(0, n - 1, root * d.B);
      u.add(1, n, root * d.A);
      u.add(3, n, root);
    } else {
      u.add(0, n - 1, -root * d.A);
      u.add(1, n, root * d.B);
      u.add(2, n - 1, root);
    }
  }
  return u;
}

SpinorValue stationary_spinor(int n, Parity r, Spin pol, double s, const PhysParams& p) {
  return stationary_expansion(n, r, pol, p).eval(s);
}

double orthonormality_defect(int n_max, const PhysParams& p, const QuadratureSpec& quad) {
  if (n_max < 0) throw DomainError("orthonormality_defect: n_max must be non-negative");
  if (window_norm_defect(quad, n_max, p.eB) > 1e-6) {
    throw ConvergenceError("orthonormality_defect: s window too narrow for level " + std::to_string(n_max));
  }

  std::vector<SpinorExpansion> states;
  for (int n = 0; n <= n_max; ++n) {
    for (Parity r : {Parity::positive, Parity::negative}) {
      for (Spin pol : {Spin::up, Spin::down}) {
        SpinorExpansion u = stationary_expansion(n, r, pol, p);
        if (u.norm2() > 0.0) states.push_back(std::move(u));
      }
    }
  }

  const int count = std::max(quad.ns, 8 * (n_max + 8));
  const Nodes nodes = make_nodes(quad.s_min, quad.s_max, count, quad.rule);
  std::vector<std::vector<SpinorValue>> samples(states.size());
  for (std::size_t a = 0; a < states.size(); ++a) {
    samples[a].reserve(nodes.x.size());
    for (double s : nodes.x) samples[a].push_back(states[a].eval(s));
  }

  const double jac = phase_space_jacobian(p.eB);
  double worst = 0.0;
  for (std::size_t a = 0; a < states.size(); ++a) {
    for (std::size_t b = a; b < states.size(); ++b) {
      cplx sum{0.0, 0.0};
      for (std::size_t i = 0; i < nodes.x.size(); ++i) sum += nodes.w[i] * samples[a][i].dot(samples[b][i]);
      const double target = (a == b) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(jac * sum - target));
    }
  }
  return worst;
}

}  // namespace diracwig
