#include "diracwig/wigner.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "diracwig/errors.hpp"

namespace diracwig {

namespace {

constexpr double gamma0_sign(int nu) { return nu < 2 ? 1.0 : -1.0; }

BasisPoint with_eB(const BasisPoint& point, double eB) { return BasisPoint{point.s, point.kx, eB}; }

}  // namespace

GaussianWignerCoeffs gaussian_coeffs(int n, double t, const PhysParams& p) {
  if (n < 1) throw DomainError("gaussian_coeffs: n must be >= 1");
  const LevelData d = level_data(n, p);
  const double sn = std::sin(d.E * t);
  const double cs = std::cos(d.E * t);
  const double x = d.eta * d.eta * sn * sn;
  const cplx i{0.0, 1.0};
  const cplx X{cs, sn * (1.0 - 2.0 * d.eta)};

  GaussianWignerCoeffs c;
  c.a11 = 1.0 - 4.0 * (d.A * d.A + d.B * d.B) * x;
  c.a33 = -4.0 * d.A * d.A * x;
  c.a44 = -4.0 * d.B * d.B * x;
  c.a13 = -2.0 * i * d.eta * sn * d.A * X;
  c.a31 = -std::conj(c.a13);
  c.a14 = 2.0 * i * d.eta * sn * d.B * X;
  c.a41 = -std::conj(c.a14);
  c.a34 = -4.0 * d.A * d.B * x;
  c.a43 = c.a34;
  return c;
}

WignerValue gaussian_wigner(int n, double t, const BasisPoint& point, const PhysParams& p) {
  const GaussianWignerCoeffs c = gaussian_coeffs(n, t, p);
  const BasisPoint q = with_eB(point, p.eB);
  const double L_lo = lag_L(n - 1, q);
  const double L_hi = lag_L(n, q);
  const cplx up = frak_L(n - 1, n, q);
  const cplx down = std::conj(up);

  WignerValue W = WignerValue::Zero();
  W(0, 0) = c.a11 * L_lo;
  W(2, 2) = c.a33 * L_lo;
  W(3, 3) = c.a44 * L_hi;
  W(0, 2) = c.a13 * L_lo;
  W(2, 0) = c.a31 * L_lo;
  W(0, 3) = c.a14 * up;
  W(3, 0) = c.a41 * down;
  W(2, 3) = -c.a34 * up;
  W(3, 2) = -c.a43 * down;
  return W;
}

WignerValue gaussian_wigner_real(int n, double t, const BasisPoint& point, const PhysParams& p) {
  const GaussianWignerCoeffs c = gaussian_coeffs(n, t, p);
  const BasisPoint q = with_eB(point, p.eB);
  const double L_lo = lag_L(n - 1, q);
  const double L_hi = lag_L(n, q);
  const double M = lag_M(n, q);

  WignerValue W = WignerValue::Zero();
  W(0, 0) = c.a11 * L_lo;
  W(2, 2) = c.a33 * L_lo;
  W(3, 3) = c.a44 * L_hi;
  W(0, 2) = c.a13 * L_lo;
  W(2, 0) = c.a31 * L_lo;
  W(0, 3) = c.a14 * M;
  W(3, 0) = c.a41 * M;
  W(2, 3) = c.a34 * M;
  W(3, 2) = c.a43 * M;
  return W;
}

WignerSeries gaussian_coefficient_series(const GaussianWignerCoeffs& c, int n, double eB) {
  if (n < 1) throw DomainError("gaussian_coefficient_series: n must be >= 1");
  std::array<std::vector<WignerTerm>, 16> terms;
  auto put = [&](int mu, int nu, int p, int q, cplx w) { terms[static_cast<std::size_t>(4 * mu + nu)].push_back({p, q, w}); };
  const int lo = n - 1;
  put(0, 0, lo, lo, c.a11);
  put(2, 2, lo, lo, c.a33);
  put(3, 3, n, n, c.a44);
  put(0, 2, lo, lo, c.a13);
  put(2, 0, lo, lo, c.a31);
  put(0, 3, lo, n, c.a14);
  put(3, 0, n, lo, c.a41);
  put(2, 3, lo, n, -c.a34);
  put(3, 2, n, lo, -c.a43);
  return WignerSeries(std::move(terms), n, eB);
}

WignerValue gaussian_wigner(const GaussianSpec& spec, double t, const BasisPoint& point) {
  spec.validate();
  if (spec.pol == 1) return gaussian_wigner(spec.n, t, point, spec.p);
  return WignerSeries(gaussian_expansion(spec, t))(with_eB(point, spec.p.eB));
}

WignerSeries::WignerSeries(const SpinorExpansion& psi) : max_index_(psi.max_index()), eB_(psi.eB()) {
  const auto& C = psi.coeffs();
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      auto& list = terms_[index(mu, nu)];
      for (int p = 0; p <= max_index_; ++p) {
        const cplx left = C(mu, p);
        if (left == cplx{}) continue;
        for (int q = 0; q <= max_index_; ++q) {
          const cplx right = C(nu, q);
          if (right == cplx{}) continue;
          list.push_back(WignerTerm{p, q, left * std::conj(right) * gamma0_sign(nu)});
        }
      }
    }
  }
}

WignerSeries::WignerSeries(std::array<std::vector<WignerTerm>, 16> terms, int max_index, double eB)
    : terms_(std::move(terms)), max_index_(max_index), eB_(eB) {
  for (const auto& list : terms_) {
    for (const WignerTerm& term : list) {
      if (term.p < 0 || term.q < 0 || term.p > max_index_ || term.q > max_index_) {
        throw DomainError("WignerSeries: term index outside 0..max_index");
      }
    }
  }
}

cplx WignerSeries::quadratic(int mu, int nu, int ka, int la) const {
  const auto& left = terms_[index(mu, nu)];
  const auto& right = terms_[index(ka, la)];
  if (left.empty() || right.empty()) return {};
  const auto size = static_cast<Eigen::Index>(max_index_ + 1);
  Eigen::MatrixXcd dense = Eigen::MatrixXcd::Zero(size, size);
  for (const WignerTerm& term : right) dense(term.q, term.p) += term.weight;
  cplx sum{};
  for (const WignerTerm& term : left) sum += term.weight * dense(term.p, term.q);
  return sum;
}

WignerSeries WignerSeries::decohered() const {
  std::array<std::vector<WignerTerm>, 16> diag;
  for (int mu = 0; mu < 4; ++mu) diag[index(mu, mu)] = terms_[index(mu, mu)];
  return WignerSeries(std::move(diag), max_index_, eB_);
}

WignerValue WignerSeries::operator()(const BasisPoint& point) const {
  return evaluate(FrakLTable(max_index_, with_eB(point, eB_)));
}

WignerValue WignerSeries::evaluate(const FrakLTable& table) const {
  WignerValue W = WignerValue::Zero();
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      cplx sum{};
      for (const WignerTerm& term : terms_[index(mu, nu)]) sum += term.weight * table(term.p, term.q);
      W(mu, nu) = sum;
    }
  }
  return W;
}

WignerValue WignerSeries::mean() const {
  WignerValue W = WignerValue::Zero();
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      cplx sum{};
      for (const WignerTerm& term : terms_[index(mu, nu)]) {
        if (term.p == term.q) sum += term.weight;
      }
      W(mu, nu) = sum;
    }
  }
  return W;
}

CatWignerSeries cat_wigner_series(const CatSpec& spec, double t, Diagnostics* diag) {
  spec.validate();
  return CatWignerSeries{WignerSeries(cat_expansion(spec, t, diag)), cat_norm_constant(spec.sym, spec.a),
                         spec.truncation_error()};
}

WignerValue cat_wigner(const CatSpec& spec, double t, const BasisPoint& point, Diagnostics* diag) {
  return cat_wigner_series(spec, t, diag).series(point);
}

double quasi_density(const WignerValue& W) {
  const cplx tr = W(0, 0) + W(1, 1) - W(2, 2) - W(3, 3);
  if (std::abs(tr.imag()) > 1e-12 * (1.0 + W.cwiseAbs().maxCoeff())) {
    throw DomainError("quasi_density: Tr[W gamma0] has an imaginary part");
  }
  return tr.real();
}

CliffordComponents clifford_components(const WignerValue& W) {
  const GammaSet& g = gammas();
  const cplx i{0.0, 1.0};
  CliffordComponents c;
  c.S = W.trace() / 4.0;
  c.Pi = (g.gamma5 * W).trace() / (4.0 * i);
  for (int mu = 0; mu < 4; ++mu) {
    const Matrix4c& gm = g.gamma[static_cast<std::size_t>(mu)];
    c.V[static_cast<std::size_t>(mu)] = (gm * W).trace() / 4.0;
    c.A[static_cast<std::size_t>(mu)] = (g.gamma5 * gm * W).trace() / 4.0;
    for (int nu = 0; nu < 4; ++nu) {
      c.T[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)] = (g.sigma(mu, nu) * W).trace() / 4.0;
    }
  }
  return c;
}

WignerValue reconstruct(const CliffordComponents& c) {
  const GammaSet& g = gammas();
  const cplx i{0.0, 1.0};
  WignerValue W = c.S * Matrix4c::Identity() + i * c.Pi * g.gamma5;
  for (int mu = 0; mu < 4; ++mu) {
    const auto m = static_cast<std::size_t>(mu);
    const Matrix4c lower = metric(mu) * g.gamma[m];
    W += lower * c.V[m] + lower * g.gamma5 * c.A[m];
    for (int nu = 0; nu < 4; ++nu) {
      const auto n = static_cast<std::size_t>(nu);
      W += 0.5 * metric(mu) * metric(nu) * g.sigma(mu, nu) * c.T[m][n];
    }
  }
  return W;
}

double support_radius(int max_index, double center) {
  return std::abs(center) + std::sqrt(2.0 * max_index + 1.0) + 8.0;
}

std::vector<WignerValue> weyl_oracle_column(const SpinorField& phi, double t, double s, const std::vector<double>& kx,
                                            const OracleSpec& spec) {
  if (!(spec.du > 0.0) || !(spec.support > 0.0)) throw ConfigError("weyl_oracle: du and support must be positive");
  const int half = 2 * static_cast<int>(std::ceil(spec.support / (2.0 * spec.du)));
  const std::size_t count = static_cast<std::size_t>(2 * half + 1);

  Matrix4c g0 = Matrix4c::Zero();
  g0.diagonal() << 1.0, 1.0, -1.0, -1.0;

  std::vector<double> u(count);
  std::vector<Matrix4c> outer(count);
  for (std::size_t j = 0; j < count; ++j) {
    u[j] = (static_cast<int>(j) - half) * spec.du;
    const SpinorValue plus = phi(s + u[j], t);
    const SpinorValue minus = phi(s - u[j], t);
    outer[j] = plus * minus.adjoint() * g0;
  }
  const double edge = std::max(outer.front().cwiseAbs().maxCoeff(), outer.back().cwiseAbs().maxCoeff());
  if (edge > spec.tol) {
    throw ConvergenceError("weyl_oracle: integrand not negligible at the window edge (" + std::to_string(edge) + ")");
  }

  std::vector<WignerValue> out;
  out.reserve(kx.size());
  for (double k : kx) {
    Matrix4c fine = Matrix4c::Zero();
    Matrix4c coarse = Matrix4c::Zero();
    for (std::size_t j = 0; j < count; ++j) {
      const double w = (j == 0 || j + 1 == count) ? 0.5 : 1.0;
      const Matrix4c term = std::polar(1.0, 2.0 * k * u[j]) * outer[j];
      fine += w * term;
      // Every other node, with u = 0 among them: step 2 du.
      if ((static_cast<int>(j) - half) % 2 == 0) coarse += w * term;
    }
    fine *= spec.du / std::numbers::pi;
    coarse *= 2.0 * spec.du / std::numbers::pi;
    const double err = (fine - coarse).cwiseAbs().maxCoeff();
    if (err > spec.tol) {
      throw ConvergenceError("weyl_oracle: step test failed (difference " + std::to_string(err) + ")");
    }
    out.push_back(fine);
  }
  return out;
}

WignerValue weyl_oracle(const SpinorField& phi, double t, const BasisPoint& point, const OracleSpec& spec) {
  return weyl_oracle_column(phi, t, point.s, {point.kx}, spec).front();
}

}  // namespace diracwig
