#include <cmath>

#include "doctest.h"
#include "oracles.hpp"

#include "diracwig/errors.hpp"
#include "diracwig/landau.hpp"

using namespace diracwig;

namespace {

const std::array<Parity, 2> kParities{Parity::positive, Parity::negative};
const std::array<Spin, 2> kSpins{Spin::up, Spin::down};

double max_abs(const Matrix4c& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("level data examples") {
  const LevelData d = level_data(1, PhysParams{1.0, 1.0, 1.0});
  CHECK(d.E == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(d.A == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(d.B == doctest::Approx(std::sqrt(2.0) / 3.0).epsilon(1e-15));
  CHECK(d.eta == doctest::Approx(0.75).epsilon(1e-15));

  const LevelData rest = level_data(0, PhysParams{1.0, 0.0, 1.0});
  CHECK(rest.E == 1.0);
  CHECK(rest.A == 0.0);
  CHECK(rest.B == 0.0);
  CHECK(rest.eta == 1.0);

  const LevelData massless = level_data(1, PhysParams{0.0, 0.0, 1.0});
  CHECK(massless.A * massless.A + massless.B * massless.B == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(massless.eta == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("energy constraint eta (A^2 + B^2 + 1) = 1 over a parameter lattice") {
  const double values[] = {0.1, 1.0, 10.0};
  for (int n = 0; n <= 10; ++n)
    for (double m : values)
      for (double kz : values)
        for (double eB : values) {
          const LevelData d = level_data(n, PhysParams{m, kz, eB});
          const oracle::Level o = oracle::level(n, m, kz, eB);
          CHECK(std::abs(d.eta * (d.A * d.A + d.B * d.B + 1.0) - 1.0) < 4e-16);
          CHECK(d.A >= 0.0);
          CHECK(d.A <= 1.0);
          CHECK(d.B >= 0.0);
          CHECK(d.B <= 1.0);
          CHECK(d.E == doctest::Approx(o.E).epsilon(1e-15));
        }
}

TEST_CASE("parameter validation") {
  CHECK_NOTHROW(PhysParams{0.0, 0.0, 1.0}.validate());
  CHECK_THROWS_AS((PhysParams{-1.0, 0.0, 1.0}.validate()), ConfigError);
  CHECK_THROWS_AS((PhysParams{1.0, 0.0, 0.0}.validate()), ConfigError);
  CHECK_THROWS_AS((PhysParams{1.0, std::nan(""), 1.0}.validate()), ConfigError);
  const PhysParams p = PhysParams::from_kz2(2.0, 9.0, 0.5);
  CHECK(p.kz == doctest::Approx(3.0));
  CHECK(p.m == 2.0);
  CHECK(p.eB == 0.5);
}

TEST_CASE("gamma matrices match the Pauli construction and obey the Clifford algebra") {
  const GammaSet& g = gammas();
  const Matrix4c I4 = Matrix4c::Identity();
  for (int mu = 0; mu < 4; ++mu) {
    CHECK(max_abs(g.gamma[mu] - oracle::gamma(mu)) == 0.0);
    for (int nu = 0; nu < 4; ++nu) {
      const Matrix4c anti = g.gamma[mu] * g.gamma[nu] + g.gamma[nu] * g.gamma[mu];
      const double target = mu == nu ? 2.0 * metric(mu) : 0.0;
      CHECK(max_abs(anti - target * I4) == 0.0);
    }
    CHECK(max_abs(g.gamma5 * g.gamma[mu] + g.gamma[mu] * g.gamma5) == 0.0);
  }
  CHECK(max_abs(g.gamma5 - oracle::gamma5()) == 0.0);
  CHECK(max_abs(g.gamma5 * g.gamma5 - I4) == 0.0);
  CHECK(max_abs(g.gamma5 - g.gamma5.adjoint()) == 0.0);
  CHECK(max_abs(g.sigma_y_sigma_y - oracle::sigma_y_sigma_y()) == 0.0);
  CHECK(max_abs(g.sigma_y_sigma_y - cplx(0.0, -1.0) * g.gamma[2]) == 0.0);
  CHECK(max_abs(g.spin_flip - g.gamma[2] * g.gamma[0]) == 0.0);
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const Matrix4c ref = cplx(0.0, 0.5) * (g.gamma[mu] * g.gamma[nu] - g.gamma[nu] * g.gamma[mu]);
      CHECK(max_abs(g.sigma(mu, nu) - ref) < 1e-16);
    }
}

TEST_CASE("stationary spinors reproduce the closed-form components") {
  const PhysParams p{1.0, 1.0, 1.0};
  const LevelData d = level_data(1, p);
  const double s = 0.4;
  const SpinorValue u = stationary_spinor(1, Parity::positive, Spin::up, s, p);
  const double f0 = f_basis(0, s, 1.0);
  const double f1 = f_basis(1, s, 1.0);
  const double r = std::sqrt(d.eta);
  CHECK(std::abs(u(0) - r * f0) < 1e-15);
  CHECK(std::abs(u(1)) == 0.0);
  CHECK(std::abs(u(2) - r * d.A * f0) < 1e-15);
  CHECK(std::abs(u(3) + r * d.B * f1) < 1e-15);

  for (const PhysParams q : {PhysParams{1.0, 1.0, 1.0}, PhysParams{0.3, 2.0, 0.5}, PhysParams{0.0, 0.7, 3.0}}) {
    for (int n = 0; n <= 6; ++n)
      for (Parity par : kParities)
        for (Spin spin : kSpins)
          for (double x = -4.0; x <= 4.0; x += 0.5) {
            const SpinorValue lib = stationary_spinor(n, par, spin, x, q);
            const oracle::Spinor ref =
                oracle::stationary(n, par == Parity::positive ? 1 : 2, spin == Spin::up, x, q.m, q.kz, q.eB);
            CHECK((lib - ref).cwiseAbs().maxCoeff() < 1e-14);
            CHECK((stationary_expansion(n, par, spin, q).eval(x) - lib).cwiseAbs().maxCoeff() < 1e-14);
          }
  }
}

TEST_CASE("null spinors at n = 0") {
  const PhysParams p{1.0, 1.0, 1.0};
  CHECK(stationary_expansion(0, Parity::positive, Spin::up, p).norm2() == 0.0);
  CHECK(stationary_expansion(0, Parity::negative, Spin::down, p).norm2() == 0.0);
  CHECK(stationary_expansion(0, Parity::positive, Spin::down, p).norm2() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("spinor orthonormality by direct quadrature of the closed-form spinors") {
  const PhysParams p{0.8, 1.3, 1.7};
  for (int n = 1; n <= 5; ++n) {
    std::vector<oracle::Field> fields;
    for (int r : {1, 2})
      for (bool up : {true, false})
        fields.push_back([=](double s) { return oracle::stationary(n, r, up, s, p.m, p.kz, p.eB); });
    for (std::size_t a = 0; a < fields.size(); ++a)
      for (std::size_t b = 0; b < fields.size(); ++b) {
        double sum_re = 0.0;
        double sum_im = 0.0;
        const double ds = 0.01;
        for (double s = -12.0; s <= 12.0 + 1e-9; s += ds) {
          const cplx v = fields[a](s).dot(fields[b](s));
          sum_re += v.real();
          sum_im += v.imag();
        }
        const double target = a == b ? 1.0 : 0.0;
        CHECK(std::abs(sum_re * ds / std::sqrt(p.eB) - target) < 1e-10);
        CHECK(std::abs(sum_im) < 1e-12);
      }
  }
}

TEST_CASE("orthonormality defect") {
  CHECK(orthonormality_defect(3, PhysParams{}, QuadratureSpec{}) < 1e-8);
  CHECK(orthonormality_defect(8, PhysParams{0.5, 2.0, 3.0}, QuadratureSpec{}) < 1e-8);
  CHECK(orthonormality_defect(0, PhysParams{}, QuadratureSpec{}) < 1e-10);
  QuadratureSpec narrow;
  narrow.s_min = -1.0;
  narrow.s_max = 1.0;
  CHECK_THROWS_AS(orthonormality_defect(3, PhysParams{}, narrow), ConvergenceError);
}
