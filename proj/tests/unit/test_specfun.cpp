#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "diracwig/errors.hpp"
#include "diracwig/specfun.hpp"

using namespace diracwig;

namespace {

double rel_diff(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("hermite polynomial examples") {
  CHECK(hermite(0, 3.7) == 1.0);
  CHECK(hermite(3, 0.5) == doctest::Approx(-5.0).epsilon(1e-15));
  CHECK(hermite(2, 0.0) == doctest::Approx(-2.0).epsilon(1e-15));
  CHECK(hermite(4, 1.5) == doctest::Approx(16 * std::pow(1.5, 4) - 48 * 1.5 * 1.5 + 12).epsilon(1e-14));
}

TEST_CASE("hermite recurrence agrees with the explicit sum") {
  for (int n = 0; n <= 20; ++n) {
    for (double s = -6.0; s <= 6.0; s += 0.37) {
      const double ref = static_cast<double>(oracle::hermite_sum(n, s));
      CHECK(std::abs(hermite(n, s) - ref) <= 1e-12 * std::max(1.0, std::abs(ref)));
    }
  }
}

TEST_CASE("laguerre polynomial examples") {
  CHECK(laguerre(0, 3, 7.5) == 1.0);
  CHECK(laguerre(2, 0, 2.0) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(std::abs(laguerre(1, 1, 2.0)) < 1e-15);
  CHECK(laguerre(3, 2, 0.0) == doctest::Approx(10.0).epsilon(1e-15));
}

TEST_CASE("laguerre recurrence agrees with the explicit sum") {
  for (int n = 0; n <= 20; ++n) {
    for (int alpha = 0; alpha <= 6; ++alpha) {
      for (double z = 0.0; z <= 50.0; z += 1.3) {
        const double ref = static_cast<double>(oracle::laguerre_sum(n, alpha, z));
        CHECK(rel_diff(laguerre(n, alpha, z), ref) < 1e-12);
      }
    }
  }
}

TEST_CASE("normalized Hermite functions") {
  CHECK(f_basis(-1, 0.3, 1.0) == 0.0);
  CHECK(f_basis(-4, -2.0, 7.0) == 0.0);
  // F_0(0) = pi^{-1/4}: the general normalization at n = 0. The variant with an extra 1/2 under the
  // root would give ∫F_0^2 ds = sqrt(eB)/2.
  CHECK(f_basis(0, 0.0, 1.0) == doctest::Approx(std::pow(oracle::pi, -0.25)).epsilon(1e-15));
  CHECK(f_basis(0, 0.0, 1.0) == doctest::Approx(0.751126).epsilon(1e-6));
  for (double eB : {0.1, 1.0, 3.0}) {
    for (int n = 0; n <= 40; ++n) {
      for (double s = -9.0; s <= 9.0; s += 0.41) {
        CHECK(std::abs(f_basis(n, s, eB) - oracle::hermite_function(n, s, eB)) < 1e-13);
      }
    }
  }
}

TEST_CASE("f_basis_all matches single evaluations") {
  for (double s : {-3.1, 0.0, 0.7, 5.2}) {
    const auto all = f_basis_all(30, s, 2.0);
    REQUIRE(all.size() == 31);
    for (int n = 0; n <= 30; ++n) CHECK(all[n] == doctest::Approx(f_basis(n, s, 2.0)).epsilon(1e-14));
  }
}

TEST_CASE("Hermite functions are orthonormal under the s integral") {
  const double eB = 2.5;
  const double ds = 0.01;
  for (int n = 0; n <= 12; ++n) {
    for (int m = 0; m <= 12; ++m) {
      double sum = 0.0;
      for (double s = -12.0; s <= 12.0 + 1e-9; s += ds) sum += f_basis(n, s, eB) * f_basis(m, s, eB);
      CHECK(std::abs(sum * ds - (n == m ? std::sqrt(eB) : 0.0)) < 1e-10);
    }
  }
}

TEST_CASE("diagonal and derivative phase-space functions") {
  const BasisPoint origin{0.0, 0.0, 1.0};
  CHECK(lag_L(0, origin) == doctest::Approx(1.0 / oracle::pi).epsilon(1e-15));
  CHECK(lag_L(1, origin) == doctest::Approx(-1.0 / oracle::pi).epsilon(1e-15));
  CHECK(lag_L(-1, origin) == 0.0);
  CHECK(lag_M(1, BasisPoint{1.0, 0.0, 1.0}) == doctest::Approx(2.0 * std::exp(-1.0) / oracle::pi).epsilon(1e-14));
  CHECK(lag_M(1, BasisPoint{1.0, 0.0, 1.0}) == doctest::Approx(0.2341997).epsilon(1e-6));
  for (int n = 1; n <= 6; ++n) CHECK(lag_M(n, BasisPoint{0.0, 1.3, 1.0}) == 0.0);
  CHECK(lag_M(0, BasisPoint{0.4, 0.2, 1.0}) == 0.0);
  CHECK_THROWS_AS(lag_M(0, origin, true), DomainError);
  CHECK_THROWS_AS(lag_M(-2, origin, true), DomainError);

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    const BasisPoint p{u(rng), u(rng), 0.5 + (trial % 4)};
    const int n = trial % 10;
    CHECK(lag_L(n, p) == doctest::Approx(oracle::lag_L(n, p.s, p.kx, p.eB)).epsilon(1e-11));
    CHECK(std::abs(lag_M(n, p) - oracle::lag_M(n, p.s, p.kx, p.eB)) < 1e-12);
  }
}

TEST_CASE("off-diagonal phase-space functions") {
  const BasisPoint p{1.0, 0.0, 1.0};
  CHECK(std::abs(frak_L(0, 1, p) - cplx(std::sqrt(2.0) * std::exp(-1.0) / oracle::pi, 0.0)) < 1e-15);
  CHECK(std::abs(frak_L(0, 1, p).real() - 0.1656044) < 1e-6);

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2.5, 2.5);
  for (int trial = 0; trial < 100; ++trial) {
    const BasisPoint q{u(rng), u(rng), 1.7};
    for (int m = 0; m <= 8; ++m) {
      CHECK(std::abs(frak_L(m, m, q) - cplx(lag_L(m, q), 0.0)) < 1e-14);
      for (int n = 0; n <= 8; ++n) CHECK(std::abs(std::conj(frak_L(m, n, q)) - frak_L(n, m, q)) < 1e-14);
    }
  }
}

TEST_CASE("off-diagonal functions are the Weyl transforms of Hermite function pairs") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 12; ++trial) {
    const BasisPoint q{u(rng), u(rng), 1.3};
    for (int m = 0; m <= 5; ++m) {
      for (int n = 0; n <= 5; ++n) {
        const cplx ref = oracle::weyl_hermite_pair(m, n, q.s, q.kx, q.eB);
        CHECK(std::abs(frak_L(m, n, q) - ref) < 1e-10);
      }
    }
  }
}

TEST_CASE("table evaluation matches pointwise evaluation") {
  for (const BasisPoint p : {BasisPoint{0.3, -1.2, 1.0}, BasisPoint{-4.0, 2.5, 0.1}, BasisPoint{0.0, 0.0, 10.0}}) {
    const FrakLTable table(24, p);
    CHECK(table.nmax() == 24);
    for (int m = 0; m <= 24; ++m) {
      for (int n = 0; n <= 24; ++n) {
        const cplx ref = frak_L(m, n, p);
        CHECK(std::abs(table(m, n) - ref) <= 1e-13 * std::max(1.0, std::abs(ref)));
      }
    }
  }
}

TEST_CASE("bridge identity between neighbouring off-diagonal functions and the derivative function") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 100; ++trial) {
    const BasisPoint p{u(rng), u(rng), 0.7};
    for (int l = 0; l <= 8; ++l) {
      const cplx sum = frak_L(l, l + 1, p) + frak_L(l + 1, l, p);
      CHECK(std::abs(sum.imag()) < 1e-15);
      CHECK(std::abs(sum.real() - std::sqrt(2.0) * lag_M(l + 1, p)) < 1e-13);
    }
  }
}

TEST_CASE("phase-space orthonormality by quadrature") {
  // ∫dx∫dkx = eB^{-1/2} ∫ds∫dkx; trapezoid on [-9, 9]^2.
  const int cutoff = 6;
  for (double eB : {1.0, 2.5}) {
    const double jac = 1.0 / std::sqrt(eB);
    for (int n = 0; n <= cutoff; ++n) {
      const double intL = oracle::trapezoid2d([&](double s, double k) { return lag_L(n, {s, k, eB}); }, 9.0, 240);
      const double intM = oracle::trapezoid2d([&](double s, double k) { return lag_M(n, {s, k, eB}); }, 9.0, 240);
      CHECK(std::abs(jac * intL - 1.0) < 1e-8);
      CHECK(std::abs(jac * intM) < 1e-8);
      for (int m = 0; m <= cutoff; ++m) {
        const double LL = oracle::trapezoid2d(
            [&](double s, double k) { return lag_L(n, {s, k, eB}) * lag_L(m, {s, k, eB}); }, 9.0, 240);
        CHECK(std::abs(jac * LL - (n == m ? std::sqrt(eB) / (2 * oracle::pi) : 0.0)) < 1e-8);
        if (n >= 1 && m >= 1) {
          const double MM = oracle::trapezoid2d(
              [&](double s, double k) { return lag_M(n, {s, k, eB}) * lag_M(m, {s, k, eB}); }, 9.0, 240);
          CHECK(std::abs(jac * MM - (n == m ? std::sqrt(eB) / (2 * oracle::pi) : 0.0)) < 1e-8);
        }
      }
    }
  }
}
