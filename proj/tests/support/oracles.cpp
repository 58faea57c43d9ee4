#include "oracles.hpp"

#include <cmath>

namespace oracle {

namespace {

const cplx I{0.0, 1.0};

Eigen::Matrix2cd pauli(int i) {
  Eigen::Matrix2cd p;
  switch (i) {
    case 1: p << 0, 1, 1, 0; break;
    case 2: p << 0, -I, I, 0; break;
    case 3: p << 1, 0, 0, -1; break;
    default: p << 1, 0, 0, 1; break;
  }
  return p;
}

// Quad precision keeps the alternating explicit sums exact to double rounding.
__extension__ typedef __float128 quad;

quad factorial(int n) {
  quad f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

quad binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

quad power(quad x, int p) {
  quad r = 1;
  for (int i = 0; i < p; ++i) r *= x;
  return r;
}

}  // namespace

long double hermite_sum(int n, long double s) {
  quad total = 0;
  for (int m = 0; 2 * m <= n; ++m) {
    const quad term = power(2 * static_cast<quad>(s), n - 2 * m) / (factorial(m) * factorial(n - 2 * m));
    total += (m % 2 == 0 ? term : -term);
  }
  return static_cast<long double>(factorial(n) * total);
}

long double laguerre_sum(int n, int alpha, long double z) {
  quad total = 0;
  for (int i = 0; i <= n; ++i) {
    const quad term = binomial(n + alpha, n - i) * power(static_cast<quad>(z), i) / factorial(i);
    total += (i % 2 == 0 ? term : -term);
  }
  return static_cast<long double>(total);
}

double hermite_function(int n, double s, double eB) {
  if (n < 0) return 0.0;
  const long double log_norm =
      0.5L * (0.5L * std::log(static_cast<long double>(eB)) - std::lgamma(static_cast<long double>(n) + 1) -
              n * std::log(2.0L) - 0.5L * std::log(static_cast<long double>(pi)));
  const long double ls = s;
  return static_cast<double>(std::exp(log_norm - ls * ls / 2) * hermite_sum(n, ls));
}

double lag_L(int n, double s, double k, double eB) {
  if (n < 0) return 0.0;
  const double r2 = s * s + k * k;
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return sign * std::sqrt(eB) / pi * std::exp(-r2) * static_cast<double>(laguerre_sum(n, 0, 2 * r2));
}

double lag_M(int n, double s, double k, double eB) {
  if (n <= 0) return 0.0;
  const quad z = 2 * (static_cast<quad>(s) * s + static_cast<quad>(k) * k);
  quad dLdz = 0;
  for (int i = 1; i <= n; ++i) {
    const quad term = binomial(n, n - i) * power(z, i - 1) / factorial(i - 1);
    dLdz += (i % 2 == 0 ? term : -term);
  }
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return sign / (2 * pi) * std::sqrt(eB / n) * std::exp(-(s * s + k * k)) * static_cast<double>(dLdz) * 4.0 * s;
}

cplx weyl_hermite_pair(int m, int n, double s, double k, double eB, double du, double umax) {
  const int J = static_cast<int>(std::lround(umax / du));
  cplx total{};
  for (int j = -J; j <= J; ++j) {
    const double u = j * du;
    const double w = (j == -J || j == J) ? 0.5 : 1.0;
    total += w * std::polar(1.0, 2 * k * u) * hermite_function(m, s + u, eB) * hermite_function(n, s - u, eB);
  }
  return total * du / pi;
}

Level level(int n, double m, double kz, double eB) {
  Level d{};
  d.E = std::sqrt(m * m + kz * kz + 2 * n * eB);
  d.A = kz / (d.E + m);
  d.B = std::sqrt(2 * n * eB) / (d.E + m);
  d.eta = (d.E + m) / (2 * d.E);
  return d;
}

Mat4 kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Mat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

Mat4 gamma(int mu) {
  if (mu == 0) return kron(pauli(3), pauli(0));
  return kron(I * pauli(2), pauli(mu));
}

Mat4 gamma5() { return I * gamma(0) * gamma(1) * gamma(2) * gamma(3); }

Mat4 sigma_y_sigma_y() { return kron(pauli(2), pauli(2)); }

Spinor stationary(int n, int r, bool up, double s, double m, double kz, double eB) {
  const Level d = level(n, m, kz, eB);
  const double f0 = hermite_function(n - 1, s, eB);
  const double f1 = hermite_function(n, s, eB);
  Spinor u;
  if (r == 1 && up) u << f0, 0, d.A * f0, -d.B * f1;
  if (r == 1 && !up) u << 0, f1, -d.B * f0, -d.A * f1;
  if (r == 2 && up) u << d.B * f0, d.A * f1, 0, f1;
  if (r == 2 && !up) u << -d.A * f0, d.B * f1, f0, 0;
  return std::sqrt(d.eta) * u;
}

Spinor gaussian(int pol, int n, double s, double t, double m, double kz, double eB) {
  const Level d = level(n, m, kz, eB);
  const cplx early = std::polar(1.0, -d.E * t);
  const cplx late = std::polar(1.0, d.E * t);
  const double sn = std::sin(d.E * t);
  const double f0 = hermite_function(n - 1, s, eB);
  const double f1 = hermite_function(n, s, eB);
  const cplx head = early + late * (d.A * d.A + d.B * d.B);
  Spinor g;
  switch (pol) {
    case 1:
      g << head * f0, 0, -2.0 * I * sn * d.A * f0, 2.0 * I * sn * d.B * f1;
      return d.eta * g;
    case 2:
      g << 0, head * f1, 2.0 * I * sn * d.B * f0, 2.0 * I * sn * d.A * f1;
      return d.eta * g;
    case 3:
      g = late * stationary(n, 2, false, s, m, kz, eB) +
          early * (d.A * stationary(n, 1, true, s, m, kz, eB) - d.B * stationary(n, 1, false, s, m, kz, eB));
      return std::sqrt(d.eta) * g;
    default:
      g = early * (-d.B * stationary(n, 1, true, s, m, kz, eB) - d.A * stationary(n, 1, false, s, m, kz, eB)) +
          late * stationary(n, 2, true, s, m, kz, eB);
      return std::sqrt(d.eta) * g;
  }
}

Spinor cat(bool symmetric, double a, int l, int pol, double s, double t, double m, double kz, double eB) {
  Spinor total = Spinor::Zero();
  for (int k = 0; k <= l; ++k) {
    const int j = symmetric ? 2 * k : 2 * k + 1;
    const double c = std::exp(j * std::log(a / std::sqrt(2.0)) - 0.5 * std::lgamma(j + 1.0));
    total += c * gaussian(pol, j + 1, s, t, m, kz, eB);
  }
  return std::sqrt(cat_norm_series(symmetric, a)) * total;
}

double cat_initial(bool symmetric, double a, double s, double eB) {
  const double left = std::exp(-0.5 * (s - a) * (s - a));
  const double right = std::exp(-0.5 * (s + a) * (s + a));
  // ∫ds of the squared bracket is sqrt(pi) (2 ± 2 e^{-a^2}).
  const double unit = std::sqrt(2.0 / (1.0 + (symmetric ? 1.0 : -1.0) * std::exp(-a * a)));
  return unit * 0.5 * std::pow(eB / pi, 0.25) * (symmetric ? left + right : left - right);
}

double cat_norm_series(bool symmetric, double a) {
  const double x = a * a / 2;
  long double total = 0.0L;
  long double term = symmetric ? 1.0L : static_cast<long double>(x);
  for (int p = symmetric ? 0 : 1; p < 400; p += 2) {
    total += term;
    term *= static_cast<long double>(x) * x / ((p + 1.0L) * (p + 2.0L));
    if (term < 1e-22L * total) break;
  }
  return static_cast<double>(1.0L / total);
}

Mat4 spin_density(const Field& psi, double eB, double smax, double ds) {
  const int n = static_cast<int>(std::lround(2 * smax / ds));
  Mat4 rho = Mat4::Zero();
  for (int i = 0; i <= n; ++i) {
    const Spinor v = psi(-smax + i * ds);
    const double w = (i == 0 || i == n) ? 0.5 : 1.0;
    rho += w * v * v.adjoint();
  }
  return rho * ds / std::sqrt(eB);
}

double spatial_purity(const Field& psi, double eB, double smax, double ds) {
  const int n = static_cast<int>(std::lround(2 * smax / ds));
  std::vector<Spinor> v(n + 1);
  std::vector<double> w(n + 1, 1.0);
  for (int i = 0; i <= n; ++i) v[i] = psi(-smax + i * ds);
  w.front() = w.back() = 0.5;
  double total = 0.0;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) total += w[i] * w[j] * std::norm(v[j].dot(v[i]));
  return total * ds * ds / eB;
}

double concurrence_sq(const Mat4& rho) {
  const Mat4 Y = sigma_y_sigma_y();
  return (rho * Y * rho.conjugate() * Y).trace().real();
}

double entanglement_of_formation(double C2) {
  const double lam = (1.0 - std::sqrt(std::max(0.0, 1.0 - C2))) / 2.0;
  auto h = [](double x) { return x <= 0.0 ? 0.0 : -x * std::log2(x); };
  return h(lam) + h(1.0 - lam);
}

std::vector<Mat4> weyl_column(const Field& psi, double s, const std::vector<double>& k, double du, double umax) {
  const int J = static_cast<int>(std::lround(umax / du));
  std::vector<Mat4> outer(2 * J + 1);
  const Mat4 g0 = gamma(0);
  for (int j = -J; j <= J; ++j) {
    const double w = (j == -J || j == J) ? 0.5 : 1.0;
    outer[j + J] = w * psi(s + j * du) * psi(s - j * du).adjoint() * g0;
  }
  std::vector<Mat4> out;
  out.reserve(k.size());
  for (double kk : k) {
    Mat4 W = Mat4::Zero();
    const cplx step = std::polar(1.0, 2 * kk * du);
    cplx phase = std::polar(1.0, -2 * kk * J * du);
    for (int j = 0; j <= 2 * J; ++j) {
      W += phase * outer[j];
      phase *= step;
    }
    out.push_back(W * (du / pi));
  }
  return out;
}

}  // namespace oracle
