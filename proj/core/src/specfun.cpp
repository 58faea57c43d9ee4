#include "diracwig/specfun.hpp"

#include <cmath>
#include <numbers>

#include "diracwig/errors.hpp"

namespace diracwig {

namespace {

constexpr double kPi = std::numbers::pi;

// Laguerre L_n^{(alpha)}(z) and L_{n-1}^{(alpha)}(z) from the three-term recurrence.
double laguerre_recurrence(int n, double alpha, double z) {
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + alpha - z;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + alpha - z) * cur - (k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

double hermite(int n, double s) {
  if (n < 0) return 0.0;
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * s;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * s * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double laguerre(int n, int alpha, double z) {
  if (n < 0) return 0.0;
  return laguerre_recurrence(n, static_cast<double>(alpha), z);
}

std::vector<double> f_basis_all(int nmax, double s, double eB) {
  std::vector<double> out(nmax >= 0 ? static_cast<std::size_t>(nmax) + 1 : 0);
  if (nmax < 0) return out;
  const double scale = std::pow(eB, 0.25);
  out[0] = scale * std::pow(kPi, -0.25) * std::exp(-0.5 * s * s);
  if (nmax >= 1) out[1] = std::sqrt(2.0) * s * out[0];
  for (int k = 1; k < nmax; ++k) {
    out[k + 1] = std::sqrt(2.0 / (k + 1.0)) * s * out[k] - std::sqrt(k / (k + 1.0)) * out[k - 1];
  }
  return out;
}

double f_basis(int n, double s, double eB) {
  if (n < 0) return 0.0;
  return f_basis_all(n, s, eB)[static_cast<std::size_t>(n)];
}

double lag_L(int n, const BasisPoint& p) {
  if (n < 0) return 0.0;
  const double r2 = p.s * p.s + p.kx * p.kx;
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return sign * std::sqrt(p.eB) / kPi * std::exp(-r2) * laguerre(n, 0, 2.0 * r2);
}

double lag_M(int n, const BasisPoint& p, bool strict) {
  if (n <= 0) {
    if (strict) throw DomainError("lag_M: index must be >= 1");
    return 0.0;
  }
  const double r2 = p.s * p.s + p.kx * p.kx;
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  const double dL_ds = -laguerre(n - 1, 1, 2.0 * r2) * 4.0 * p.s;
  return sign / (2.0 * kPi) * std::sqrt(p.eB / n) * std::exp(-r2) * dL_ds;
}

cplx frak_L(int m, int n, const BasisPoint& p) {
  if (m < 0 || n < 0) return {0.0, 0.0};
  if (m > n) return std::conj(frak_L(n, m, p));
  const int alpha = n - m;
  const double r2 = p.s * p.s + p.kx * p.kx;
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  const double ratio = std::exp(0.5 * (std::lgamma(m + 1.0) - std::lgamma(n + 1.0)));
  const cplx base = std::sqrt(2.0) * cplx(p.s, -p.kx);
  cplx power{1.0, 0.0};
  for (int k = 0; k < alpha; ++k) power *= base;
  return sign * std::sqrt(p.eB) / kPi * ratio * std::exp(-r2) * power * laguerre(m, alpha, 2.0 * r2);
}

FrakLTable::FrakLTable(int nmax, const BasisPoint& p)
    : nmax_(nmax), stride_(static_cast<std::size_t>(nmax) + 1), data_(stride_ * stride_) {
  const double r2 = p.s * p.s + p.kx * p.kx;
  const double z = 2.0 * r2;
  const double pref = std::sqrt(p.eB) / kPi * std::exp(-r2);
  const cplx base = std::sqrt(2.0) * cplx(p.s, -p.kx);

  cplx power{1.0, 0.0};  // (sqrt2 (s - i kx))^alpha
  double inv_sqrt_alpha_fact = 1.0;
  for (int alpha = 0; alpha <= nmax; ++alpha) {
    if (alpha > 0) {
      power *= base;
      inv_sqrt_alpha_fact /= std::sqrt(static_cast<double>(alpha));
    }
    double ratio = inv_sqrt_alpha_fact;  // sqrt(m! / (m+alpha)!)
    double lag_prev = 0.0;
    double lag_cur = 1.0;
    for (int m = 0; m + alpha <= nmax; ++m) {
      if (m == 1) {
        lag_prev = 1.0;
        lag_cur = 1.0 + alpha - z;
      } else if (m > 1) {
        const double next = ((2.0 * (m - 1) + 1.0 + alpha - z) * lag_cur - (m - 1 + alpha) * lag_prev) / m;
        lag_prev = lag_cur;
        lag_cur = next;
      }
      if (m > 0) ratio *= std::sqrt(static_cast<double>(m) / (m + alpha));
      const double sign = (m % 2 == 0) ? 1.0 : -1.0;
      const cplx value = sign * pref * ratio * lag_cur * power;
      const int n = m + alpha;
      data_[static_cast<std::size_t>(m) * stride_ + n] = value;
      data_[static_cast<std::size_t>(n) * stride_ + m] = std::conj(value);
    }
  }
}

}  // namespace diracwig
