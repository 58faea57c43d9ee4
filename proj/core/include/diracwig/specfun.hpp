#pragma once

#include <complex>
#include <vector>

namespace diracwig {

using cplx = std::complex<double>;

/// Dimensionless phase-space point: s = sqrt(eB) x, kx transverse momentum.
struct BasisPoint {
  double s = 0.0;
  double kx = 0.0;
  double eB = 1.0;
};

/// Physicists' Hermite polynomial H_n(s).
double hermite(int n, double s);

/// Generalized Laguerre polynomial L_n^{(alpha)}(z); alpha = 0 is the ordinary one.
double laguerre(int n, int alpha, double z);

/// Normalized Hermite function
///   F_n(s) = (sqrt(eB) / (n! 2^n sqrt(pi)))^{1/2} e^{-s^2/2} H_n(s),
/// with F_n = 0 for n < 0. Evaluated through the normalized recurrence, so it
/// stays finite for large n where H_n and n! overflow separately.
double f_basis(int n, double s, double eB);

/// All F_0..F_nmax at one s, in one recurrence sweep.
std::vector<double> f_basis_all(int nmax, double s, double eB);

/// Diagonal phase-space function
///   L_n(s,kx) = (-1)^n (sqrt(eB)/pi) e^{-(s^2+kx^2)} L_n(2(s^2+kx^2)),  0 for n < 0.
double lag_L(int n, const BasisPoint& p);

/// Derivative phase-space function
///   M_n(s,kx) = ((-1)^n / 2pi) sqrt(eB/n) e^{-(s^2+kx^2)} d/ds L_n(2(s^2+kx^2)).
/// The derivative uses dL_n/dz = -L_{n-1}^{(1)} with chain factor 4s.
/// M_0 is defined as 0; with `strict` set, n <= 0 throws DomainError instead.
double lag_M(int n, const BasisPoint& p, bool strict = false);

/// Off-diagonal phase-space function frak L_mn: the Weyl transform of
/// F_m(s+u) F_n(s-u). Satisfies conj(frak_L(m,n)) == frak_L(n,m) and
/// frak_L(n,n) == lag_L(n).
cplx frak_L(int m, int n, const BasisPoint& p);

/// Dense table T(m,n) = frak_L(m,n,p) for 0 <= m,n <= nmax, filled with one
/// Laguerre recurrence per index difference. Row-major, size (nmax+1)^2.
class FrakLTable {
 public:
  FrakLTable(int nmax, const BasisPoint& p);

  int nmax() const { return nmax_; }
  cplx operator()(int m, int n) const { return data_[static_cast<std::size_t>(m) * stride_ + n]; }

 private:
  int nmax_;
  std::size_t stride_;
  std::vector<cplx> data_;
};

}  // namespace diracwig
