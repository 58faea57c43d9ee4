#pragma once

#include <array>
#include <functional>
#include <vector>

#include "diracwig/expansion.hpp"
#include "diracwig/landau.hpp"
#include "diracwig/states.hpp"

namespace diracwig {

/// Equal-time Wigner matrix at one phase-space point,
///   W(s, kx) = pi^{-1} ∫du e^{2 i kx u} phi(s+u) phi†(s-u) gamma^0.
using WignerValue = Matrix4c;

/// Time-dependent coefficients of the G^(1)_n Wigner matrix. With X = cos + i sin (1 - 2 eta):
///   a11 = 1 - 4(A²+B²) eta² sin², a33 = -4A² eta² sin², a44 = -4B² eta² sin²,
///   a13 = -2i eta A sin X, a14 = 2i eta B sin X, a31 = -conj(a13), a41 = -conj(a14),
///   a34 = a43 = -4AB eta² sin².
struct GaussianWignerCoeffs {
  double a11 = 1.0;
  double a33 = 0.0;
  double a44 = 0.0;
  cplx a13{};
  cplx a31{};
  cplx a14{};
  cplx a41{};
  cplx a34{};
  cplx a43{};
};

GaussianWignerCoeffs gaussian_coeffs(int n, double t, const PhysParams& p);

/// Weyl transform of G^(1)_n: a_ij times L_{n-1}, L_n or frakL_{n-1,n}; the (3,4)/(4,3)
/// slots carry -a34 / -a43. Only s and kx of `point` are used, eB comes from `p`.
WignerValue gaussian_wigner(int n, double t, const BasisPoint& point, const PhysParams& p);

/// Same coefficients placed on the real derivative functions: a14, a41, a34, a43 multiply M_n.
/// Shares every phase-space average with gaussian_wigner but is not the pointwise transform.
WignerValue gaussian_wigner_real(int n, double t, const BasisPoint& point, const PhysParams& p);

/// Any polarization: closed form for pol 1, coefficient series otherwise.
WignerValue gaussian_wigner(const GaussianSpec& spec, double t, const BasisPoint& point);

/// One term weight * frakL_{p q} of a matrix element.
struct WignerTerm {
  int p = 0;
  int q = 0;
  cplx weight{};
};

/// Wigner matrix of a spinor expansion as explicit term tables,
///   W_{mu nu} = sum (C_{mu p} conj(C_{nu q}) g_nu) frakL_{p q},
/// g_nu the gamma^0 sign. Built once per (state, t), then evaluated at many points.
class WignerSeries {
 public:
  explicit WignerSeries(const SpinorExpansion& psi);

  /// Explicit term lists, indexed 4*mu + nu.
  WignerSeries(std::array<std::vector<WignerTerm>, 16> terms, int max_index, double eB);

  const std::vector<WignerTerm>& terms(int mu, int nu) const { return terms_[index(mu, nu)]; }
  int max_index() const { return max_index_; }
  double eB() const { return eB_; }

  WignerValue operator()(const BasisPoint& point) const;
  WignerValue evaluate(const FrakLTable& table) const;

  /// ∫dx∫dkx W, exact through ∫∫frakL_pq = delta_pq.
  WignerValue mean() const;

  /// (2 pi / sqrt(eB)) ∫dx∫dkx W_{mu nu} W_{ka la}, exact through
  /// ∫∫frakL_pq frakL_p'q' = (sqrt(eB) / 2 pi) delta_pq' delta_qp'.
  cplx quadratic(int mu, int nu, int ka, int la) const;

  /// Keeps the diagonal elements only.
  WignerSeries decohered() const;

 private:
  static std::size_t index(int mu, int nu) { return static_cast<std::size_t>(4 * mu + nu); }

  std::array<std::vector<WignerTerm>, 16> terms_;
  int max_index_ = 0;
  double eB_ = 1.0;
};

/// The G^(1)_n matrix as a one-term-per-element series built from (possibly
/// perturbed) coefficients, with the same placements as gaussian_wigner.
WignerSeries gaussian_coefficient_series(const GaussianWignerCoeffs& c, int n, double eB);

/// Cat-state series plus its bookkeeping.
struct CatWignerSeries {
  WignerSeries series;
  double norm_constant = 1.0;
  double truncation_error = 0.0;
};

CatWignerSeries cat_wigner_series(const CatSpec& spec, double t, Diagnostics* diag = nullptr);
WignerValue cat_wigner(const CatSpec& spec, double t, const BasisPoint& point, Diagnostics* diag = nullptr);

/// Tr[W gamma^0]. Throws DomainError if the imaginary residue exceeds 1e-12 (relative).
double quasi_density(const WignerValue& W);

/// Coefficients on the sixteen Clifford generators,
///   W = S + i gamma5 Pi + gamma_mu V^mu + gamma_mu gamma5 A^mu + (1/2) sigma_{mu nu} T^{mu nu}.
/// Stored complex so that arbitrary matrices round-trip; physical Wigner matrices give real values.
struct CliffordComponents {
  cplx S{};
  cplx Pi{};
  std::array<cplx, 4> V{};
  std::array<cplx, 4> A{};
  std::array<std::array<cplx, 4>, 4> T{};
};

CliffordComponents clifford_components(const WignerValue& W);
WignerValue reconstruct(const CliffordComponents& c);

/// Brute-force Weyl transform by trapezoid quadrature in u.
using SpinorField = std::function<SpinorValue(double s, double t)>;

struct OracleSpec {
  /// phi is taken as zero for |s| > support; the u integral runs over [-support, support].
  double support = 12.0;
  double du = 0.05;
  /// Accept when the step-du and step-2du sums differ by at most this much.
  double tol = 1e-9;
};

/// Support radius for states built from F_0..F_max_index displaced by `center`.
double support_radius(int max_index, double center = 0.0);

WignerValue weyl_oracle(const SpinorField& phi, double t, const BasisPoint& point, const OracleSpec& spec = {});

/// Oracle on a column of fixed s, sharing the spinor samples across all kx.
std::vector<WignerValue> weyl_oracle_column(const SpinorField& phi, double t, double s, const std::vector<double>& kx,
                                            const OracleSpec& spec = {});

}  // namespace diracwig
