#pragma once

#include <array>

#include "diracwig/expansion.hpp"
#include "diracwig/quadrature.hpp"

namespace diracwig {

/// Rest mass, longitudinal momentum and magnetic coupling (hbar = c = 1).
/// k_y is fixed to zero, so both parities share the coordinate s = sqrt(eB) x.
struct PhysParams {
  double m = 1.0;
  double kz = 1.0;
  double eB = 1.0;

  static PhysParams from_kz2(double m, double kz2, double eB);

  /// Throws ConfigError unless m >= 0, eB > 0 and every field is finite.
  void validate() const;
};

/// Energy and spinor-mixing parameters of Landau level n:
///   E = sqrt(m^2 + kz^2 + 2 n eB), A = kz/(E+m), B = sqrt(2 n eB)/(E+m), eta = (E+m)/(2E).
struct LevelData {
  int n = 0;
  double E = 0.0;
  double A = 0.0;
  double B = 0.0;
  double eta = 0.0;
};

LevelData level_data(int n, const PhysParams& p);

enum class Parity { positive = 1, negative = 2 };
enum class Spin { up, down };

/// Dirac-representation gamma matrices. Component order is
/// (parity+, up), (parity+, down), (parity-, up), (parity-, down).
struct GammaSet {
  std::array<Matrix4c, 4> gamma;  // contravariant gamma^mu
  Matrix4c gamma5;                // i gamma^0 gamma^1 gamma^2 gamma^3
  Matrix4c spin_flip;             // gamma^2 gamma^0
  Matrix4c sigma_y_sigma_y;       // sigma_y (x) sigma_y = -i gamma^2

  /// sigma^{mu nu} = (i/2) [gamma^mu, gamma^nu].
  Matrix4c sigma(int mu, int nu) const;
};

const GammaSet& gammas();

/// Minkowski metric diag(+1, -1, -1, -1).
constexpr double metric(int mu) { return mu == 0 ? 1.0 : -1.0; }

/// Stationary spinor u^{pol}_{n,r} in the Hermite basis (F_{-1} = 0).
/// For n = 0 the spinors u^+_{0,1} and u^-_{0,2} vanish identically.
SpinorExpansion stationary_expansion(int n, Parity r, Spin pol, const PhysParams& p);

/// u^{pol}_{n,r}(s).
SpinorValue stationary_spinor(int n, Parity r, Spin pol, double s, const PhysParams& p);

/// Largest |∫dx u_a† u_b − δ_ab| over all non-null stationary spinors with
/// level <= n_max, computed by quadrature over the s window of `quad`.
/// Throws ConvergenceError when the window cannot hold F_{n_max}
/// (∫F_{n_max}^2 ds off from sqrt(eB) by more than 1e-6).
double orthonormality_defect(int n_max, const PhysParams& p, const QuadratureSpec& quad);

}  // namespace diracwig
