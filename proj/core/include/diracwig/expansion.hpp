#pragma once

#include <Eigen/Dense>

#include "diracwig/specfun.hpp"

namespace diracwig {

using SpinorValue = Eigen::Vector4cd;
using Matrix4c = Eigen::Matrix4cd;

/// A four-component spinor written in the Hermite basis,
///   psi_i(s) = sum_j coeffs(i, j) F_j(s).
/// The F_j are orthonormal under ∫dx = eB^{-1/2} ∫ds, so sum |coeffs|^2 equals
/// ∫dx |psi|^2. Every state in the library reduces to this form, which gives
/// exact reduced density matrices without quadrature.
class SpinorExpansion {
 public:
  using Coeffs = Eigen::Matrix<cplx, 4, Eigen::Dynamic>;

  SpinorExpansion() = default;
  SpinorExpansion(int max_index, double eB);

  int max_index() const { return static_cast<int>(coeffs_.cols()) - 1; }
  double eB() const { return eB_; }
  const Coeffs& coeffs() const { return coeffs_; }

  /// Coefficient of F_j in component i (0-based component). Ignores j < 0.
  void add(int component, int j, cplx value);
  cplx at(int component, int j) const;

  SpinorExpansion& operator+=(const SpinorExpansion& other);
  SpinorExpansion& operator*=(cplx factor);

  /// psi(s), the spinor in configuration space.
  SpinorValue eval(double s) const;

  /// ∫dx psi†psi.
  double norm2() const;

  /// Spin-parity reduced density matrix ∫dx psi psi†.
  Matrix4c spin_density() const;

  /// Phase-space reduced density matrix R_pq = sum_i c_ip conj(c_iq).
  Eigen::MatrixXcd spatial_density() const;

 private:
  Coeffs coeffs_;
  double eB_ = 1.0;
};

/// ∫dx a†b.
cplx inner(const SpinorExpansion& a, const SpinorExpansion& b);

}  // namespace diracwig
