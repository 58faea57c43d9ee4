#include "diracwig/expansion.hpp"

#include <algorithm>

namespace diracwig {

SpinorExpansion::SpinorExpansion(int max_index, double eB)
    : coeffs_(Coeffs::Zero(4, std::max(max_index, 0) + 1)), eB_(eB) {}

void SpinorExpansion::add(int component, int j, cplx value) {
  if (j < 0) return;
  if (j > max_index()) {
    const auto old = coeffs_.cols();
    coeffs_.conservativeResize(Eigen::NoChange, j + 1);
    coeffs_.rightCols(j + 1 - old).setZero();
  }
  coeffs_(component, j) += value;
}

cplx SpinorExpansion::at(int component, int j) const {
  if (j < 0 || j > max_index()) return {0.0, 0.0};
  return coeffs_(component, j);
}

SpinorExpansion& SpinorExpansion::operator+=(const SpinorExpansion& other) {
  if (other.max_index() > max_index()) {
    const auto old = coeffs_.cols();
    coeffs_.conservativeResize(Eigen::NoChange, other.coeffs_.cols());
    coeffs_.rightCols(other.coeffs_.cols() - old).setZero();
  }
  if (coeffs_.cols() == 0) eB_ = other.eB_;
  coeffs_.leftCols(other.coeffs_.cols()) += other.coeffs_;
  return *this;
}

SpinorExpansion& SpinorExpansion::operator*=(cplx factor) {
  coeffs_ *= factor;
  return *this;
}

SpinorValue SpinorExpansion::eval(double s) const {
  const std::vector<double> f = f_basis_all(max_index(), s, eB_);
  SpinorValue out = SpinorValue::Zero();
  for (int j = 0; j <= max_index(); ++j) out += coeffs_.col(j) * f[static_cast<std::size_t>(j)];
  return out;
}

double SpinorExpansion::norm2() const { return coeffs_.squaredNorm(); }

Matrix4c SpinorExpansion::spin_density() const { return coeffs_ * coeffs_.adjoint(); }

Eigen::MatrixXcd SpinorExpansion::spatial_density() const {
  return coeffs_.transpose() * coeffs_.conjugate();
}

cplx inner(const SpinorExpansion& a, const SpinorExpansion& b) {
  const auto cols = std::min(a.coeffs().cols(), b.coeffs().cols());
  cplx sum{0.0, 0.0};
  for (Eigen::Index j = 0; j < cols; ++j) sum += a.coeffs().col(j).dot(b.coeffs().col(j));
  return sum;
}

}  // namespace diracwig
