#pragma once

#include <cmath>
#include <memory>
#include <type_traits>
#include <vector>

#include "diracwig/quadrature.hpp"
#include "diracwig/wigner.hpp"

namespace diracwig {

/// Wigner matrices sampled on the tensor nodes of a QuadratureSpec, kept in
/// memory so that many functionals can be integrated from one evaluation pass.
/// Rows (fixed s) are filled in parallel; every reduction runs in a fixed order.
class WignerGrid {
 public:
  /// threads <= 0 uses the hardware concurrency.
  WignerGrid(const WignerSeries& series, const QuadratureSpec& quad, int threads = 0);

  const QuadratureSpec& quad() const { return quad_; }
  const Nodes& s_nodes() const { return s_; }
  const Nodes& k_nodes() const { return k_; }
  std::size_t rows() const { return s_.x.size(); }
  std::size_t cols() const { return k_.x.size(); }
  const WignerValue& at(std::size_t i, std::size_t j) const { return values_[i * cols() + j]; }
  double eB() const { return eB_; }

  /// ∫dx∫dkx f(W) with an error estimate. Trapezoid grids compare against the
  /// step-2h subrule on the same samples; Gauss-Legendre grids against a half-size grid.
  template <typename F>
  auto integrate(F&& f) const {
    using R = std::decay_t<decltype(f(values_.front()))>;
    IntegralResult<R> out;
    out.value = weighted_sum(f, 1);
    const R coarse = coarse_ ? coarse_->weighted_sum(f, 1) : weighted_sum(f, 2);
    out.error = std::abs(out.value - coarse);
    return out;
  }

 private:
  template <typename F>
  auto weighted_sum(F& f, std::size_t stride) const {
    using R = std::decay_t<decltype(f(values_.front()))>;
    const std::vector<double> ws = weights(s_, stride);
    const std::vector<double> wk = weights(k_, stride);
    R total{};
    for (std::size_t i = 0; i < rows(); i += stride) {
      R row{};
      for (std::size_t j = 0; j < cols(); j += stride) row += wk[j] * f(at(i, j));
      total += ws[i] * row;
    }
    return total * jac_;
  }

  std::vector<double> weights(const Nodes& nodes, std::size_t stride) const;

  QuadratureSpec quad_;
  Nodes s_;
  Nodes k_;
  double eB_ = 1.0;
  double jac_ = 1.0;
  std::vector<WignerValue> values_;
  std::unique_ptr<WignerGrid> coarse_;
};

}  // namespace diracwig
