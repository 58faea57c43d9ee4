#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <type_traits>
#include <vector>

#include "diracwig/errors.hpp"

namespace diracwig {

enum class QuadRule { trapezoid, gauss_legendre };

QuadRule parse_quad_rule(const std::string& name);
std::string to_string(QuadRule rule);

/// Rectangular (s, kx) window and node counts for phase-space integrals.
struct QuadratureSpec {
  double s_min = -10.0;
  double s_max = 10.0;
  double k_min = -10.0;
  double k_max = 10.0;
  int ns = 256;
  int nk = 256;
  QuadRule rule = QuadRule::trapezoid;

  /// Throws ConfigError on inverted windows or fewer than 64 nodes per axis.
  void validate() const;

  /// Same window with node counts multiplied by `factor`.
  QuadratureSpec refined(int factor) const;
};

/// Symmetric window large enough for Hermite functions up to index `max_index`
/// displaced by at most `center` from the origin.
QuadratureSpec auto_window(int max_index, double center = 0.0, int nodes = 256);

/// |∫F_n² ds − sqrt(eB)| over the s window of `quad`.
double window_norm_defect(const QuadratureSpec& quad, int n, double eB);

/// Returns `quad` widened (in steps of 2 in s and kx) until the norm defect of
/// F_max_index drops below `tol`. Node density is preserved.
QuadratureSpec widen_to_fit(QuadratureSpec quad, int max_index, double eB, double tol = 1e-6);

struct Nodes {
  std::vector<double> x;
  std::vector<double> w;
};

Nodes make_nodes(double a, double b, int n, QuadRule rule);

/// Refinement policy: accept when |I_fine - I_coarse| <= abs_tol + rel_tol |I_fine|.
struct IntegrationControl {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_refinements = 2;
  bool refine = true;
};

template <typename T>
struct IntegralResult {
  T value{};
  double error = 0.0;
  int refinements = 0;
};

/// Plain tensor-product rule over the (s, kx) window: sum_ij w_i w_j f(s_i, k_j).
/// Summation order is fixed (s outer, k inner), so results are reproducible.
template <typename F>
auto integrate2d_once(F&& f, const QuadratureSpec& quad) {
  using R = std::decay_t<decltype(f(0.0, 0.0))>;
  const Nodes sn = make_nodes(quad.s_min, quad.s_max, quad.ns, quad.rule);
  const Nodes kn = make_nodes(quad.k_min, quad.k_max, quad.nk, quad.rule);
  R total{};
  for (std::size_t i = 0; i < sn.x.size(); ++i) {
    R column{};
    for (std::size_t j = 0; j < kn.x.size(); ++j) column += kn.w[j] * f(sn.x[i], kn.x[j]);
    total += sn.w[i] * column;
  }
  return total;
}

/// Integral of f(s, kx) ds dkx with an error estimate from node doubling.
/// Throws ConvergenceError when the estimate still exceeds tolerance after
/// `max_refinements` doublings.
template <typename F>
auto integrate2d(F&& f, QuadratureSpec quad, const IntegrationControl& ctl = {}) {
  using R = std::decay_t<decltype(f(0.0, 0.0))>;
  quad.validate();
  IntegralResult<R> out;
  R coarse = integrate2d_once(f, quad);
  if (!ctl.refine) {
    out.value = coarse;
    out.error = 0.0;
    return out;
  }
  for (int r = 1; r <= ctl.max_refinements; ++r) {
    quad = quad.refined(2);
    R fine = integrate2d_once(f, quad);
    const double err = std::abs(fine - coarse);
    out.value = fine;
    out.error = err;
    out.refinements = r;
    if (err <= ctl.abs_tol + ctl.rel_tol * std::abs(fine)) return out;
    coarse = fine;
  }
  throw ConvergenceError("integrate2d: no convergence after " + std::to_string(ctl.max_refinements) +
                         " refinements (error estimate " + std::to_string(out.error) + ")");
}

/// Phase-space measure ∫dx∫dkx = eB^{-1/2} ∫ds∫dkx.
inline double phase_space_jacobian(double eB) { return 1.0 / std::sqrt(eB); }

/// Normalization of phase-space averages of quadratic quantities, 2π / sqrt(eB).
/// Every purity, entropy and concurrence average goes through this factor.
inline double quadratic_average_factor(double eB) { return 2.0 * 3.14159265358979323846 / std::sqrt(eB); }

}  // namespace diracwig
