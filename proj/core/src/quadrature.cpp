#include "diracwig/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "diracwig/specfun.hpp"

namespace diracwig {

QuadRule parse_quad_rule(const std::string& name) {
  if (name == "trapezoid") return QuadRule::trapezoid;
  if (name == "gauss" || name == "gauss-legendre" || name == "gauss_legendre") return QuadRule::gauss_legendre;
  throw ConfigError("unknown quadrature rule '" + name + "' (expected trapezoid|gauss)");
}

std::string to_string(QuadRule rule) {
  return rule == QuadRule::trapezoid ? "trapezoid" : "gauss";
}

void QuadratureSpec::validate() const {
  if (!(s_max > s_min) || !(k_max > k_min)) throw ConfigError("quadrature window is empty or inverted");
  if (ns < 64 || nk < 64) throw ConfigError("quadrature needs at least 64 nodes per axis");
}

QuadratureSpec QuadratureSpec::refined(int factor) const {
  QuadratureSpec q = *this;
  q.ns = ns * factor;
  q.nk = nk * factor;
  return q;
}

QuadratureSpec auto_window(int max_index, double center, int nodes) {
  const double half = std::abs(center) + std::sqrt(2.0 * std::max(max_index, 0) + 1.0) + 7.0;
  QuadratureSpec q;
  q.s_min = -half;
  q.s_max = half;
  q.k_min = -half;
  q.k_max = half;
  q.ns = nodes;
  q.nk = nodes;
  return q;
}

double window_norm_defect(const QuadratureSpec& quad, int n, double eB) {
  const int count = std::max(quad.ns, 4 * (n + 16));
  const Nodes nodes = make_nodes(quad.s_min, quad.s_max, count, quad.rule);
  double sum = 0.0;
  for (std::size_t i = 0; i < nodes.x.size(); ++i) {
    const double f = f_basis(n, nodes.x[i], eB);
    sum += nodes.w[i] * f * f;
  }
  return std::abs(sum - std::sqrt(eB));
}

namespace {

int even_ceil(double x) {
  const int n = static_cast<int>(std::ceil(x - 1e-9));
  return n % 2 == 0 ? n : n + 1;
}

}  // namespace

QuadratureSpec widen_to_fit(QuadratureSpec quad, int max_index, double eB, double tol) {
  const double ds = (quad.s_max - quad.s_min) / quad.ns;
  const double dk = (quad.k_max - quad.k_min) / quad.nk;
  for (int iter = 0; iter < 64 && window_norm_defect(quad, max_index, eB) > tol; ++iter) {
    quad.s_min -= 1.0;
    quad.s_max += 1.0;
    quad.k_min -= 1.0;
    quad.k_max += 1.0;
    quad.ns = even_ceil((quad.s_max - quad.s_min) / ds);
    quad.nk = even_ceil((quad.k_max - quad.k_min) / dk);
  }
  if (window_norm_defect(quad, max_index, eB) > tol) {
    throw ConvergenceError("widen_to_fit: norm defect of F_" + std::to_string(max_index) + " stays at " +
                           std::to_string(window_norm_defect(quad, max_index, eB)) +
                           " (window too narrow or node spacing too coarse)");
  }
  return quad;
}

namespace {

// Gauss-Legendre nodes on [-1, 1] by Newton iteration from Chebyshev-like guesses.
Nodes gauss_legendre_unit(int n) {
  Nodes out;
  out.x.resize(static_cast<std::size_t>(n));
  out.w.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    out.x[static_cast<std::size_t>(i)] = -x;
    out.x[static_cast<std::size_t>(n - 1 - i)] = x;
    out.w[static_cast<std::size_t>(i)] = w;
    out.w[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  return out;
}

}  // namespace

Nodes make_nodes(double a, double b, int n, QuadRule rule) {
  Nodes out;
  if (rule == QuadRule::trapezoid) {
    out.x.resize(static_cast<std::size_t>(n) + 1);
    out.w.resize(static_cast<std::size_t>(n) + 1);
    const double h = (b - a) / n;
    for (int i = 0; i <= n; ++i) {
      out.x[static_cast<std::size_t>(i)] = a + h * i;
      out.w[static_cast<std::size_t>(i)] = (i == 0 || i == n) ? 0.5 * h : h;
    }
    return out;
  }
  // Composite Gauss-Legendre: panels of 16 nodes, at least n nodes in total.
  constexpr int kPanelNodes = 16;
  const int panels = std::max(1, (n + kPanelNodes - 1) / kPanelNodes);
  const Nodes unit = gauss_legendre_unit(kPanelNodes);
  const double width = (b - a) / panels;
  out.x.reserve(static_cast<std::size_t>(panels * kPanelNodes));
  out.w.reserve(static_cast<std::size_t>(panels * kPanelNodes));
  for (int p = 0; p < panels; ++p) {
    const double mid = a + width * (p + 0.5);
    for (int i = 0; i < kPanelNodes; ++i) {
      out.x.push_back(mid + 0.5 * width * unit.x[static_cast<std::size_t>(i)]);
      out.w.push_back(0.5 * width * unit.w[static_cast<std::size_t>(i)]);
    }
  }
  return out;
}

}  // namespace diracwig
