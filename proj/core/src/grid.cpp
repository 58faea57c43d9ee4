#include "diracwig/grid.hpp"

#include "parallel.hpp"

namespace diracwig {

WignerGrid::WignerGrid(const WignerSeries& series, const QuadratureSpec& quad, int threads)
    : quad_(quad), eB_(series.eB()), jac_(phase_space_jacobian(series.eB())) {
  quad_.validate();
  if (quad_.rule == QuadRule::trapezoid && (quad_.ns % 2 != 0 || quad_.nk % 2 != 0)) {
    throw ConfigError("trapezoid grids need even node counts (ns, nk)");
  }
  s_ = make_nodes(quad_.s_min, quad_.s_max, quad_.ns, quad_.rule);
  k_ = make_nodes(quad_.k_min, quad_.k_max, quad_.nk, quad_.rule);
  values_.resize(rows() * cols());

  detail::parallel_for(rows(), threads, [&](std::size_t i) {
    for (std::size_t j = 0; j < cols(); ++j) values_[i * cols() + j] = series(BasisPoint{s_.x[i], k_.x[j], eB_});
  });

  if (quad_.rule == QuadRule::gauss_legendre) {
    QuadratureSpec half = quad_;
    half.ns = std::max(64, quad_.ns / 2);
    half.nk = std::max(64, quad_.nk / 2);
    coarse_ = std::make_unique<WignerGrid>(series, half, threads);
  }
}

std::vector<double> WignerGrid::weights(const Nodes& nodes, std::size_t stride) const {
  if (stride == 1) return nodes.w;
  // Step-2h trapezoid over the even-indexed nodes of a uniform grid.
  std::vector<double> w(nodes.x.size(), 0.0);
  const double h = nodes.x[1] - nodes.x[0];
  const std::size_t last = nodes.x.size() - 1;
  for (std::size_t i = 0; i <= last; i += stride) w[i] = (i == 0 || i == last) ? h : 2.0 * h;
  return w;
}

}  // namespace diracwig
