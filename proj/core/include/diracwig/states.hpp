#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "diracwig/expansion.hpp"
#include "diracwig/landau.hpp"

namespace diracwig {

/// Collects non-fatal numerical warnings (truncation, quadrature) so callers
/// can forward them into report metadata.
struct Diagnostics {
  std::vector<std::string> warnings;
  void warn(std::string message) { warnings.push_back(std::move(message)); }
};

/// Gaussian superposition G^(pol)_n of the four stationary spinors of level n.
struct GaussianSpec {
  int pol = 1;  // 1..4
  int n = 1;
  PhysParams p;

  /// Throws ConfigError for pol outside 1..4, n < 0, or n = 0 with pol 1 or 3
  /// (those combinations are the null spinor).
  void validate() const;

  /// n = 0 with pol 2 or 4: the spatial part stays F_0 for all t.
  bool is_static() const { return n == 0 && (pol == 2 || pol == 4); }
};

enum class Symmetry { S, A };

Symmetry parse_symmetry(const std::string& name);
std::string to_string(Symmetry sym);

/// Symmetric / anti-symmetric Dirac cat state built from G^(pol) superpositions
/// with Gaussian-weighted coefficients; the series keeps terms 0..l.
struct CatSpec {
  Symmetry sym = Symmetry::S;
  double a = 1.0;
  int l = 0;
  PhysParams p;
  int pol = 1;
  double warn_threshold = 1e-6;

  /// Smallest l with truncation_error(a, l) < epsilon.
  static CatSpec with_auto_l(Symmetry sym, double a, const PhysParams& p, double epsilon = 1e-6);

  void validate() const;
  double truncation_error() const;

  /// Hermite index carried by component 1 of series term k: 2k (S) or 2k+1 (A).
  int spatial_index(int term) const { return sym == Symmetry::S ? 2 * term : 2 * term + 1; }
  /// Highest Hermite index appearing in the truncated series.
  int max_index() const { return spatial_index(l) + 1; }
};

using StateSpec = std::variant<GaussianSpec, CatSpec>;

const PhysParams& params_of(const StateSpec& state);

/// G^(pol)_n(t) = sqrt(eta_n) [ ...combination of u^{±}_{n,r}... ], normalized to 1.
SpinorExpansion gaussian_expansion(const GaussianSpec& spec, double t);
SpinorValue gaussian_eval(const GaussianSpec& spec, double s, double t);

/// (j, c_j) with c_j = e^{-a^2/4} (a/sqrt2)^j / sqrt(j!) on even j (S) or odd j (A),
/// for j up to `max_index`. c_j multiplies G^(1)_{j+1}.
std::vector<std::pair<int, double>> cat_coefficients(Symmetry sym, double a, int max_index = 60);

/// Er(a, l) = 1 - S^(l) / cosh(a^2/2), S^(l) the Taylor partial sum through term l
/// (sinh and odd powers for anti-symmetric states).
double truncation_error(double a, int l, Symmetry sym = Symmetry::S);

/// Smallest l with truncation_error(a, l, sym) < epsilon.
int auto_truncation(double a, Symmetry sym = Symmetry::S, double epsilon = 1e-6);

/// N_a = 1/cosh(a^2/2) (S) or 1/sinh(a^2/2) (A). Throws DomainError for an
/// anti-symmetric state with a = 0 (null superposition).
double cat_norm_constant(Symmetry sym, double a);

/// N_a^{1/2} sum_k (a/sqrt2)^j / sqrt(j!) G^(pol)_{j+1}(t), j = spatial_index(k).
SpinorExpansion cat_expansion(const CatSpec& spec, double t, Diagnostics* diag = nullptr);
SpinorValue cat_eval(const CatSpec& spec, double s, double t, Diagnostics* diag = nullptr);

/// Expansion of either state family.
SpinorExpansion state_expansion(const StateSpec& state, double t, Diagnostics* diag = nullptr);

}  // namespace diracwig
