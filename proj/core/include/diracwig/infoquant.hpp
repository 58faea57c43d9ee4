#pragma once

#include <string>
#include <utility>
#include <vector>

#include "diracwig/grid.hpp"
#include "diracwig/states.hpp"
#include "diracwig/wigner.hpp"

namespace diracwig {

/// Scalar quantifiers at one time sample. M_cl is NaN where no closed form
/// exists (cat states); truncation_error is 0 for Gaussian states.
struct InfoReport {
  double t = 0.0;
  double purity = 1.0;
  double I_SP = 0.0;
  double I_xk = 0.0;
  double M = 0.0;
  double M_cl = 0.0;
  double C2 = 0.0;
  double EoF = 0.0;
  double chi = 0.0;
  double truncation_error = 0.0;
};

/// Column names, in declaration order.
const std::vector<std::string>& info_report_fields();
std::vector<double> info_report_values(const InfoReport& r);

enum class Route { analytic, grid };

// Closed forms for G^(1)_n; x = eta² sin²(E_n t).

/// I_SP = I_xk = 8 B² x (1 - 4 B² x).
double gaussian_linear_entropy(int n, const PhysParams& p, double t);
/// 16 sin² eta² B² (1 - 4 B² eta² sin²).
double gaussian_mutual_information(int n, const PhysParams& p, double t);
/// -32 B⁴ eta⁴ sin⁴ + 8 B² eta² sin² + 32 B² A² eta⁴ sin⁴.
double classical_mutual_information(int n, const PhysParams& p, double t);
/// 8 eta⁴ sin² B² (1/eta² - 4 sin² (A² + B²)).
double gaussian_concurrence_sq(int n, const PhysParams& p, double t);
/// <gamma5> = 4 eta A m sin² / E.
double chirality(int n, const PhysParams& p, double t);

/// Mutual information of the decohered (diagonal) Wigner matrix, 8 B² x - 32 B⁴ x².
double decohered_mutual_information(int n, const PhysParams& p, double t);

/// Diagnostic D1: classical_mutual_information minus decohered_mutual_information.
/// Equals 32 A² B² eta⁴ sin⁴; the decohered matrix does not generate this term.
double classical_gap(int n, const PhysParams& p, double t);

// Density-matrix level.

/// Tr[rho (sigma_y x sigma_y) rho* (sigma_y x sigma_y)].
double concurrence_sq(const Matrix4c& rho);
/// Tr[rho gamma5].
double chirality(const Matrix4c& rho);
/// rho = <W> gamma^0 from a phase-space averaged Wigner matrix.
Matrix4c spin_parity_density(const WignerValue& mean);

// Wigner level.

WignerValue decohere(const WignerValue& W);
/// -Tr[W gamma²gamma⁰ conj(W) gamma²gamma⁰]; real, may be negative pointwise.
double concurrence_local(const WignerValue& W);

/// Binary entropy of (1 - sqrt(1 - C2)) / 2. DomainError outside [0, 1] beyond 1e-9.
double eof(double C2);

/// Every quantifier from the exact moments of a term-table series (no quadrature).
/// M_cl is left NaN.
InfoReport measure_series(const WignerSeries& W);

/// Quadrature counterpart of measure_series on a sampled grid.
struct GridMeasure {
  InfoReport report;
  double norm = 1.0;         // ∫∫Tr[W gamma0]
  double norm_error = 0.0;   // subrule difference
  double purity_error = 0.0; // subrule difference
  double concurrence_local_avg = 0.0;  // (2 pi / sqrt(eB)) ∫∫ concurrence_local
};
GridMeasure measure_grid(const WignerGrid& grid);

/// Coefficient route for G^(1)_n: measure_series on gaussian_coefficient_series(c),
/// with M_cl from the closed form. A perturbed coefficient shows up as a broken
/// M - M_cl = C2 identity.
InfoReport coefficient_report(const GaussianWignerCoeffs& c, int n, const PhysParams& p, double t);

/// Phase-space averages of the four cat-state elements that survive averaging,
/// summed term by term from the component series (polarization 1).
struct CatAverages {
  double W11 = 0.0;
  double W33 = 0.0;
  double W44 = 0.0;
  cplx W31{};
};
CatAverages cat_averages(const CatSpec& spec, double t);

/// Analytic report: closed forms for G^(1)_n, exact series moments otherwise.
InfoReport info_report(const StateSpec& state, double t, Diagnostics* diag = nullptr);

/// Wigner series of either family at time t.
WignerSeries state_wigner_series(const StateSpec& state, double t, Diagnostics* diag = nullptr);

/// Window wide enough for the state's highest basis index (auto-widened from `quad`).
QuadratureSpec fitted_window(const StateSpec& state, QuadratureSpec quad);

/// Acceptance thresholds on the subrule error estimates of a grid report.
struct GridTolerance {
  double norm = 1e-6;
  double purity = 1e-5;
  int max_refinements = 2;
};

/// Grid report on the fitted window of `quad`. Node counts are doubled while the
/// norm or purity error estimate exceeds `tol`; ConvergenceError after
/// `tol.max_refinements` doublings.
GridMeasure info_report_grid(const StateSpec& state, double t, const QuadratureSpec& quad, int threads = 0,
                             Diagnostics* diag = nullptr, const GridTolerance& tol = {});

double purity(const StateSpec& state, double t, Route route, const QuadratureSpec& quad = {});
std::pair<double, double> linear_entropies(const StateSpec& state, double t);
double mutual_information(const StateSpec& state, double t);
double concurrence_avg(const StateSpec& state, double t);

}  // namespace diracwig
