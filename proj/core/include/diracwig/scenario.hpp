#pragma once

#include <string>
#include <vector>

#include "diracwig/config.hpp"
#include "diracwig/infoquant.hpp"

namespace diracwig {

/// One time series: a state and its samples.
struct CurveCase {
  std::string label;
  StateSpec state;
  std::vector<double> times;
};

/// One phase-space snapshot of a pointwise quantity.
struct RasterPanel {
  std::string label;
  StateSpec state;
  double t = 0.0;
  std::string quantity;  // density | purity | concurrence
};

struct Scenario {
  int figure = 0;
  std::vector<CurveCase> curves;
  std::vector<RasterPanel> panels;
  QuadratureSpec window;
  Route route = Route::analytic;
  std::vector<std::string> notes;
};

/// Parameter sets of figures 1..8; keys set in `cfg` replace the matching sweep.
Scenario figure_scenario(int id, const Config& cfg);

/// Flat record: scenario coordinates followed by the InfoReport fields.
struct ReportRow {
  std::string label;
  std::string family;     // gaussian | cat
  int pol = 1;
  int n = 0;              // Gaussian level (0 for cats)
  std::string symmetry;   // cats only
  double a = 0.0;         // cats only
  int l = 0;              // cats only
  double m = 0.0;
  double kz2 = 0.0;
  double eB = 0.0;
  InfoReport info;
};

const std::vector<std::string>& report_row_fields();

struct RasterPoint {
  double s = 0.0;
  double kx = 0.0;
  double value = 0.0;
};

struct RasterResult {
  std::string label;
  std::string quantity;
  double t = 0.0;
  std::vector<RasterPoint> points;
};

struct FigureResult {
  int figure = 0;
  std::vector<ReportRow> rows;
  std::vector<RasterResult> rasters;
  std::vector<std::string> notes;
  std::vector<std::string> warnings;
};

/// Pointwise raster quantities, scaled as in the figures:
/// density Tr[W g0]/sqrt(eB), purity Tr[(W g0)^2]/eB, concurrence C²[W]/eB.
double raster_value(const std::string& quantity, const WignerValue& W, double eB);

std::vector<ReportRow> run_curve(const CurveCase& c, Route route, const QuadratureSpec& quad, int threads,
                                 Diagnostics* diag = nullptr);
RasterResult run_raster(const RasterPanel& panel, const QuadratureSpec& window, int threads,
                        Diagnostics* diag = nullptr);
/// Diagnostic D1 note for a G^(1) curve: the largest classical_gap over its samples.
/// Empty for other states.
std::string classical_gap_note(const CurveCase& c);

FigureResult run_figure(const Scenario& scenario, int threads = 0);

std::string describe(const StateSpec& state);

}  // namespace diracwig
