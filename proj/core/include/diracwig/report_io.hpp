#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "diracwig/scenario.hpp"

namespace diracwig {

/// Shortest round-trip decimal form; "nan" / "inf" for non-finite values.
std::string format_number(double x);

/// Header row (report_row_fields) followed by one line per row.
void write_rows_csv(std::ostream& out, const std::vector<ReportRow>& rows);
/// JSON array of records with the same keys; non-finite values become null.
void write_rows_json(std::ostream& out, const std::vector<ReportRow>& rows);

/// Long-form raster CSV: panel,quantity,t,s,kx,value.
void write_rasters_csv(std::ostream& out, const std::vector<RasterResult>& rasters);
void write_rasters_json(std::ostream& out, const std::vector<RasterResult>& rasters);

/// Writes `result` to `path` (curves, or rasters when the figure has no curves)
/// and a `<path>.meta.json` sidecar with notes, warnings and the resolved parameters.
/// Throws ConfigError when the file cannot be opened.
void write_figure(const std::string& path, const std::string& format, const FigureResult& result,
                  const Scenario& scenario);

/// Sidecar for single-state commands.
void write_metadata(const std::string& path, const std::string& command, const std::vector<std::string>& notes,
                    const std::vector<std::string>& warnings);

}  // namespace diracwig
