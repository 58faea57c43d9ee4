#include "diracwig/report_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>

#include "diracwig/errors.hpp"
#include "json.hpp"

namespace diracwig {

namespace {

using json = nlohmann::ordered_json;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json row_json(const ReportRow& r) {
  json j;
  j["label"] = r.label;
  j["family"] = r.family;
  j["pol"] = r.pol;
  j["n"] = r.n;
  j["symmetry"] = r.symmetry;
  j["a"] = number(r.a);
  j["l"] = r.l;
  j["m"] = number(r.m);
  j["kz2"] = number(r.kz2);
  j["eB"] = number(r.eB);
  const auto values = info_report_values(r.info);
  const auto& names = info_report_fields();
  for (std::size_t i = 0; i < names.size(); ++i) j[names[i]] = number(values[i]);
  return j;
}

std::ofstream open_or_throw(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file " + path);
  return out;
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

void write_rows_csv(std::ostream& out, const std::vector<ReportRow>& rows) {
  const auto& fields = report_row_fields();
  for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i];
  out << '\n';
  for (const ReportRow& r : rows) {
    const bool is_cat = r.family == "cat";
    out << csv_field(r.label) << ',' << r.family << ',' << r.pol << ',' << r.n << ',' << r.symmetry << ','
        << (is_cat ? format_number(r.a) : "") << ',' << (is_cat ? std::to_string(r.l) : "") << ','
        << format_number(r.m) << ',' << format_number(r.kz2) << ',' << format_number(r.eB);
    for (double v : info_report_values(r.info)) out << ',' << format_number(v);
    out << '\n';
  }
}

void write_rows_json(std::ostream& out, const std::vector<ReportRow>& rows) {
  json arr = json::array();
  for (const ReportRow& r : rows) arr.push_back(row_json(r));
  out << arr.dump(1) << '\n';
}

void write_rasters_csv(std::ostream& out, const std::vector<RasterResult>& rasters) {
  out << "panel,quantity,t,s,kx,value\n";
  for (std::size_t p = 0; p < rasters.size(); ++p) {
    const RasterResult& r = rasters[p];
    const std::string head = std::to_string(p) + ',' + r.quantity + ',' + format_number(r.t) + ',';
    for (const RasterPoint& pt : r.points) {
      out << head << format_number(pt.s) << ',' << format_number(pt.kx) << ',' << format_number(pt.value) << '\n';
    }
  }
}

void write_rasters_json(std::ostream& out, const std::vector<RasterResult>& rasters) {
  json arr = json::array();
  for (const RasterResult& r : rasters) {
    json panel;
    panel["label"] = r.label;
    panel["quantity"] = r.quantity;
    panel["t"] = r.t;
    json s = json::array();
    json k = json::array();
    json v = json::array();
    for (const RasterPoint& pt : r.points) {
      s.push_back(pt.s);
      k.push_back(pt.kx);
      v.push_back(number(pt.value));
    }
    panel["s"] = std::move(s);
    panel["kx"] = std::move(k);
    panel["value"] = std::move(v);
    arr.push_back(std::move(panel));
  }
  out << arr.dump() << '\n';
}

void write_figure(const std::string& path, const std::string& format, const FigureResult& result,
                  const Scenario& scenario) {
  {
    std::ofstream out = open_or_throw(path);
    const bool curves = !result.rows.empty();
    if (format == "json") {
      curves ? write_rows_json(out, result.rows) : write_rasters_json(out, result.rasters);
    } else {
      curves ? write_rows_csv(out, result.rows) : write_rasters_csv(out, result.rasters);
    }
  }
  json meta;
  meta["command"] = "figure";
  meta["figure"] = result.figure;
  meta["route"] = scenario.route == Route::analytic ? "analytic" : "grid";
  meta["window"] = {{"s_min", scenario.window.s_min}, {"s_max", scenario.window.s_max},
                    {"k_min", scenario.window.k_min}, {"k_max", scenario.window.k_max},
                    {"ns", scenario.window.ns},       {"nk", scenario.window.nk},
                    {"rule", to_string(scenario.window.rule)}};
  json panels = json::array();
  for (std::size_t p = 0; p < result.rasters.size(); ++p) {
    panels.push_back({{"panel", p}, {"label", result.rasters[p].label}, {"quantity", result.rasters[p].quantity},
                      {"t", result.rasters[p].t}});
  }
  meta["panels"] = std::move(panels);
  json curves = json::array();
  for (const CurveCase& c : scenario.curves) {
    curves.push_back({{"label", c.label},
                      {"samples", c.times.size()},
                      {"t_first", c.times.empty() ? 0.0 : c.times.front()},
                      {"t_last", c.times.empty() ? 0.0 : c.times.back()}});
  }
  meta["curves"] = std::move(curves);
  meta["notes"] = result.notes;
  meta["warnings"] = result.warnings;
  std::ofstream out = open_or_throw(path + ".meta.json");
  out << meta.dump(1) << '\n';
}

void write_metadata(const std::string& path, const std::string& command, const std::vector<std::string>& notes,
                    const std::vector<std::string>& warnings) {
  json meta;
  meta["command"] = command;
  meta["notes"] = notes;
  meta["warnings"] = warnings;
  std::ofstream out = open_or_throw(path + ".meta.json");
  out << meta.dump(1) << '\n';
}

}  // namespace diracwig
