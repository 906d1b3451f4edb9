#pragma once

#include <string>
#include <utility>
#include <vector>

#include "config.hpp"
#include "json.hpp"

namespace nikishin::cli {

using Json = nlohmann::ordered_json;

// A table of preformatted cells.  Numbers are kept as decimal strings so CSV
// and JSON carry the same digits.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

std::string fmt_double(double v);  // shortest round-trip form

// Writes <out>/<stem>.csv or .json, or to stdout when requested.
void emit_table(const RunConfig& cfg, const std::string& stem, const Table& t);
void emit_json(const RunConfig& cfg, const std::string& stem, const Json& j);
void write_file(const RunConfig& cfg, const std::string& name, const std::string& content);

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> pts;
  bool markers = false;
};

struct PlotSpec {
  std::string title, xlabel, ylabel;
  bool logx = false, logy = false;
  std::vector<Series> series;
};
std::string render_svg(const PlotSpec& spec);

}  // namespace nikishin::cli
