#include "output.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace nikishin::cli {

std::string fmt_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string to_csv(const Table& t) {
  std::ostringstream os;
  for (size_t i = 0; i < t.header.size(); ++i) os << (i ? "," : "") << csv_cell(t.header[i]);
  os << "\n";
  for (const auto& r : t.rows) {
    for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_cell(r[i]);
    os << "\n";
  }
  return os.str();
}

}  // namespace

void write_file(const RunConfig& cfg, const std::string& name, const std::string& content) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(cfg.out_dir, ec);
  if (ec) throw IoError("cannot create output directory " + cfg.out_dir + ": " + ec.message());
  fs::path p = fs::path(cfg.out_dir) / name;
  std::ofstream f(p, std::ios::binary);
  if (!f) throw IoError("cannot open " + p.string() + " for writing");
  f << content;
  if (!f) throw IoError("write failed for " + p.string());
}

void emit_table(const RunConfig& cfg, const std::string& stem, const Table& t) {
  std::string body;
  if (cfg.format == Format::Csv) {
    body = to_csv(t);
  } else {
    Json j;
    j["precision"] = cfg.precision_bits;
    j["columns"] = t.header;
    Json rows = Json::array();
    for (const auto& r : t.rows) {
      Json o;
      for (size_t i = 0; i < r.size() && i < t.header.size(); ++i) o[t.header[i]] = r[i];
      rows.push_back(o);
    }
    j["rows"] = rows;
    body = j.dump(2) + "\n";
  }
  if (cfg.to_stdout)
    std::cout << body;
  else
    write_file(cfg, stem + (cfg.format == Format::Csv ? ".csv" : ".json"), body);
}

void emit_json(const RunConfig& cfg, const std::string& stem, const Json& j) {
  std::string body = j.dump(2) + "\n";
  if (cfg.to_stdout)
    std::cout << body;
  else
    write_file(cfg, stem + ".json", body);
}

std::string render_svg(const PlotSpec& spec) {
  const double W = 640, H = 420, L = 70, R = 20, T = 36, B = 50;
  auto tx = [&](double v) { return spec.logx ? std::log10(v) : v; };
  auto ty = [&](double v) { return spec.logy ? std::log10(v) : v; };
  double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
  for (const auto& s : spec.series)
    for (auto [x, y] : s.pts) {
      if ((spec.logx && x <= 0) || (spec.logy && y <= 0) || !std::isfinite(x) || !std::isfinite(y)) continue;
      x0 = std::min(x0, tx(x));
      x1 = std::max(x1, tx(x));
      y0 = std::min(y0, ty(y));
      y1 = std::max(y1, ty(y));
    }
  if (!(x0 < x1)) x0 -= 1, x1 += 1;
  if (!(y0 < y1)) y0 -= 1, y1 += 1;
  const double pad = 0.05 * (y1 - y0);
  y0 -= pad;
  y1 += pad;
  auto px = [&](double x) { return L + (tx(x) - x0) / (x1 - x0) * (W - L - R); };
  auto py = [&](double y) { return H - B - (ty(y) - y0) / (y1 - y0) * (H - T - B); };

  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
     << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << W / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">" << spec.title << "</text>\n";
  os << "<rect x=\"" << L << "\" y=\"" << T << "\" width=\"" << W - L - R << "\" height=\"" << H - T - B
     << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int k = 0; k <= 4; ++k) {
    double fx = x0 + (x1 - x0) * k / 4, fy = y0 + (y1 - y0) * k / 4;
    double X = L + (W - L - R) * k / 4, Y = H - B - (H - T - B) * k / 4;
    std::ostringstream lx, ly;
    lx.precision(3);
    ly.precision(3);
    lx << (spec.logx ? std::pow(10.0, fx) : fx);
    ly << (spec.logy ? std::pow(10.0, fy) : fy);
    os << "<text x=\"" << X << "\" y=\"" << H - B + 16 << "\" text-anchor=\"middle\">" << lx.str() << "</text>\n";
    os << "<text x=\"" << L - 6 << "\" y=\"" << Y + 4 << "\" text-anchor=\"end\">" << ly.str() << "</text>\n";
  }
  os << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 12 << "\" text-anchor=\"middle\">" << spec.xlabel
     << "</text>\n";
  os << "<text x=\"16\" y=\"" << (T + H - B) / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
     << (T + H - B) / 2 << ")\">" << spec.ylabel << "</text>\n";
  for (size_t s = 0; s < spec.series.size(); ++s) {
    const auto& ser = spec.series[s];
    const char* col = colors[s % 6];
    std::ostringstream path;
    path.setf(std::ios::fixed);
    path.precision(2);
    bool first = true;
    for (auto [x, y] : ser.pts) {
      if ((spec.logx && x <= 0) || (spec.logy && y <= 0) || !std::isfinite(y)) continue;
      path << (first ? "M" : " L") << px(x) << " " << py(y);
      first = false;
      if (ser.markers)
        os << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"3\" fill=\"" << col << "\"/>\n";
    }
    if (!ser.markers || ser.pts.size() > 1)
      os << "<path d=\"" << path.str() << "\" fill=\"none\" stroke=\"" << col << "\" stroke-width=\"1.5\"/>\n";
    os << "<text x=\"" << W - R - 8 << "\" y=\"" << T + 16 + 16 * s << "\" text-anchor=\"end\" fill=\"" << col
       << "\">" << ser.label << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace nikishin::cli
