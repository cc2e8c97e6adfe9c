#include "goldfish/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "goldfish/equilibria.hpp"
#include "goldfish/roots.hpp"

namespace goldfish {

namespace {

using nlohmann::json;

std::string format_g17(double x) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", x);
  return buffer;
}

std::string format_px(double x) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.2f", x);
  return buffer;
}

std::string format_short(double x) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.4g", x);
  return buffer;
}

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    out.emplace_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_double(const std::string& s, std::size_t row) {
  const char* begin = s.c_str();
  char* end = nullptr;
  const double x = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || !std::isfinite(x))
    throw ParseError("trajectory CSV row " + std::to_string(row) + ": bad number '" + s + "'");
  return x;
}

json complex_pair(Complex z) { return json::array({z.real(), z.imag()}); }

Complex decode_pair(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError(where + ": expected [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

const char* family_name(EquilibriumFamily f) { return f == EquilibriumFamily::kReal ? "real" : "imaginary"; }

// Particle colours, cycled.
constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

// Maps data coordinates into a square canvas with equal axis scales and 5% margins.
class Canvas {
 public:
  static constexpr double kSize = 800.0;
  static constexpr double kLegend = 120.0;

  explicit Canvas(const std::vector<Complex>& points) {
    double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
    for (const Complex& p : points) {
      x0 = std::min(x0, p.real());
      x1 = std::max(x1, p.real());
      y0 = std::min(y0, p.imag());
      y1 = std::max(y1, p.imag());
    }
    if (points.empty()) x0 = y0 = -1.0, x1 = y1 = 1.0;
    double span = std::max(x1 - x0, y1 - y0);
    if (span <= 0.0) span = 1.0;
    span *= 1.1;
    cx_ = 0.5 * (x0 + x1);
    cy_ = 0.5 * (y0 + y1);
    scale_ = kSize / span;
    half_ = 0.5 * span;
  }

  double x(double re) const { return (re - cx_) * scale_ + 0.5 * kSize; }
  double y(double im) const { return 0.5 * kSize - (im - cy_) * scale_; }
  double re_min() const { return cx_ - half_; }
  double re_max() const { return cx_ + half_; }
  double im_min() const { return cy_ - half_; }
  double im_max() const { return cy_ + half_; }

 private:
  double cx_ = 0.0, cy_ = 0.0, scale_ = 1.0, half_ = 1.0;
};

void emit_header(std::ostringstream& out, const Canvas& canvas) {
  const double w = Canvas::kSize + Canvas::kLegend;
  const double h = Canvas::kSize + 40.0;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_px(w) << "\" height=\"" << format_px(h)
      << "\" viewBox=\"0 0 " << format_px(w) << ' ' << format_px(h) << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << format_px(w) << "\" height=\"" << format_px(h)
      << "\" fill=\"white\"/>\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << format_px(Canvas::kSize) << "\" height=\"" << format_px(Canvas::kSize)
      << "\" fill=\"none\" stroke=\"#999999\"/>\n";
  if (canvas.re_min() < 0.0 && canvas.re_max() > 0.0)
    out << "<line x1=\"" << format_px(canvas.x(0.0)) << "\" y1=\"0\" x2=\"" << format_px(canvas.x(0.0))
        << "\" y2=\"" << format_px(Canvas::kSize) << "\" stroke=\"#cccccc\"/>\n";
  if (canvas.im_min() < 0.0 && canvas.im_max() > 0.0)
    out << "<line x1=\"0\" y1=\"" << format_px(canvas.y(0.0)) << "\" x2=\"" << format_px(Canvas::kSize)
        << "\" y2=\"" << format_px(canvas.y(0.0)) << "\" stroke=\"#cccccc\"/>\n";
  const double base = Canvas::kSize + 16.0;
  out << "<text x=\"0\" y=\"" << format_px(base) << "\" font-size=\"12\">Re z: [" << format_short(canvas.re_min())
      << ", " << format_short(canvas.re_max()) << "]  Im z: [" << format_short(canvas.im_min()) << ", "
      << format_short(canvas.im_max()) << "]</text>\n";
}

void emit_marker(std::ostringstream& out, const Canvas& canvas, const PlotMarker& m) {
  const char* fill = m.kind == PlotMarker::Kind::kEquilibrium ? "black" : (m.kind == PlotMarker::Kind::kInitial ? "white" : "#444444");
  out << "<circle cx=\"" << format_px(canvas.x(m.point.real())) << "\" cy=\"" << format_px(canvas.y(m.point.imag()))
      << "\" r=\"4\" fill=\"" << fill << "\" stroke=\"black\"/>\n";
  if (!m.label.empty())
    out << "<text x=\"" << format_px(canvas.x(m.point.real()) + 6.0) << "\" y=\""
        << format_px(canvas.y(m.point.imag()) - 6.0) << "\" font-size=\"11\">" << m.label << "</text>\n";
}

}  // namespace

std::string trajectory_to_csv(const Trajectory& trajectory) {
  const int n = trajectory.bodies();
  std::string out = "t";
  for (int k = 1; k <= n; ++k) out += ",z" + std::to_string(k) + "_re,z" + std::to_string(k) + "_im";
  out += '\n';
  for (std::size_t i = 0; i < trajectory.size(); ++i) {
    out += format_g17(trajectory.times[i]);
    for (const Complex& z : trajectory.samples[i]) {
      out += ',';
      out += format_g17(z.real());
      out += ',';
      out += format_g17(z.imag());
    }
    out += '\n';
  }
  return out;
}

Trajectory trajectory_from_csv(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) lines.push_back(line);
    start = end + 1;
  }
  if (lines.empty()) throw ParseError("trajectory CSV is empty");
  const std::vector<std::string> header = split(lines[0], ',');
  if (header.empty() || header[0] != "t" || header.size() < 3 || header.size() % 2 == 0)
    throw ParseError("trajectory CSV: header must be t,z1_re,z1_im,...");
  const std::size_t n = (header.size() - 1) / 2;
  for (std::size_t k = 0; k < n; ++k) {
    const std::string label = "z" + std::to_string(k + 1);
    if (header[1 + 2 * k] != label + "_re" || header[2 + 2 * k] != label + "_im")
      throw ParseError("trajectory CSV: unexpected column '" + header[1 + 2 * k] + "'");
  }
  if (lines.size() < 2) throw ParseError("trajectory CSV has no samples");

  Trajectory out;
  for (std::size_t row = 1; row < lines.size(); ++row) {
    const std::vector<std::string> cells = split(lines[row], ',');
    if (cells.size() != header.size())
      throw ParseError("trajectory CSV row " + std::to_string(row) + ": expected " + std::to_string(header.size()) +
                       " columns");
    const double t = parse_double(cells[0], row);
    if (!out.times.empty() && !(t > out.times.back()))
      throw ParseError("trajectory CSV row " + std::to_string(row) + ": times must increase");
    ComplexVector sample(n);
    for (std::size_t k = 0; k < n; ++k)
      sample[k] = Complex(parse_double(cells[1 + 2 * k], row), parse_double(cells[2 + 2 * k], row));
    out.times.push_back(t);
    out.samples.push_back(std::move(sample));
  }
  return out;
}

std::string trajectory_to_json(const Trajectory& trajectory) {
  json doc = json::object();
  doc["n"] = trajectory.bodies();
  doc["times"] = trajectory.times;
  json samples = json::array();
  for (const ComplexVector& s : trajectory.samples) {
    json row = json::array();
    for (const Complex& z : s) row.push_back(complex_pair(z));
    samples.push_back(std::move(row));
  }
  doc["samples"] = std::move(samples);
  if (trajectory.closure_permutation) {
    json perm = json::array();
    for (int p : *trajectory.closure_permutation) perm.push_back(p + 1);
    doc["closure_permutation"] = std::move(perm);
  } else {
    doc["closure_permutation"] = nullptr;
  }
  return doc.dump() + "\n";
}

std::string catalog_to_json(const EquilibriumCatalog& catalog) {
  json doc = json::array();
  for (const EquilibriumEntry& e : catalog.entries) {
    json z = json::array();
    for (const Complex& p : e.configuration) z.push_back(complex_pair(p));
    doc.push_back({{"family", family_name(e.family)}, {"perm", e.permutation_index}, {"z", std::move(z)},
                   {"residual", e.residual}});
  }
  return doc.dump(2) + "\n";
}

EquilibriumCatalog catalog_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed catalog: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError("catalog must be a JSON array");
  EquilibriumCatalog catalog;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const json& e = doc[i];
    const std::string where = "catalog[" + std::to_string(i) + "]";
    if (!e.is_object() || !e.contains("family") || !e.contains("perm") || !e.contains("z") || !e.contains("residual"))
      throw ParseError(where + ": expected {family, perm, z, residual}");
    if (!e["family"].is_string() || !e["perm"].is_number_integer() || !e["residual"].is_number() || !e["z"].is_array())
      throw ParseError(where + ": wrong field types");
    EquilibriumEntry entry;
    const std::string family = e["family"].get<std::string>();
    if (family == "real")
      entry.family = EquilibriumFamily::kReal;
    else if (family == "imaginary")
      entry.family = EquilibriumFamily::kImaginary;
    else
      throw ParseError(where + ": unknown family '" + family + "'");
    entry.permutation_index = e["perm"].get<int>();
    entry.residual = e["residual"].get<double>();
    for (std::size_t k = 0; k < e["z"].size(); ++k)
      entry.configuration.push_back(decode_pair(e["z"][k], where + ".z[" + std::to_string(k) + "]"));
    catalog.entries.push_back(std::move(entry));
  }
  return catalog;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoError("write to '" + path + "' failed");
}

std::string render_trajectory_svg(const Trajectory& trajectory, const std::vector<PlotMarker>& markers) {
  if (trajectory.size() == 0) throw InvalidArgument("render_trajectory_svg: empty trajectory");
  std::vector<Complex> all;
  for (const ComplexVector& s : trajectory.samples) all.insert(all.end(), s.begin(), s.end());
  for (const PlotMarker& m : markers) all.push_back(m.point);
  const Canvas canvas(all);

  std::ostringstream out;
  emit_header(out, canvas);
  const int n = trajectory.bodies();
  for (int k = 0; k < n; ++k) {
    const char* colour = kPalette[k % std::size(kPalette)];
    out << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.2\" points=\"";
    for (std::size_t i = 0; i < trajectory.size(); ++i) {
      if (i) out << ' ';
      out << format_px(canvas.x(trajectory.samples[i][k].real())) << ','
          << format_px(canvas.y(trajectory.samples[i][k].imag()));
    }
    out << "\"/>\n";
    const double ly = 20.0 + 18.0 * k;
    out << "<line x1=\"" << format_px(Canvas::kSize + 10.0) << "\" y1=\"" << format_px(ly - 4.0) << "\" x2=\""
        << format_px(Canvas::kSize + 30.0) << "\" y2=\"" << format_px(ly - 4.0) << "\" stroke=\"" << colour
        << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << format_px(Canvas::kSize + 36.0) << "\" y=\"" << format_px(ly)
        << "\" font-size=\"12\">z" << (k + 1) << "(t)</text>\n";
  }
  for (const PlotMarker& m : markers) emit_marker(out, canvas, m);
  out << "</svg>\n";
  return out.str();
}

std::string render_catalog_svg(const EquilibriumCatalog& catalog) {
  std::vector<Complex> all;
  for (const EquilibriumEntry& e : catalog.entries) all.insert(all.end(), e.configuration.begin(), e.configuration.end());
  const Canvas canvas(all);
  std::ostringstream out;
  emit_header(out, canvas);
  for (std::size_t j = 0; j < catalog.entries.size(); ++j)
    for (const Complex& p : catalog.entries[j].configuration)
      emit_marker(out, canvas, {p, "(" + std::to_string(j + 1) + ")", PlotMarker::Kind::kEquilibrium});
  out << "<text x=\"" << format_px(Canvas::kSize + 10.0) << "\" y=\"20\" font-size=\"12\">"
      << catalog.entries.size() << " equilibria</text>\n";
  out << "</svg>\n";
  return out.str();
}

std::vector<PlotMarker> figure_markers(const Trajectory& trajectory, bool equilibria, bool initial) {
  std::vector<PlotMarker> markers;
  if (trajectory.size() == 0) return markers;
  const ComplexVector& z0 = trajectory.samples.front();
  const int n = trajectory.bodies();
  if (equilibria && n >= 2 && n <= 6) {
    const EquilibriumCatalog catalog = newgold_equilibria(n);
    const EquilibriumEntry* nearest = nullptr;
    double best = std::numeric_limits<double>::infinity();
    for (const EquilibriumEntry& e : catalog.entries) {
      const double d = multiset_distance(z0, e.configuration);
      if (d < best) {
        best = d;
        nearest = &e;
      }
    }
    if (nearest) {
      const Permutation sigma = match_labels(z0, nearest->configuration);
      for (int k = 0; k < n; ++k)
        markers.push_back({nearest->configuration[sigma[k]], "eq" + std::to_string(k + 1),
                           PlotMarker::Kind::kEquilibrium});
    }
  }
  if (initial)
    for (int k = 0; k < n; ++k)
      markers.push_back({z0[k], "z" + std::to_string(k + 1) + "(0)", PlotMarker::Kind::kInitial});
  return markers;
}

}  // namespace goldfish
