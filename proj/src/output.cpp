#include "polembed/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "polembed/errors.hpp"

namespace polembed {

namespace {

std::string number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

std::ofstream open_for_writing(const std::filesystem::path& path) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

}  // namespace

void emit_csv(const ScanResult& r, const std::filesystem::path& path) {
  auto out = open_for_writing(path);
  for (const auto& [key, value] : r.metadata) out << "# " << key << " = " << value << '\n';
  out << "omega_ev";
  for (const auto& c : r.columns) out << ',' << c;
  out << '\n';
  const auto omega_ev = r.omega_ev();
  for (std::size_t i = 0; i < omega_ev.size(); ++i) {
    out << number(omega_ev[i]);
    for (const auto& col : r.values) out << ',' << number(col[i]);
    out << '\n';
  }
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  CsvTable t;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      t.comments.push_back(line);
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (t.header.empty()) {
      t.header = cells;
      continue;
    }
    if (cells.size() != t.header.size()) {
      throw ParseError(path.string() + ":" + std::to_string(line_no) + ": wrong column count");
    }
    std::vector<double> row;
    for (const auto& c : cells) {
      try {
        row.push_back(std::stod(c));
      } catch (const std::exception&) {
        throw ParseError(path.string() + ":" + std::to_string(line_no) + ": bad number '" + c + "'");
      }
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

void emit_plot(const ScanResult& r, const std::filesystem::path& path, bool log_y) {
  constexpr double width = 720, height = 440;
  constexpr double left = 80, right = 170, top = 30, bottom = 60;
  const double plot_w = width - left - right, plot_h = height - top - bottom;
  static const char* colors[] = {"#000000", "#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e",
                                 "#8c564b", "#17becf"};

  const auto x = r.omega_ev();
  auto transform = [log_y](double v) { return log_y ? std::log10(v) : v; };
  double y_min = std::numeric_limits<double>::infinity(), y_max = -y_min;
  for (const auto& col : r.values) {
    for (double v : col) {
      if (!std::isfinite(v) || (log_y && v <= 0.0)) continue;
      y_min = std::min(y_min, transform(v));
      y_max = std::max(y_max, transform(v));
    }
  }
  if (!std::isfinite(y_min)) y_min = 0.0, y_max = 1.0;
  if (y_max == y_min) y_max = y_min + 1.0;
  const double pad = 0.05 * (y_max - y_min);
  y_min -= pad;
  y_max += pad;
  const double x_min = x.front(), x_max = x.back();
  auto px = [&](double v) { return left + (v - x_min) / (x_max - x_min) * plot_w; };
  auto py = [&](double v) { return top + (y_max - v) / (y_max - y_min) * plot_h; };

  auto out = open_for_writing(path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << left << "\" y=\"18\">" << r.name << "</text>\n";
  out << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << plot_w << "\" height=\""
      << plot_h << "\" fill=\"none\" stroke=\"black\"/>\n";

  for (int i = 0; i <= 5; ++i) {
    const double xv = x_min + i * (x_max - x_min) / 5;
    const double yv = y_min + i * (y_max - y_min) / 5;
    char xl[32], yl[32];
    std::snprintf(xl, sizeof xl, "%.3g", xv);
    std::snprintf(yl, sizeof yl, log_y ? "1e%.2g" : "%.3g", yv);
    out << "<line x1=\"" << px(xv) << "\" y1=\"" << top + plot_h << "\" x2=\"" << px(xv)
        << "\" y2=\"" << top + plot_h + 5 << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << px(xv) << "\" y=\"" << top + plot_h + 20
        << "\" text-anchor=\"middle\">" << xl << "</text>\n";
    out << "<line x1=\"" << left - 5 << "\" y1=\"" << py(yv) << "\" x2=\"" << left << "\" y2=\""
        << py(yv) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << left - 8 << "\" y=\"" << py(yv) + 4 << "\" text-anchor=\"end\">" << yl
        << "</text>\n";
  }
  out << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 15
      << "\" text-anchor=\"middle\">photon energy (eV)</text>\n";

  for (std::size_t c = 0; c < r.values.size(); ++c) {
    const char* color = colors[c % (sizeof colors / sizeof *colors)];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.2\" points=\"";
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double v = r.values[c][i];
      if (!std::isfinite(v) || (log_y && v <= 0.0)) continue;
      out << px(x[i]) << ',' << py(transform(v)) << ' ';
    }
    out << "\"/>\n";
    const double ly = top + 15 + 18 * c;
    out << "<line x1=\"" << left + plot_w + 10 << "\" y1=\"" << ly << "\" x2=\""
        << left + plot_w + 35 << "\" y2=\"" << ly << "\" stroke=\"" << color << "\"/>\n";
    out << "<text x=\"" << left + plot_w + 40 << "\" y=\"" << ly + 4 << "\">" << r.columns[c]
        << "</text>\n";
  }
  out << "</svg>\n";
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace polembed
