// Copyright (c) The ptcontour Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "figures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>

namespace ptc::io {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string fmt(double value, int digits = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

std::string escape_xml(const std::string& text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += ch;
    }
  }
  return out;
}

// Tick positions on a 1-2-5 ladder, about five per axis.
std::vector<double> ticks(double lo, double hi) {
  const double raw = (hi - lo) / 5;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (m * mag >= raw) {
      step = m * mag;
      break;
    }
  }
  std::vector<double> out;
  for (double t = std::ceil(lo / step) * step; t <= hi + 1e-9 * step; t += step) {
    out.push_back(std::abs(t) < 1e-12 * step ? 0.0 : t);
  }
  return out;
}

std::string tick_label(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", value);
  return buf;
}

}  // namespace

CsvWriter::CsvWriter(std::vector<std::string> header) : width_(header.size()) { append(header); }

void CsvWriter::row(const std::vector<std::string>& fields) {
  std::vector<std::string> padded = fields;
  padded.resize(width_);
  append(padded);
}

void CsvWriter::append(const std::vector<std::string>& fields) {
  for (std::size_t j = 0; j < fields.size(); ++j) {
    if (j > 0) text_ += ',';
    const std::string& f = fields[j];
    if (f.find_first_of(",\"\r\n") == std::string::npos) {
      text_ += f;
      continue;
    }
    text_ += '"';
    for (char ch : f) {
      if (ch == '"') text_ += '"';
      text_ += ch;
    }
    text_ += '"';
  }
  text_ += "\r\n";
}

std::string CsvWriter::number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string render_svg(const LinePlot& plot) {
  constexpr double kWidth = 640;
  constexpr double kHeight = 420;
  constexpr double kLeft = 70;
  constexpr double kRight = 20;
  constexpr double kTop = 40;
  constexpr double kBottom = 50;

  double x_lo = std::numeric_limits<double>::infinity();
  double x_hi = -x_lo;
  double y_lo = x_lo;
  double y_hi = -x_lo;
  auto visible = [&](double y) {
    return std::isfinite(y) && (!plot.y_range || (y >= plot.y_range->first && y <= plot.y_range->second));
  };
  for (const auto& s : plot.series) {
    for (std::size_t j = 0; j < s.x.size(); ++j) {
      if (!visible(s.y[j])) continue;
      x_lo = std::min(x_lo, s.x[j]);
      x_hi = std::max(x_hi, s.x[j]);
      y_lo = std::min(y_lo, s.y[j]);
      y_hi = std::max(y_hi, s.y[j]);
    }
  }
  if (plot.y_range) std::tie(y_lo, y_hi) = *plot.y_range;
  if (!(x_hi > x_lo)) std::tie(x_lo, x_hi) = std::pair{0.0, 1.0};
  if (!(y_hi > y_lo)) std::tie(y_lo, y_hi) = std::pair{y_lo - 1, y_lo + 1};

  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * pw; };
  auto sy = [&](double y) { return kTop + (y_hi - y) / (y_hi - y_lo) * ph; };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">"
      << escape_xml(plot.title) << "</text>\n";

  for (double t : ticks(x_lo, x_hi)) {
    svg << "<line x1=\"" << fmt(sx(t)) << "\" y1=\"" << kTop << "\" x2=\"" << fmt(sx(t)) << "\" y2=\""
        << kTop + ph << "\" stroke=\"#e5e5e5\"/>\n"
        << "<text x=\"" << fmt(sx(t)) << "\" y=\"" << kTop + ph + 16 << "\" text-anchor=\"middle\">"
        << tick_label(t) << "</text>\n";
  }
  for (double t : ticks(y_lo, y_hi)) {
    svg << "<line x1=\"" << kLeft << "\" y1=\"" << fmt(sy(t)) << "\" x2=\"" << kLeft + pw << "\" y2=\""
        << fmt(sy(t)) << "\" stroke=\"#e5e5e5\"/>\n"
        << "<text x=\"" << kLeft - 6 << "\" y=\"" << fmt(sy(t) + 4) << "\" text-anchor=\"end\">" << tick_label(t)
        << "</text>\n";
  }
  svg << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
      << "\" fill=\"none\" stroke=\"black\"/>\n"
      << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 12 << "\" text-anchor=\"middle\">"
      << escape_xml(plot.x_label) << "</text>\n"
      << "<text transform=\"translate(18 " << kTop + ph / 2 << ") rotate(-90)\" text-anchor=\"middle\">"
      << escape_xml(plot.y_label) << "</text>\n";

  for (std::size_t k = 0; k < plot.series.size(); ++k) {
    const auto& s = plot.series[k];
    const char* color = kPalette[k % std::size(kPalette)];
    std::string points;
    auto flush = [&] {
      if (!points.empty()) {
        svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.6\" points=\"" << points
            << "\"/>\n";
      }
      points.clear();
    };
    for (std::size_t j = 0; j < s.x.size(); ++j) {
      if (!visible(s.y[j])) {
        flush();
        continue;
      }
      if (!points.empty()) points += ' ';
      points += fmt(sx(s.x[j])) + "," + fmt(sy(s.y[j]));
    }
    flush();
  }
  svg << "<rect x=\"" << kLeft + pw - 128 << "\" y=\"" << kTop + 2 << "\" width=\"124\" height=\""
      << 8 + 16 * plot.series.size() << "\" fill=\"white\" fill-opacity=\"0.85\" stroke=\"#cccccc\"/>\n";
  for (std::size_t k = 0; k < plot.series.size(); ++k) {
    const char* color = kPalette[k % std::size(kPalette)];
    const double ly = kTop + 14 + 16 * static_cast<double>(k);
    svg << "<line x1=\"" << kLeft + pw - 120 << "\" y1=\"" << ly - 4 << "\" x2=\"" << kLeft + pw - 100
        << "\" y2=\"" << ly - 4 << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << kLeft + pw - 94 << "\" y=\"" << ly << "\">" << escape_xml(plot.series[k].label)
        << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string render_wedge_svg(const ContourParams& params, const WedgeReport& report) {
  constexpr double kSize = 480;
  constexpr double kRadius = 4.0;  // half-extent of the plotted z plane
  const double scale = (kSize / 2 - 20) / kRadius;
  auto sx = [&](double re) { return kSize / 2 + re * scale; };
  auto sy = [&](double im) { return kSize / 2 - im * scale; };
  const double reach = kRadius * 1.5;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kSize << "\" height=\"" << kSize
      << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (int k = -3; k < 3; ++k) {
    const double t0 = k * std::numbers::pi / 3;
    const double t1 = (k + 1) * std::numbers::pi / 3;
    const bool family_a = k % 2 == 0;
    svg << "<path d=\"M " << fmt(sx(0)) << ' ' << fmt(sy(0)) << " L " << fmt(sx(reach * std::cos(t0))) << ' '
        << fmt(sy(reach * std::sin(t0))) << " L " << fmt(sx(reach * std::cos((t0 + t1) / 2) * 1.2)) << ' '
        << fmt(sy(reach * std::sin((t0 + t1) / 2) * 1.2)) << " L " << fmt(sx(reach * std::cos(t1))) << ' '
        << fmt(sy(reach * std::sin(t1))) << " Z\" fill=\"" << (family_a ? "#dbe9f6" : "#fbe3d6")
        << "\" stroke=\"#999999\" stroke-width=\"0.8\"/>\n";
    const double mid = (t0 + t1) / 2;
    svg << "<text x=\"" << fmt(sx(0.85 * kRadius * std::cos(mid))) << "\" y=\""
        << fmt(sy(0.85 * kRadius * std::sin(mid)) + 4) << "\" text-anchor=\"middle\" fill=\"#555555\">W" << k
        << (family_a ? "A" : "B") << "</text>\n";
  }
  svg << "<line x1=\"0\" y1=\"" << sy(0) << "\" x2=\"" << kSize << "\" y2=\"" << sy(0)
      << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"3 3\"/>\n"
      << "<line x1=\"" << sx(0) << "\" y1=\"0\" x2=\"" << sx(0) << "\" y2=\"" << kSize
      << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"3 3\"/>\n";

  std::vector<double> xs;
  for (int j = -4000; j <= 4000; ++j) xs.push_back(j * 0.01);
  const auto samples = sample(params, xs);
  std::string points;
  for (const auto& s : samples) {
    if (std::abs(s.z) > kRadius * 1.1) continue;
    if (!points.empty()) points += ' ';
    points += fmt(sx(s.z.real())) + "," + fmt(sy(s.z.imag()));
  }
  svg << "<polyline fill=\"none\" stroke=\"#111111\" stroke-width=\"2\" points=\"" << points << "\"/>\n";
  for (auto [theta, name] : {std::pair{report.theta_plus, "x->+inf"}, std::pair{report.theta_minus, "x->-inf"}}) {
    svg << "<line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << fmt(sx(kRadius * std::cos(theta)))
        << "\" y2=\"" << fmt(sy(kRadius * std::sin(theta)))
        << "\" stroke=\"#d62728\" stroke-width=\"1\" stroke-dasharray=\"6 3\"/>\n"
        << "<text x=\"" << fmt(sx(0.6 * kRadius * std::cos(theta))) << "\" y=\""
        << fmt(sy(0.6 * kRadius * std::sin(theta)) - 6) << "\" fill=\"#d62728\">" << escape_xml(name) << "</text>\n";
  }
  svg << "<text x=\"10\" y=\"18\" font-size=\"14\">z = a sqrt(b + icx), (a,b,c) = (" << escape_xml(params.to_string())
      << "), " << to_string(params.branch()) << "</text>\n"
      << "<text x=\"10\" y=\"" << kSize - 10 << "\">wedges " << report.wedge_minus << " -> " << report.wedge_plus
      << (report.adjacent ? ", adjacent" : ", non-adjacent") << (report.pt_symmetric ? ", PT-symmetric" : "")
      << "</text>\n</svg>\n";
  return svg.str();
}

}  // namespace ptc::io
