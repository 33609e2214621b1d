// Copyright (c) The ptcontour Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ptcontour/contour.hpp"
#include "ptcontour/params.hpp"

namespace ptc::io {

/// RFC 4180 table: comma separated, CRLF line ends, fields quoted when they
/// contain a comma, quote or line break.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);
  void row(const std::vector<std::string>& fields);
  const std::string& str() const { return text_; }

  /// %.17g, enough to round-trip a double.
  static std::string number(double value);

 private:
  void append(const std::vector<std::string>& fields);
  std::size_t width_;
  std::string text_;
};

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct LinePlot {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<Series> series;
  /// Clip range for y; samples outside it (or non-finite) break the line.
  std::optional<std::pair<double, double>> y_range;
};

/// Static SVG 1.1 line chart with axes, ticks and a legend.
std::string render_svg(const LinePlot& plot);

/// Complex z plane with the six Stokes wedges of the -z^4 problem (family A
/// shaded), the contour z(x) and its asymptotic directions.
std::string render_wedge_svg(const ContourParams& params, const WedgeReport& report);

}  // namespace ptc::io
