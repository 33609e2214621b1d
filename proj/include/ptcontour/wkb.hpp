// Copyright (c) The ptcontour Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string_view>
#include <vector>

#include "ptcontour/metric.hpp"
#include "ptcontour/params.hpp"

namespace ptc {

/// Momentum-space WKB forms for three contours:
///   upper_pt  z = i sqrt(1 + ix)   params (i, 1, 1)
///   adjacent  z = sqrt(1 + ix)     params (1, 1, 1)
///   sqrt_ix   z = sqrt(ix)         params (1, 0, 1)
enum class WkbTag { upper_pt, adjacent, sqrt_ix };

std::string_view to_string(WkbTag tag);
/// Throws Error{ParseError}.
WkbTag parse_wkb_tag(std::string_view text);
ContourParams params_for(WkbTag tag);

struct WkbValue {
  double log_magnitude = 0;
  /// Radicands of the exponent are non-negative, i.e. outside the turning zone.
  bool in_mask = true;
  /// Some intermediate radical took a complex principal value.
  bool complex_branch = false;
};

/// log|phi(p)|, evaluated term by term in log space with principal
/// branches. Throws Error{OutOfDomain} if the result is not finite.
WkbValue eval_wkb(WkbTag tag, double p);

/// log of phi(p) eta phi(p): 2 log|phi| plus the exact metric exponent of
/// the tag's contour.
double metric_weighted_wkb(WkbTag tag, double p);

struct WkbProfile {
  WkbTag tag = WkbTag::upper_pt;
  std::vector<double> p;
  std::vector<double> log_magnitude;
  std::vector<double> weighted;
  std::vector<bool> mask;
  std::vector<bool> complex_branch;
};

WkbProfile wkb_profile(WkbTag tag, const std::vector<double>& p);

struct TailCheck {
  int direction = 1;       // +1 for p -> +inf, -1 for p -> -inf
  bool expect_growth = false;
  bool monotone = false;   // strictly monotone in the expected sense on |p| in [10, 100]
};

struct AsymptoticsReport {
  WkbTag tag = WkbTag::upper_pt;
  std::vector<TailCheck> tails;
  /// Relative change of the trapezoid integral of exp(metric_weighted_wkb)
  /// over the masked samples between [-40, 40] and [-80, 80].
  double integrability_change = 0;
  bool weighted_decays_both_ends = false;

  bool passed() const;
};

AsymptoticsReport check_asymptotics(WkbTag tag);

struct SlopeComparison {
  int direction = 1;
  double numeric_slope = 0;  // least squares of log|psi| over |p| in [4, 8]
  double wkb_slope = 0;
  bool same_sign = false;
  double relative_difference = 0;
};

struct NumericComparison {
  WkbTag tag = WkbTag::upper_pt;
  int level = 0;
  std::vector<SlopeComparison> ends;  // positive end first
};

/// Compares large-|p| slopes of the numerically computed eigenfunction
/// (metric.eigenbasis on [-10, 10], 1001 points) with the WKB form.
NumericComparison compare_to_numeric(WkbTag tag, const ContourParams& params, int level = 0);

}  // namespace ptc
