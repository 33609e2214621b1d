// Copyright (c) The ptcontour Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "ptcontour/wkb.hpp"

#include <cmath>
#include <complex>

#include "ptcontour/errors.hpp"

namespace ptc {

namespace {

using cld = std::complex<long double>;

// Real part of A - sqrt(r)*scale where the square root is taken in the
// principal branch; an imaginary root only contributes a phase. When A and
// the root nearly cancel, (A^2 - B^2) is supplied in closed form.
long double cancelling_difference(long double a, long double r, long double scale, long double a2_minus_b2) {
  if (r < 0) return a;
  const long double b = scale * std::sqrt(r);
  if (a > 0) return a2_minus_b2 / (a + b);
  return a - b;
}

long double log_abs(cld z) { return std::log(std::abs(z)); }

cld principal_sqrt(long double r) { return std::sqrt(cld(r, 0)); }

cld pow_three_halves(long double p) { return std::pow(cld(p, 0), 1.5L); }

std::vector<double> tail_samples(int direction) {
  std::vector<double> out;
  for (int j = 0; j <= 900; ++j) out.push_back(direction * (10.0 + 0.1 * j));
  return out;
}

double trapezoid_weighted(WkbTag tag, double half_width, double h) {
  const int n = static_cast<int>(std::lround(2 * half_width / h));
  double acc = 0;
  for (int j = 0; j <= n; ++j) {
    const double p = -half_width + j * h;
    if (!eval_wkb(tag, p).in_mask) continue;
    const double weight = (j == 0 || j == n) ? 0.5 : 1.0;
    acc += weight * std::exp(metric_weighted_wkb(tag, p));
  }
  return acc * h;
}

double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double mx = 0;
  double my = 0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    mx += x[j];
    my += y[j];
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(x.size());
  double sxy = 0;
  double sxx = 0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    sxy += (x[j] - mx) * (y[j] - my);
    sxx += (x[j] - mx) * (x[j] - mx);
  }
  return sxy / sxx;
}

}  // namespace

std::string_view to_string(WkbTag tag) {
  switch (tag) {
    case WkbTag::upper_pt:
      return "upper_pt";
    case WkbTag::adjacent:
      return "adjacent";
    case WkbTag::sqrt_ix:
      return "sqrt_ix";
  }
  return "unknown";
}

WkbTag parse_wkb_tag(std::string_view text) {
  for (WkbTag tag : {WkbTag::upper_pt, WkbTag::adjacent, WkbTag::sqrt_ix}) {
    if (text == to_string(tag)) return tag;
  }
  throw Error(ErrorCode::ParseError, "unknown WKB tag '" + std::string(text) + "' at position 0");
}

ContourParams params_for(WkbTag tag) {
  switch (tag) {
    case WkbTag::upper_pt:
      return parse_params("i,1,1");
    case WkbTag::adjacent:
      return parse_params("1,1,1");
    case WkbTag::sqrt_ix:
      break;
  }
  return parse_params("1,0,1", Branch::upper);
}

WkbValue eval_wkb(WkbTag tag, double p_in) {
  const long double p = p_in;
  const long double p3 = p * p * p;
  WkbValue out;
  long double value = 0;

  if (tag == WkbTag::upper_pt) {
    // cbrt(sqrt(2(2p^3-1)) + 2p^{3/2}) exp(-2p^3/3 + p - |p| sqrt(2p(2p^3-1))/3)
    const long double pref_radicand = 2 * (2 * p3 - 1);
    const long double radicand = 2 * p * (2 * p3 - 1);
    const cld pref = principal_sqrt(pref_radicand) + 2.0L * pow_three_halves(p);
    value = log_abs(pref) / 3 + p + cancelling_difference(-2 * p3 / 3, radicand, std::abs(p) / 3, 2 * p3 / 9);
    out.in_mask = radicand >= 0;
    out.complex_branch = pref_radicand < 0 || p < 0;
  } else {
    // cbrt(sqrt2 p^{3/2} + sqrt(2p^3+1))^-1 exp(2p^3/3 [+ p] - sqrt(4p^6+2p^3)/3)
    const long double pref_radicand = 2 * p3 + 1;
    const long double radicand = 4 * p3 * p3 + 2 * p3;
    const cld pref = std::sqrt(2.0L) * pow_three_halves(p) + principal_sqrt(pref_radicand);
    value = -log_abs(pref) / 3 + cancelling_difference(2 * p3 / 3, radicand, 1.0L / 3, -2 * p3 / 9);
    if (tag == WkbTag::adjacent) value += p;
    out.in_mask = radicand >= 0;
    out.complex_branch = pref_radicand < 0 || p < 0;
  }
  out.log_magnitude = static_cast<double>(value);
  if (!std::isfinite(out.log_magnitude)) {
    throw Error(ErrorCode::OutOfDomain, "WKB form is not finite at p = " + std::to_string(p_in));
  }
  return out;
}

double metric_weighted_wkb(WkbTag tag, double p) {
  static const CubicExponent metric[] = {metric_of(params_for(WkbTag::upper_pt)).exponent(),
                                         metric_of(params_for(WkbTag::adjacent)).exponent(),
                                         metric_of(params_for(WkbTag::sqrt_ix)).exponent()};
  return 2 * eval_wkb(tag, p).log_magnitude + evaluate(metric[static_cast<int>(tag)], p);
}

WkbProfile wkb_profile(WkbTag tag, const std::vector<double>& p) {
  WkbProfile prof;
  prof.tag = tag;
  prof.p = p;
  for (double value : p) {
    const WkbValue v = eval_wkb(tag, value);
    prof.log_magnitude.push_back(v.log_magnitude);
    prof.weighted.push_back(metric_weighted_wkb(tag, value));
    prof.mask.push_back(v.in_mask);
    prof.complex_branch.push_back(v.complex_branch);
  }
  return prof;
}

bool AsymptoticsReport::passed() const {
  for (const auto& tail : tails) {
    if (!tail.monotone) return false;
  }
  return integrability_change < 1e-6 && weighted_decays_both_ends;
}

AsymptoticsReport check_asymptotics(WkbTag tag) {
  AsymptoticsReport report;
  report.tag = tag;
  report.weighted_decays_both_ends = true;
  for (int direction : {1, -1}) {
    TailCheck tail;
    tail.direction = direction;
    tail.expect_growth = tag == WkbTag::adjacent && direction == 1;
    tail.monotone = true;
    const auto samples = tail_samples(direction);
    double prev = eval_wkb(tag, samples.front()).log_magnitude;
    double prev_weighted = metric_weighted_wkb(tag, samples.front());
    for (std::size_t j = 1; j < samples.size(); ++j) {
      const double cur = eval_wkb(tag, samples[j]).log_magnitude;
      const double cur_weighted = metric_weighted_wkb(tag, samples[j]);
      if (tail.expect_growth ? !(cur > prev) : !(cur < prev)) tail.monotone = false;
      if (!(cur_weighted < prev_weighted)) report.weighted_decays_both_ends = false;
      prev = cur;
      prev_weighted = cur_weighted;
    }
    report.tails.push_back(tail);
  }
  const double inner = trapezoid_weighted(tag, 40, 0.01);
  const double outer = trapezoid_weighted(tag, 80, 0.01);
  report.integrability_change = std::abs(outer - inner) / std::abs(outer);
  return report;
}

NumericComparison compare_to_numeric(WkbTag tag, const ContourParams& params, int level) {
  const Grid grid(Variable::momentum, -10, 10, 1001);
  const auto basis = eigenbasis(params, level + 1, grid);
  const TaggedWaveFn& psi = basis[static_cast<std::size_t>(level)];

  NumericComparison out;
  out.tag = tag;
  out.level = level;
  for (int direction : {1, -1}) {
    std::vector<double> p;
    std::vector<double> numeric;
    std::vector<double> wkb;
    for (int j = 0; j < grid.n; ++j) {
      const double x = grid.point(j);
      const double outward = direction * x;
      if (outward < 4 - 1e-9 || outward > 8 + 1e-9) continue;
      p.push_back(x);
      numeric.push_back(psi.log_magnitude(j));
      wkb.push_back(eval_wkb(tag, x).log_magnitude);
    }
    SlopeComparison cmp;
    cmp.direction = direction;
    cmp.numeric_slope = least_squares_slope(p, numeric);
    cmp.wkb_slope = least_squares_slope(p, wkb);
    cmp.same_sign = (cmp.numeric_slope > 0) == (cmp.wkb_slope > 0);
    cmp.relative_difference = std::abs(cmp.numeric_slope - cmp.wkb_slope) / std::abs(cmp.wkb_slope);
    out.ends.push_back(cmp);
  }
  return out;
}

}  // namespace ptc
