// Copyright (c) The ptcontour Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "ptcontour/isomap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ptcontour/errors.hpp"
#include "ptcontour/hamiltonians.hpp"

namespace ptc {

namespace {

void require_hermitizable(const ContourParams& params) {
  if (!params.real_a2c()) {
    throw Error(ErrorCode::NotHermitizable, "a^2 c is not real for " + params.to_string());
  }
  if (!params.real_b_over_c()) {
    throw Error(ErrorCode::NonHermitianRho, "b/c is not real for " + params.to_string());
  }
}

double max_identity_deviation(const AmplitudeTable& table) {
  double worst = 0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (std::size_t j = 0; j < table[i].size(); ++j) {
      worst = std::max(worst, std::abs(table[i][j] - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

// Four-point Lagrange interpolation of factor * exp(log_scale) at source
// coordinate q. Returns (factor, log_scale) with the scale pulled out so
// that tails far below double range survive.
std::pair<std::complex<double>, double> interpolate(const TaggedWaveFn& u, double q) {
  const Grid& g = u.grid;
  const double t = (q - g.lo) / g.spacing();
  const int base = std::clamp(static_cast<int>(std::floor(t)) - 1, 0, g.n - 4);
  double top = -std::numeric_limits<double>::infinity();
  for (int j = base; j < base + 4; ++j) top = std::max(top, u.log_scale[static_cast<std::size_t>(j)]);

  std::complex<double> acc = 0;
  for (int j = base; j < base + 4; ++j) {
    double weight = 1;
    for (int l = base; l < base + 4; ++l) {
      if (l != j) weight *= (t - l) / static_cast<double>(j - l);
    }
    const auto idx = static_cast<std::size_t>(j);
    acc += weight * u.factor[idx] * std::exp(u.log_scale[idx] - top);
  }
  return {acc, top};
}

}  // namespace

IsoMap map_params(const ContourParams& src, const ContourParams& dst) {
  require_hermitizable(src);
  require_hermitizable(dst);
  const CRational beta = dst.a2c() / src.a2c();
  const CRational gamma = dst.b_over_c() - src.b_over_c() / beta;
  return {beta, gamma, src, dst};
}

IsoMap compose(const IsoMap& second, const IsoMap& first) {
  if (!(first.target == second.source)) {
    throw Error(ErrorCode::InvalidParams, "cannot compose maps through different contours");
  }
  return {first.beta * second.beta, second.gamma + first.gamma / second.beta, first.source, second.target};
}

MetricSpec push_metric(const IsoMap& m, const MetricSpec& eta1) {
  const MetricSpec source = metric_of(m.source);
  if (eta1.kappa3 != source.kappa3 || eta1.kappa1 != source.kappa1) {
    throw Error(ErrorCode::InvalidParams, "metric does not belong to the source contour " + m.source.to_string());
  }
  MetricSpec pushed{eta1.kappa3 / m.beta.pow(3), eta1.kappa1 / m.beta - CRational(2) * m.gamma, m.target};
  const MetricSpec target = metric_of(m.target);
  if (pushed.kappa3 != target.kappa3 || pushed.kappa1 != target.kappa1) {
    throw Error(ErrorCode::PushforwardMismatch,
                "pushed metric (" + pushed.kappa3.to_string() + ", " + pushed.kappa1.to_string() +
                    ") differs from target (" + target.kappa3.to_string() + ", " + target.kappa1.to_string() + ")");
  }
  return pushed;
}

TaggedWaveFn push_wavefn(const IsoMap& m, const TaggedWaveFn& u, const std::optional<Grid>& target) {
  if (u.grid.variable != Variable::momentum || !u.grid.symmetric()) {
    throw Error(ErrorCode::GridMismatch, "push_wavefn needs a symmetric momentum grid");
  }
  const double beta = rational_to_double(m.beta.re());
  const double log_jacobian = -0.5 * std::log(std::abs(beta));

  TaggedWaveFn out{u.grid, {}, {}, {}, u.level, m.target};
  CRational scale = 1;
  for (std::size_t k = 0; k < 4; ++k) {
    out.exponent[k] = u.exponent[k] / scale;
    scale *= m.beta;
  }
  out.exponent[1] += m.gamma;

  const Grid natural(Variable::momentum, -std::abs(beta) * u.grid.hi, std::abs(beta) * u.grid.hi, u.grid.n);
  if (!target || target->same_as(natural)) {
    out.grid = natural;
    out.factor = u.factor;
    out.log_scale = u.log_scale;
    if (beta < 0) {
      std::reverse(out.factor.begin(), out.factor.end());
      std::reverse(out.log_scale.begin(), out.log_scale.end());
    }
    for (double& value : out.log_scale) value += log_jacobian;
    return out;
  }

  const Grid& grid = *target;
  if (grid.variable != Variable::momentum) throw Error(ErrorCode::GridMismatch, "target grid must be in momentum");
  double peak = 0;
  for (int j = 0; j < u.grid.n; ++j) peak = std::max(peak, std::abs(u.scaled_factor(j)));
  const double edge = std::max(std::abs(u.scaled_factor(0)), std::abs(u.scaled_factor(u.grid.n - 1)));

  out.grid = grid;
  out.factor.resize(static_cast<std::size_t>(grid.n));
  out.log_scale.resize(static_cast<std::size_t>(grid.n));
  const double slack = 1e-12 * u.grid.spacing();
  for (int j = 0; j < grid.n; ++j) {
    const double q = grid.point(j) / beta;
    const auto idx = static_cast<std::size_t>(j);
    if (q < u.grid.lo - slack || q > u.grid.hi + slack) {
      if (edge > 1e-12 * peak) {
        throw Error(ErrorCode::GridMismatch, "target grid extends past the support of the source factor");
      }
      out.factor[idx] = 0;
      out.log_scale[idx] = 0;
      continue;
    }
    const auto [value, log_scale] = interpolate(u, q);
    out.factor[idx] = value;
    out.log_scale[idx] = log_scale + log_jacobian;
  }
  return out;
}

IsometryReport verify_isometry(const ContourParams& src, const ContourParams& dst, int k, int n) {
  IsometryReport report{map_params(src, dst), {}, {}, 0, 0, 0, false};
  const MetricSpec eta1 = metric_of(src);
  const MetricSpec eta2 = push_metric(report.map, eta1);

  const auto basis = eigenbasis(src, k, momentum_grid_for(src, n));
  std::vector<TaggedWaveFn> images;
  images.reserve(basis.size());
  for (const auto& u : basis) images.push_back(push_wavefn(report.map, u));

  report.source_amplitudes = amplitude_matrix(basis, eta1);
  report.target_amplitudes = amplitude_matrix(images, eta2);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      report.max_deviation =
          std::max(report.max_deviation, std::abs(report.source_amplitudes[i][j] - report.target_amplitudes[i][j]));
    }
  }
  report.source_identity_deviation = max_identity_deviation(report.source_amplitudes);
  report.target_identity_deviation = max_identity_deviation(report.target_amplitudes);

  const Hermitized herm = hermitize(dst);
  const CubicExponent own{CRational{}, -herm.g, CRational{}, -herm.f};
  report.exponents_match_target =
      std::all_of(images.begin(), images.end(), [&](const TaggedWaveFn& phi) { return phi.exponent == own; });
  return report;
}

}  // namespace ptc
