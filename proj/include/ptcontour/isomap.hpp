// Copyright (c) The ptcontour Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "ptcontour/crational.hpp"
#include "ptcontour/metric.hpp"
#include "ptcontour/params.hpp"

namespace ptc {

/// zeta = zeta2 zeta1 between two contours: zeta1 dilates p by beta (with a
/// parity flip when beta < 0) and zeta2 multiplies by exp(gamma p).
struct IsoMap {
  CRational beta;
  CRational gamma;
  ContourParams source;
  ContourParams target;
};

/// beta = a2^2 c2 / (a1^2 c1), gamma = b2/c2 - (b1/c1) / beta. Both
/// contours must be hermitizable.
IsoMap map_params(const ContourParams& src, const ContourParams& dst);

/// second after first. Throws Error{InvalidParams} unless first.target
/// equals second.source.
IsoMap compose(const IsoMap& second, const IsoMap& first);

/// (kappa3 / beta^3, kappa1 / beta - 2 gamma), checked exactly against
/// metric_of(target). Throws Error{InvalidParams} if eta1 is not the source
/// metric and Error{PushforwardMismatch} if the image differs from the target
/// metric.
MetricSpec push_metric(const IsoMap& m, const MetricSpec& eta1);

/// phi(p) = |beta|^{-1/2} psi(p / beta) exp(gamma p). The exponent is
/// transported exactly (c_k -> c_k / beta^k, plus gamma p). Without a target
/// grid the source grid is scaled by beta and no resampling happens;
/// otherwise the factor is resampled by four-point cubic interpolation.
///
/// Throws Error{GridMismatch} for asymmetric source grids, or when the
/// target grid reaches past the source support where the factor exceeds
/// 1e-12 of its peak.
TaggedWaveFn push_wavefn(const IsoMap& m, const TaggedWaveFn& u, const std::optional<Grid>& target = std::nullopt);

using AmplitudeTable = std::vector<std::vector<std::complex<double>>>;

struct IsometryReport {
  IsoMap map;
  AmplitudeTable source_amplitudes;  // <psi_i|eta1|psi_j>
  AmplitudeTable target_amplitudes;  // <phi_i|eta2|phi_j>
  double max_deviation = 0;          // max |A1 - A2|
  double source_identity_deviation = 0;
  double target_identity_deviation = 0;
  /// Pushed exponents equal those of the target's own eigenbasis.
  bool exponents_match_target = false;

  bool passed(double tol = 1e-6) const {
    return max_deviation < tol && source_identity_deviation < tol && target_identity_deviation < tol &&
           exponents_match_target;
  }
};

/// Compares amplitude matrices of the k lowest source eigenfunctions on
/// momentum_grid_for(src, n) with those of their images under zeta.
IsometryReport verify_isometry(const ContourParams& src, const ContourParams& dst, int k, int n = 801);

}  // namespace ptc
