// Copyright (c) The ptcontour Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <complex>
#include <vector>

#include "ptcontour/crational.hpp"
#include "ptcontour/params.hpp"
#include "ptcontour/spectral.hpp"

namespace ptc {

/// Real cubic c0 + c1 p + c2 p^2 + c3 p^3 with exact coefficients.
using CubicExponent = std::array<CRational, 4>;

double evaluate(const CubicExponent& e, double p);
CubicExponent operator+(const CubicExponent& lhs, const CubicExponent& rhs);
bool is_zero(const CubicExponent& e);
std::string to_string(const CubicExponent& e);

/// eta = exp(kappa3 p^3 + kappa1 p).
struct MetricSpec {
  CRational kappa3;
  CRational kappa1;
  ContourParams origin;

  CubicExponent exponent() const { return {CRational{}, kappa1, CRational{}, kappa3}; }
};

/// kappa3 = -4/(3 a^6 c^3), kappa1 = -2b/c; twice the hermitize generator.
MetricSpec metric_of(const ContourParams& params);

/// Momentum-space wavefunction stored as
///   psi(p_j) = factor[j] * exp(log_scale[j] + exponent(p_j)).
/// log_scale carries tail magnitudes below double range; exponent is kept
/// exact so that cancellation against a metric happens in rationals.
struct TaggedWaveFn {
  Grid grid;
  std::vector<std::complex<double>> factor;
  std::vector<double> log_scale;
  CubicExponent exponent;
  int level = 0;
  ContourParams params;

  /// factor[j] * exp(log_scale[j]).
  std::complex<double> scaled_factor(int j) const;
  /// log|psi(p_j)|, or -inf where the factor vanishes.
  double log_magnitude(int j) const;
};

/// Composite Simpson weights for n uniform samples with spacing h. Even n
/// closes with the 3/8 rule over the last three intervals.
std::vector<double> simpson_weights(int n, double h);

/// Simpson norm sqrt(int |factor e^log_scale|^2 dp), exponent excluded.
double factor_norm(const TaggedWaveFn& u);

/// Lowest k eigenfunctions of hermitize(params).h on a momentum grid,
/// returned as psi = rho^-1 chi with exponent -(f p^3 + g p). Each chi is
/// real, Simpson-normalised, and signed so its largest sample is positive.
/// Samples below 1e-8 of the peak are replaced by the decaying solution of
/// the tail equation chi'' = Q chi, integrated in log form.
std::vector<TaggedWaveFn> eigenbasis(const ContourParams& params, int k, const Grid& grid);

/// <u|eta|v> with a conjugated bra. The exponents of u, v and eta are added
/// exactly; if they cancel the integrand is conj(factor_u) factor_v.
///
/// Throws Error{GridMismatch} for different grids and Error{NonIntegrable}
/// when the combined exponent rises toward a grid end and exceeds 700 there.
std::complex<double> amplitude(const TaggedWaveFn& u, const TaggedWaveFn& v, const MetricSpec& eta);

/// [<psi_i|eta|psi_j>] for all pairs of a basis.
std::vector<std::vector<std::complex<double>>> amplitude_matrix(const std::vector<TaggedWaveFn>& basis,
                                                                const MetricSpec& eta);

struct HermiteDemo {
  int n_max = 0;
  std::vector<std::vector<double>> table;   // T_nm by Simpson quadrature
  std::vector<std::vector<double>> oracle;  // 2^n n! sqrt(pi) delta_nm
  std::vector<double> x;                    // plot abscissae on [-3, 3]
  std::vector<std::array<double, 4>> curves;  // H_0..H_3 at x

  /// max over n, m of |T_nm - oracle_nm| / (2^max(n,m) max(n,m)! sqrt(pi)).
  double max_relative_error() const;
};

/// Physicists' Hermite polynomial H_n(x) by the three-term recurrence.
double hermite(int n, double x);

/// T_nm = int H_n H_m exp(-x^2) dx on [-12, 12] with 200 Simpson intervals.
/// Throws Error{InvalidParams} unless 0 <= n_max <= 8.
HermiteDemo hermite_demo(int n_max);

}  // namespace ptc
