// Copyright (c) The ptcontour Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <span>
#include <vector>

#include "ptcontour/params.hpp"

namespace ptc {

struct ContourSample {
  double x = 0.0;
  std::complex<double> z;
  Branch branch_used = Branch::principal;
};

/// z = a sqrt(b + icx). Principal uses the principal square root; lower and
/// upper pick, per x, the root of z^2 = a^2 (b + icx) with negative or
/// positive imaginary part. A real root is resolved by continuity with the
/// previous sample, or Error{BranchUndefined} if there is none.
std::vector<ContourSample> sample(const ContourParams& params, std::span<const double> x_values);
std::complex<double> contour_point(const ContourParams& params, double x);

struct EndpointAngles {
  double theta_minus = 0.0;  // direction of z as x -> -inf
  double theta_plus = 0.0;   // direction of z as x -> +inf
};

/// Closed-form asymptotic directions in (-pi, pi], cross-checked against
/// arg z(+-1e8) to 1e-6 (Error{PostconditionFailed} otherwise). Requires the
/// radicand to sweep off the real axis, i.e. c not purely imaginary.
EndpointAngles endpoint_angles(const ContourParams& params);

enum class DecayFamily { A, B };

/// Stokes-wedge classification for the -z^4 problem: wedges are the sectors
/// (k pi/3, (k+1) pi/3), family A when sin(3 theta) > 0 (exp(i z^3/3)
/// decays there), B otherwise.
struct WedgeReport {
  double theta_plus = 0.0;
  double theta_minus = 0.0;
  int wedge_plus = 0;
  int wedge_minus = 0;
  DecayFamily decay_family_plus = DecayFamily::A;
  DecayFamily decay_family_minus = DecayFamily::A;
  bool adjacent = false;
  bool pt_symmetric = false;
};

char to_char(DecayFamily f);
int wedge_index(double theta);
bool wedges_adjacent(int k1, int k2);

/// Throws Error{OnStokesLine} when an endpoint angle is a multiple of pi/3.
WedgeReport wedge_report(const ContourParams& params);

/// z(-x) == -conj(z(x)) on a 1001-point grid over [-50, 50], tolerance 1e-10.
bool is_pt_symmetric(const ContourParams& params);

}  // namespace ptc
