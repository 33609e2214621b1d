// Copyright (c) The ptcontour Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "ptcontour/contour.hpp"

#include <cmath>
#include <numbers>
#include <optional>

#include "ptcontour/errors.hpp"

namespace ptc {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_angle(double theta) {
  // into (-pi, pi]
  theta = std::remainder(theta, 2.0 * kPi);
  if (theta <= -kPi) theta += 2.0 * kPi;
  return theta;
}

bool wants_upper(Branch b) { return b == Branch::upper; }

// Picks +root or -root per the branch rule. prev disambiguates real roots.
std::complex<double> select_root(std::complex<double> root, Branch branch,
                                 const std::optional<std::complex<double>>& prev, double x) {
  if (branch == Branch::principal) return root;
  if (root == std::complex<double>(0.0, 0.0)) return root;
  if (root.imag() == 0.0) {
    if (!prev) {
      throw Error(ErrorCode::BranchUndefined,
                  "root is real at x = " + std::to_string(x) + " with no previous sample");
    }
    return std::abs(root - *prev) <= std::abs(-root - *prev) ? root : -root;
  }
  const bool upper = root.imag() > 0.0;
  return upper == wants_upper(branch) ? root : -root;
}

}  // namespace

std::vector<ContourSample> sample(const ContourParams& params, std::span<const double> x_values) {
  const std::complex<double> a = params.a().to_complex();
  const std::complex<double> b = params.b().to_complex();
  const std::complex<double> c = params.c().to_complex();
  const std::complex<double> i(0.0, 1.0);
  std::vector<ContourSample> out;
  out.reserve(x_values.size());
  std::optional<std::complex<double>> prev;
  for (double x : x_values) {
    const std::complex<double> root = a * std::sqrt(b + i * c * x);
    const std::complex<double> z = select_root(root, params.branch(), prev, x);
    out.push_back({x, z, params.branch()});
    prev = z;
  }
  return out;
}

std::complex<double> contour_point(const ContourParams& params, double x) {
  const double xs[1] = {x};
  return sample(params, xs).front().z;
}

EndpointAngles endpoint_angles(const ContourParams& params) {
  const std::complex<double> a = params.a().to_complex();
  const std::complex<double> ic = std::complex<double>(0.0, 1.0) * params.c().to_complex();
  if (ic.imag() == 0.0) {
    throw Error(ErrorCode::InvalidParams, "c is purely imaginary; the radicand stays on the real axis");
  }
  // Principal square root halves the principal argument of the radicand's
  // asymptotic direction +-ic.
  double plus = wrap_angle(std::arg(a) + std::arg(ic) / 2.0);
  double minus = wrap_angle(std::arg(a) + std::arg(-ic) / 2.0);
  if (params.branch() != Branch::principal) {
    const bool upper = params.branch() == Branch::upper;
    auto fix = [&](double theta) {
      const bool is_upper = std::sin(theta) > 0.0;
      return is_upper == upper ? theta : wrap_angle(theta + kPi);
    };
    plus = fix(plus);
    minus = fix(minus);
  }
  // Numerical confirmation far out along the contour.
  const double far = 1e8;
  const double xs[2] = {-far, far};
  std::vector<ContourSample> ends;
  try {
    ends = sample(params, xs);
  } catch (const Error&) {
    ends.clear();
  }
  if (ends.size() == 2) {
    const double num_minus = std::arg(ends[0].z);
    const double num_plus = std::arg(ends[1].z);
    if (std::abs(wrap_angle(num_minus - minus)) > 1e-6 || std::abs(wrap_angle(num_plus - plus)) > 1e-6) {
      throw Error(ErrorCode::PostconditionFailed, "closed-form endpoint angles disagree with arg z(+-1e8)");
    }
  }
  return {minus, plus};
}

char to_char(DecayFamily f) { return f == DecayFamily::A ? 'A' : 'B'; }

int wedge_index(double theta) { return static_cast<int>(std::floor(theta / (kPi / 3.0))); }

bool wedges_adjacent(int k1, int k2) {
  const int d = ((k1 - k2) % 6 + 6) % 6;
  return d == 1 || d == 5;
}

bool is_pt_symmetric(const ContourParams& params) {
  constexpr int kPoints = 1001;
  std::vector<double> xs(kPoints);
  for (int j = 0; j < kPoints; ++j) xs[static_cast<std::size_t>(j)] = -50.0 + 100.0 * j / (kPoints - 1);
  const auto samples = sample(params, xs);
  // The grid is symmetric, so sample j pairs with kPoints-1-j.
  for (int j = 0; j < kPoints; ++j) {
    const auto z = samples[static_cast<std::size_t>(j)].z;
    const auto mirrored = samples[static_cast<std::size_t>(kPoints - 1 - j)].z;
    if (std::abs(mirrored + std::conj(z)) > 1e-10 * std::max(1.0, std::abs(z))) return false;
  }
  return true;
}

WedgeReport wedge_report(const ContourParams& params) {
  const EndpointAngles angles = endpoint_angles(params);
  WedgeReport out;
  out.theta_plus = angles.theta_plus;
  out.theta_minus = angles.theta_minus;
  for (double theta : {angles.theta_plus, angles.theta_minus}) {
    const double ratio = theta / (kPi / 3.0);
    if (std::abs(ratio - std::round(ratio)) < 1e-12) {
      throw Error(ErrorCode::OnStokesLine, "endpoint angle " + std::to_string(theta) + " lies on a wedge boundary");
    }
  }
  out.wedge_plus = wedge_index(angles.theta_plus);
  out.wedge_minus = wedge_index(angles.theta_minus);
  out.decay_family_plus = std::sin(3.0 * angles.theta_plus) > 0.0 ? DecayFamily::A : DecayFamily::B;
  out.decay_family_minus = std::sin(3.0 * angles.theta_minus) > 0.0 ? DecayFamily::A : DecayFamily::B;
  out.adjacent = wedges_adjacent(out.wedge_plus, out.wedge_minus);
  out.pt_symmetric = is_pt_symmetric(params);
  return out;
}

}  // namespace ptc
