// Copyright (c) The ptcontour Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "ptcontour/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <numbers>

#include "ptcontour/errors.hpp"
#include "ptcontour/hamiltonians.hpp"

namespace ptc {

double evaluate(const CubicExponent& e, double p) {
  double acc = 0;
  for (int k = 3; k >= 0; --k) acc = acc * p + rational_to_double(e[static_cast<std::size_t>(k)].re());
  return acc;
}

CubicExponent operator+(const CubicExponent& lhs, const CubicExponent& rhs) {
  CubicExponent out;
  for (std::size_t k = 0; k < 4; ++k) out[k] = lhs[k] + rhs[k];
  return out;
}

bool is_zero(const CubicExponent& e) {
  return std::all_of(e.begin(), e.end(), [](const CRational& c) { return c.is_zero(); });
}

std::string to_string(const CubicExponent& e) {
  OperatorExpr poly;
  for (unsigned k = 0; k < 4; ++k) poly.add_term(0, k, e[k]);
  return poly.to_string();
}

MetricSpec metric_of(const ContourParams& params) {
  const Hermitized herm = hermitize(params);
  return {CRational(2) * herm.f, CRational(2) * herm.g, params};
}

std::complex<double> TaggedWaveFn::scaled_factor(int j) const {
  const auto idx = static_cast<std::size_t>(j);
  return factor[idx] * std::exp(log_scale[idx]);
}

double TaggedWaveFn::log_magnitude(int j) const {
  const auto idx = static_cast<std::size_t>(j);
  const double mag = std::abs(factor[idx]);
  if (mag == 0) return -std::numeric_limits<double>::infinity();
  return std::log(mag) + log_scale[idx] + evaluate(exponent, grid.point(j));
}

std::vector<double> simpson_weights(int n, double h) {
  if (n < 4) throw Error(ErrorCode::InvalidParams, "Simpson rule needs at least 4 samples");
  std::vector<double> w(static_cast<std::size_t>(n), 0.0);
  // Odd interval count: Simpson up to n-4, then 3/8 over the last three.
  const int simpson_end = (n % 2 == 1) ? n - 1 : n - 4;
  for (int j = 0; j + 2 <= simpson_end; j += 2) {
    w[static_cast<std::size_t>(j)] += h / 3;
    w[static_cast<std::size_t>(j + 1)] += 4 * h / 3;
    w[static_cast<std::size_t>(j + 2)] += h / 3;
  }
  if (n % 2 == 0) {
    const auto j = static_cast<std::size_t>(n - 4);
    w[j] += 3 * h / 8;
    w[j + 1] += 9 * h / 8;
    w[j + 2] += 9 * h / 8;
    w[j + 3] += 3 * h / 8;
  }
  return w;
}

double factor_norm(const TaggedWaveFn& u) {
  const auto w = simpson_weights(u.grid.n, u.grid.spacing());
  double acc = 0;
  for (int j = 0; j < u.grid.n; ++j) acc += w[static_cast<std::size_t>(j)] * std::norm(u.scaled_factor(j));
  return std::sqrt(acc);
}

namespace {

// h = C x^2 + V(p); in momentum representation the eigenproblem reads
// chi'' = Q chi with Q = (V - E) / C.
struct TailEquation {
  double c = 0;
  std::vector<double> v;  // V coefficients by power of p
  double energy = 0;

  double q(double p) const {
    double acc = 0;
    for (std::size_t k = v.size(); k-- > 0;) acc = acc * p + v[k];
    return (acc - energy) / c;
  }
  double dq(double p) const {
    double acc = 0;
    for (std::size_t k = v.size(); k-- > 1;) acc = acc * p + static_cast<double>(k) * v[k];
    return acc / c;
  }
};

std::optional<TailEquation> tail_equation(const OperatorExpr& h) {
  TailEquation eq;
  for (const auto& [key, coeff] : h.terms()) {
    if (!coeff.is_real()) return std::nullopt;
    const double value = rational_to_double(coeff.re());
    if (key == OperatorExpr::Key{2, 0}) {
      eq.c = value;
    } else if (key.first == 0) {
      if (eq.v.size() <= key.second) eq.v.resize(key.second + 1, 0.0);
      eq.v[key.second] = value;
    } else {
      return std::nullopt;
    }
  }
  if (!(eq.c > 0)) return std::nullopt;
  return eq;
}

// Integrates the Riccati form y' = Q - y^2 (y = chi'/chi) from the grid end
// `far` toward `match`, where the recessive branch is the stable direction.
// Returns log|chi(p_j)| - log|chi(p_match)| for every j between them.
std::vector<double> riccati_tail(const TailEquation& eq, const Grid& grid, int match, int far) {
  const int dir = far > match ? 1 : -1;
  const double h = grid.spacing();
  auto rhs = [&](double p, double y) { return eq.q(p) - y * y; };

  const double p_far = grid.point(far);
  const double q_far = eq.q(p_far);
  double y = dir * -std::sqrt(q_far) - eq.dq(p_far) / (4 * q_far);
  double integral = 0;  // int_{p_far}^{p} y dp

  const auto count = static_cast<std::size_t>(std::abs(far - match) + 1);
  std::vector<double> from_far(count, 0.0);
  for (int j = far; j != match; j -= dir) {
    const double p0 = grid.point(j);
    const double qmax = std::max(eq.q(p0), eq.q(grid.point(j - dir)));
    const int steps = std::max(1, static_cast<int>(std::ceil(h * 2 * std::sqrt(std::max(qmax, 0.0)) / 0.5)));
    const double dt = -dir * h / steps;
    for (int s = 0; s < steps; ++s) {
      const double p = p0 + s * dt;
      const double k1 = rhs(p, y);
      const double k2 = rhs(p + dt / 2, y + dt / 2 * k1);
      const double k3 = rhs(p + dt / 2, y + dt / 2 * k2);
      const double k4 = rhs(p + dt, y + dt * k3);
      const double l1 = y;
      const double l2 = y + dt / 2 * k1;
      const double l3 = y + dt / 2 * k2;
      const double l4 = y + dt * k3;
      integral += dt / 6 * (l1 + 2 * l2 + 2 * l3 + l4);
      y += dt / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
    }
    from_far[static_cast<std::size_t>(std::abs(j - dir - far))] = integral;
  }
  // int_{p_match}^{p_j} y = F(p_j) - F(p_match), F measured from the far end.
  const double at_match = from_far.back();
  for (auto& value : from_far) value -= at_match;
  return from_far;
}

void refine_tails(TaggedWaveFn& u, const std::vector<double>& chi, const TailEquation& eq) {
  const int n = u.grid.n;
  double peak = 0;
  for (double value : chi) peak = std::max(peak, std::abs(value));
  const double threshold = 1e-8 * peak;

  int left = 0;
  while (left < n && std::abs(chi[static_cast<std::size_t>(left)]) < threshold) ++left;
  int right = n - 1;
  while (right >= 0 && std::abs(chi[static_cast<std::size_t>(right)]) < threshold) --right;

  auto apply = [&](int match, int far) {
    if (match == far) return;
    const int dir = far > match ? 1 : -1;
    for (int j = match; j != far + dir; j += dir) {
      if (!(eq.q(u.grid.point(j)) > 0)) return;
    }
    const auto offsets = riccati_tail(eq, u.grid, match, far);
    const double anchor = chi[static_cast<std::size_t>(match)];
    const double sign = anchor > 0 ? 1.0 : -1.0;
    for (int j = match + dir; j != far + dir; j += dir) {
      const auto idx = static_cast<std::size_t>(j);
      u.factor[idx] = sign;
      u.log_scale[idx] = std::log(std::abs(anchor)) + offsets[static_cast<std::size_t>(std::abs(far - j))];
    }
  };
  apply(right, n - 1);
  apply(left, 0);
}

}  // namespace

std::vector<TaggedWaveFn> eigenbasis(const ContourParams& params, int k, const Grid& grid) {
  if (grid.variable != Variable::momentum) {
    throw Error(ErrorCode::InvalidParams, "eigenbasis needs a momentum grid");
  }
  const Hermitized herm = hermitize(params);
  const SpectrumResult spec = eigensolve_hermitian(matrixize(herm.h, grid), k);
  const auto weights = simpson_weights(grid.n, grid.spacing());
  const CubicExponent exponent{CRational{}, -herm.g, CRational{}, -herm.f};
  auto eq = tail_equation(herm.h);

  std::vector<TaggedWaveFn> out;
  for (int level = 0; level < static_cast<int>(spec.eigenvalues.size()); ++level) {
    const auto column = spec.eigenvectors.col(level);
    Eigen::Index peak = 0;
    column.cwiseAbs().maxCoeff(&peak);
    const std::complex<double> phase = std::conj(column(peak)) / std::abs(column(peak));

    std::vector<double> chi(static_cast<std::size_t>(grid.n));
    double norm2 = 0;
    for (int j = 0; j < grid.n; ++j) {
      const double value = (phase * column(j)).real();
      chi[static_cast<std::size_t>(j)] = value;
      norm2 += weights[static_cast<std::size_t>(j)] * value * value;
    }
    const double scale = 1.0 / std::sqrt(norm2);
    for (double& value : chi) value *= scale;

    TaggedWaveFn u{grid,
                   std::vector<std::complex<double>>(chi.begin(), chi.end()),
                   std::vector<double>(static_cast<std::size_t>(grid.n), 0.0),
                   exponent,
                   level,
                   params};
    if (eq) {
      eq->energy = spec.eigenvalues[static_cast<std::size_t>(level)].real();
      refine_tails(u, chi, *eq);
    }
    out.push_back(std::move(u));
  }
  return out;
}

std::complex<double> amplitude(const TaggedWaveFn& u, const TaggedWaveFn& v, const MetricSpec& eta) {
  if (!u.grid.same_as(v.grid)) throw Error(ErrorCode::GridMismatch, "amplitude operands live on different grids");
  const Grid& grid = u.grid;
  const auto w = simpson_weights(grid.n, grid.spacing());
  const CubicExponent e = u.exponent + v.exponent + eta.exponent();
  const bool cancelled = is_zero(e);

  if (!cancelled) {
    const double h = grid.spacing();
    const double e_hi = evaluate(e, grid.hi);
    const double e_lo = evaluate(e, grid.lo);
    const bool rises_hi = e_hi > evaluate(e, grid.hi - h);
    const bool rises_lo = e_lo > evaluate(e, grid.lo + h);
    if ((rises_hi && e_hi > 700) || (rises_lo && e_lo > 700)) {
      throw Error(ErrorCode::NonIntegrable, "combined exponent " + to_string(e) + " diverges at the grid edge");
    }
  }

  std::complex<double> acc = 0;
  for (int j = 0; j < grid.n; ++j) {
    const auto idx = static_cast<std::size_t>(j);
    const std::complex<double> fu = u.factor[idx];
    const std::complex<double> fv = v.factor[idx];
    if (fu == 0.0 || fv == 0.0) continue;
    double log_weight = u.log_scale[idx] + v.log_scale[idx];
    if (!cancelled) log_weight += evaluate(e, grid.point(j));
    acc += w[idx] * std::conj(fu) * fv * std::exp(log_weight);
  }
  return acc;
}

std::vector<std::vector<std::complex<double>>> amplitude_matrix(const std::vector<TaggedWaveFn>& basis,
                                                                const MetricSpec& eta) {
  std::vector<std::vector<std::complex<double>>> out(basis.size(),
                                                     std::vector<std::complex<double>>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) out[i][j] = amplitude(basis[i], basis[j], eta);
  }
  return out;
}

double hermite(int n, double x) {
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 2 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2 * x * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double HermiteDemo::max_relative_error() const {
  double worst = 0;
  for (int n = 0; n <= n_max; ++n) {
    for (int m = 0; m <= n_max; ++m) {
      const int top = std::max(n, m);
      const double scale = oracle[static_cast<std::size_t>(top)][static_cast<std::size_t>(top)];
      worst = std::max(worst, std::abs(table[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] -
                                       oracle[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)]) /
                                  scale);
    }
  }
  return worst;
}

HermiteDemo hermite_demo(int n_max) {
  if (n_max < 0 || n_max > 8) throw Error(ErrorCode::InvalidParams, "hermite_demo supports n_max in [0, 8]");
  constexpr int kNodes = 201;
  constexpr double kHalf = 12.0;
  const double h = 2 * kHalf / (kNodes - 1);
  const auto w = simpson_weights(kNodes, h);

  HermiteDemo demo;
  demo.n_max = n_max;
  const auto size = static_cast<std::size_t>(n_max + 1);
  demo.table.assign(size, std::vector<double>(size, 0.0));
  demo.oracle.assign(size, std::vector<double>(size, 0.0));
  for (int j = 0; j < kNodes; ++j) {
    const double x = -kHalf + j * h;
    const double weight = w[static_cast<std::size_t>(j)] * std::exp(-x * x);
    for (int n = 0; n <= n_max; ++n) {
      for (int m = 0; m <= n_max; ++m) {
        demo.table[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] += weight * hermite(n, x) * hermite(m, x);
      }
    }
  }
  double norm = std::sqrt(std::numbers::pi);
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) norm *= 2.0 * n;
    demo.oracle[static_cast<std::size_t>(n)][static_cast<std::size_t>(n)] = norm;
  }
  for (int j = 0; j <= 120; ++j) {
    const double x = -3.0 + j * 0.05;
    demo.x.push_back(x);
    demo.curves.push_back({hermite(0, x), hermite(1, x), hermite(2, x), hermite(3, x)});
  }
  return demo;
}

}  // namespace ptc
