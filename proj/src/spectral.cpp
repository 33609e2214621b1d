// Copyright (c) The ptcontour Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "ptcontour/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ptcontour/errors.hpp"
#include "ptcontour/hamiltonians.hpp"

namespace ptc {

std::string_view to_string(Variable v) {
  return v == Variable::position ? "position" : "momentum";
}

Grid::Grid(Variable variable_, double lo_, double hi_, int n_)
    : variable(variable_), lo(lo_), hi(hi_), n(n_) {
  if (n < 16) throw Error(ErrorCode::InvalidParams, "grid needs at least 16 points");
  if (!(hi > lo)) throw Error(ErrorCode::InvalidParams, "grid needs hi > lo");
}

std::vector<double> Grid::points() const {
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(j)] = point(j);
  return out;
}

bool Grid::symmetric() const { return std::abs(lo + hi) <= 1e-12 * std::max(std::abs(lo), std::abs(hi)); }

bool Grid::same_as(const Grid& other, double rel_tol) const {
  const double scale = std::max({std::abs(lo), std::abs(hi), 1.0});
  return variable == other.variable && n == other.n && std::abs(lo - other.lo) <= rel_tol * scale &&
         std::abs(hi - other.hi) <= rel_tol * scale;
}

Grid momentum_grid_for(const ContourParams& params, int n, double half_width) {
  const double s = std::abs(params.a2c().to_complex());
  return {Variable::momentum, -half_width * s, half_width * s, n};
}

// Fornberg's recursion for finite-difference weights on arbitrary nodes.
std::vector<double> central_stencil(unsigned order) {
  if (order == 0) return {1.0};
  const int r = static_cast<int>(order + 1) / 2 + 1;
  const int count = 2 * r + 1;
  std::vector<long double> z(static_cast<std::size_t>(count));
  for (int j = 0; j < count; ++j) z[static_cast<std::size_t>(j)] = j - r;
  const int m = static_cast<int>(order);
  std::vector<std::vector<long double>> c(static_cast<std::size_t>(count),
                                          std::vector<long double>(static_cast<std::size_t>(m + 1), 0.0L));
  long double c1 = 1.0L;
  long double c4 = z[0];
  c[0][0] = 1.0L;
  for (int i = 1; i < count; ++i) {
    const int mn = std::min(i, m);
    long double c2 = 1.0L;
    const long double c5 = c4;
    c4 = z[static_cast<std::size_t>(i)];
    for (int j = 0; j < i; ++j) {
      const long double c3 = z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
      c2 *= c3;
      auto& ci = c[static_cast<std::size_t>(i)];
      auto& cj = c[static_cast<std::size_t>(j)];
      if (j == i - 1) {
        const auto& prev = c[static_cast<std::size_t>(i - 1)];
        for (int k = mn; k >= 1; --k) ci[static_cast<std::size_t>(k)] = c1 * (k * prev[static_cast<std::size_t>(k - 1)] - c5 * prev[static_cast<std::size_t>(k)]) / c2;
        ci[0] = -c1 * c5 * prev[0] / c2;
      }
      for (int k = mn; k >= 1; --k) cj[static_cast<std::size_t>(k)] = (c4 * cj[static_cast<std::size_t>(k)] - k * cj[static_cast<std::size_t>(k - 1)]) / c3;
      cj[0] = c4 * cj[0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int j = 0; j < count; ++j) out[static_cast<std::size_t>(j)] = static_cast<double>(c[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)]);
  return out;
}

namespace {

std::complex<double> i_pow(unsigned k, int sign) {
  // (sign * i)^k
  static const std::complex<double> cycle[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const unsigned idx = sign > 0 ? k % 4 : (4 - k % 4) % 4;
  return cycle[idx];
}

void add_monomial(Eigen::MatrixXcd& out, const Grid& grid, std::complex<double> coeff, unsigned m,
                  unsigned n) {
  const int size = grid.n;
  const double h = grid.spacing();
  const bool position = grid.variable == Variable::position;
  // The differentiated power and the diagonal power.
  const unsigned deriv = position ? n : m;
  const unsigned diag = position ? m : n;
  const std::vector<double> w = central_stencil(deriv);
  const int r = static_cast<int>(w.size() / 2);
  const std::complex<double> scale = coeff * i_pow(deriv, position ? -1 : 1) / std::pow(h, static_cast<double>(deriv));
  for (int j = 0; j < size; ++j) {
    const int k0 = std::max(0, j - r);
    const int k1 = std::min(size - 1, j + r);
    for (int k = k0; k <= k1; ++k) {
      const double wk = w[static_cast<std::size_t>(k - j + r)];
      if (wk == 0.0) continue;
      // Position: X^m D_n, the diagonal sits on the row. Momentum: D_m P^n,
      // the diagonal sits on the column.
      const double v = std::pow(grid.point(position ? j : k), static_cast<double>(diag));
      out(j, k) += scale * wk * v;
    }
  }
}

bool is_real_matrix(const Eigen::MatrixXcd& m) { return m.imag().cwiseAbs().maxCoeff() == 0.0; }

void check_hermitian(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::NotHermitian, "matrix is not square");
  const double scale = m.cwiseAbs().maxCoeff();
  const double skew = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (skew > 1e-10 * scale) {
    throw Error(ErrorCode::NotHermitian, "matrix deviates from Hermitian by " + std::to_string(skew));
  }
}

void fill_residuals(const Eigen::MatrixXcd& m, SpectrumResult& out) {
  out.residual_norms.clear();
  for (Eigen::Index j = 0; j < out.eigenvectors.cols(); ++j) {
    const Eigen::VectorXcd v = out.eigenvectors.col(j);
    const Eigen::VectorXcd r = m * v - out.eigenvalues[static_cast<std::size_t>(j)] * v;
    out.residual_norms.push_back(r.norm() / v.norm());
  }
}

int clamp_levels(int k, Eigen::Index size) {
  if (k < 1) throw Error(ErrorCode::InvalidParams, "need at least one level");
  return static_cast<int>(std::min<Eigen::Index>(std::min(k, kMaxRetainedLevels), size));
}

}  // namespace

Eigen::MatrixXcd matrixize(const OperatorExpr& a, const Grid& grid) {
  if (grid.n < 4 * static_cast<int>(a.degree())) {
    throw Error(ErrorCode::GridTooCoarse, "grid of " + std::to_string(grid.n) +
                                              " points is too coarse for degree " +
                                              std::to_string(a.degree()));
  }
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(grid.n, grid.n);
  for (const auto& [key, c] : a.terms()) add_monomial(out, grid, c.to_complex(), key.first, key.second);
  return out;
}

SpectrumResult eigensolve_hermitian(const Eigen::MatrixXcd& m, int k) {
  check_hermitian(m);
  const int levels = clamp_levels(k, m.rows());
  SpectrumResult out;
  if (is_real_matrix(m)) {
    const Eigen::MatrixXd real = m.real();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(real);
    if (solver.info() != Eigen::Success) throw Error(ErrorCode::NoConvergence, "symmetric eigensolver failed");
    out.eigenvectors = solver.eigenvectors().leftCols(levels).cast<std::complex<double>>();
    for (int j = 0; j < levels; ++j) out.eigenvalues.emplace_back(solver.eigenvalues()(j), 0.0);
    out.method = "dense-symmetric";
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    if (solver.info() != Eigen::Success) throw Error(ErrorCode::NoConvergence, "Hermitian eigensolver failed");
    out.eigenvectors = solver.eigenvectors().leftCols(levels);
    for (int j = 0; j < levels; ++j) out.eigenvalues.emplace_back(solver.eigenvalues()(j), 0.0);
    out.method = "dense-hermitian";
  }
  fill_residuals(m, out);
  return out;
}

std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& m, int k) {
  check_hermitian(m);
  const int levels = clamp_levels(k, m.rows());
  Eigen::VectorXd values;
  if (is_real_matrix(m)) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.real(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw Error(ErrorCode::NoConvergence, "symmetric eigensolver failed");
    values = solver.eigenvalues();
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw Error(ErrorCode::NoConvergence, "Hermitian eigensolver failed");
    values = solver.eigenvalues();
  }
  return {values.data(), values.data() + levels};
}

SpectrumResult eigensolve_general(const Eigen::MatrixXcd& m, int k) {
  const int levels = clamp_levels(k, m.rows());
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, true);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NoConvergence, "shifted QR did not converge");
  }
  std::vector<Eigen::Index> order(static_cast<std::size_t>(m.rows()));
  std::iota(order.begin(), order.end(), 0);
  const auto& values = solver.eigenvalues();
  std::sort(order.begin(), order.end(),
            [&](Eigen::Index l, Eigen::Index r) { return values(l).real() < values(r).real(); });
  SpectrumResult out;
  out.eigenvectors.resize(m.rows(), levels);
  for (int j = 0; j < levels; ++j) {
    const Eigen::Index idx = order[static_cast<std::size_t>(j)];
    out.eigenvalues.push_back(values(idx));
    out.eigenvectors.col(j) = solver.eigenvectors().col(idx);
  }
  out.method = "dense-schur";
  fill_residuals(m, out);
  return out;
}

OracleSpectrum oracle_spectrum(int levels) { return oracle_spectrum(levels, anchor_hamiltonian()); }

OracleSpectrum oracle_spectrum(int levels, const OperatorExpr& op, const std::vector<int>& grid_sizes,
                               double half_width) {
  if (levels < 1 || levels > 8) throw Error(ErrorCode::InvalidParams, "oracle supports 1..8 levels");
  if (grid_sizes.size() < 3) throw Error(ErrorCode::InvalidParams, "oracle needs three grid sizes");
  OracleSpectrum out;
  out.grid_sizes = grid_sizes;
  std::vector<double> spacing;
  for (int n : grid_sizes) {
    const Grid grid(Variable::position, -half_width, half_width, n);
    out.raw.push_back(hermitian_eigenvalues(matrixize(op, grid), levels));
    spacing.push_back(grid.spacing());
  }
  auto extrapolate = [&](std::size_t i, std::size_t j, int level) {
    const double hi4 = std::pow(spacing[i], 4);
    const double hj4 = std::pow(spacing[j], 4);
    const double ei = out.raw[i][static_cast<std::size_t>(level)];
    const double ej = out.raw[j][static_cast<std::size_t>(level)];
    return (ej * hi4 - ei * hj4) / (hi4 - hj4);
  };
  const std::size_t last = grid_sizes.size() - 1;
  for (int level = 0; level < levels; ++level) {
    const double coarse = extrapolate(last - 2, last - 1, level);
    const double fine = extrapolate(last - 1, last, level);
    out.levels.push_back(fine);
    out.drift.push_back(std::abs(fine - coarse));
    if (out.drift.back() >= kOracleDriftBound) {
      throw Error(ErrorCode::NotConverged, "oracle level " + std::to_string(level) + " drifts by " +
                                               std::to_string(out.drift.back()));
    }
  }
  return out;
}

SpectrumResult hermitian_spectrum(const ContourParams& params, int k, int n) {
  const Grid grid = momentum_grid_for(params, n);
  SpectrumResult out = eigensolve_hermitian(matrixize(hermitize(params).h, grid), k);
  out.grid = grid;
  return out;
}

SpectrumResult h1_spectrum(const ContourParams& params, int k, const Grid& grid) {
  SpectrumResult out = eigensolve_general(matrixize(build_H1(params), grid), k);
  out.grid = grid;
  return out;
}

}  // namespace ptc
