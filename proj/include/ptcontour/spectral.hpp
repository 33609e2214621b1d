// Copyright (c) The ptcontour Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ptcontour/operator_expr.hpp"
#include "ptcontour/params.hpp"

namespace ptc {

enum class Variable { position, momentum };

std::string_view to_string(Variable v);

/// Uniform grid of n points on [lo, hi], endpoints included. Values beyond
/// the endpoints are taken as zero (Dirichlet).
struct Grid {
  Variable variable = Variable::position;
  double lo = -1.0;
  double hi = 1.0;
  int n = 16;

  Grid() = default;
  /// Throws Error{InvalidParams} unless n >= 16 and hi > lo.
  Grid(Variable variable, double lo, double hi, int n);

  double spacing() const { return (hi - lo) / (n - 1); }
  double point(int j) const { return lo + j * spacing(); }
  std::vector<double> points() const;
  bool symmetric() const;
  bool same_as(const Grid& other, double rel_tol = 1e-12) const;
};

/// Symmetric momentum grid [-w|a^2 c|, w|a^2 c|]. The Hermitian form of H1
/// is a dilation by a^2 c of one fixed operator, so scaling the box with it
/// keeps every contour on the same effective resolution.
Grid momentum_grid_for(const ContourParams& params, int n, double half_width = 6.0);

/// Centered finite-difference weights (unit spacing) for the derivative of
/// the given order with fourth-order accuracy; size 2r+1, centre at index r.
std::vector<double> central_stencil(unsigned order);

/// Dense matrix of a normal-ordered operator. Position grid: x is diagonal
/// and p^n = (-i d/dx)^n. Momentum grid: p is diagonal and x^m = (i d/dp)^m.
/// Each monomial x^m p^n becomes X^m P^n, with powers of the differentiated
/// variable taken as fourth-order n-th derivative stencils.
/// Throws Error{GridTooCoarse} if n < 4 * degree(A).
Eigen::MatrixXcd matrixize(const OperatorExpr& a, const Grid& grid);

struct SpectrumResult {
  std::vector<std::complex<double>> eigenvalues;  // ascending real part
  std::vector<double> residual_norms;             // ||Mv - lv|| / ||v||
  Eigen::MatrixXcd eigenvectors;                  // one column per eigenvalue
  std::optional<Grid> grid;
  std::string method;
};

inline constexpr int kMaxRetainedLevels = 12;

/// k lowest eigenpairs of a Hermitian matrix. Real symmetric input takes the
/// real solver. Throws Error{NotHermitian} if ||M - M^H||_max exceeds
/// 1e-10 ||M||_max.
SpectrumResult eigensolve_hermitian(const Eigen::MatrixXcd& m, int k);

/// k eigenvalues of smallest real part of a general complex matrix via
/// Hessenberg reduction and shifted QR. Throws Error{NoConvergence}.
SpectrumResult eigensolve_general(const Eigen::MatrixXcd& m, int k);

/// Eigenvalues only, for large Hermitian sweeps where vectors are not needed.
std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& m, int k);

struct OracleSpectrum {
  std::vector<double> levels;  // Richardson extrapolant of the two finest grids
  std::vector<double> drift;   // |R(n0,n1) - R(n1,n2)| per level
  std::vector<int> grid_sizes;
  std::vector<std::vector<double>> raw;  // per grid size
};

inline constexpr double kOracleDriftBound = 1e-7;

/// Brute-force spectrum of a Hermitian operator (default h1 = p^2+4x^4-2x)
/// on position grids [-6, 6] with n in {801, 1201, 1601}. Richardson
/// extrapolation in h^4 over successive pairs; the two extrapolants must
/// agree to 1e-7 per level, else Error{NotConverged}. levels <= 8.
OracleSpectrum oracle_spectrum(int levels);
OracleSpectrum oracle_spectrum(int levels, const OperatorExpr& op,
                               const std::vector<int>& grid_sizes = {801, 1201, 1601},
                               double half_width = 6.0);

/// Spectrum of hermitize(params).h in momentum representation on
/// momentum_grid_for(params, n).
SpectrumResult hermitian_spectrum(const ContourParams& params, int k, int n = 1201);

/// Direct diagonalization of the non-Hermitian H1 in momentum representation.
SpectrumResult h1_spectrum(const ContourParams& params, int k, const Grid& grid);

}  // namespace ptc
