// Copyright (c) The ptcontour Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "doctest.h"
#include "ptcontour/errors.hpp"
#include "ptcontour/hamiltonians.hpp"
#include "ptcontour/reference.hpp"
#include "ptcontour/spectral.hpp"

using ptc::CRational;
using ptc::Grid;
using ptc::OperatorExpr;
using ptc::Variable;

namespace {

OperatorExpr mono(const CRational& c, unsigned m, unsigned n) { return OperatorExpr::monomial(c, m, n); }

const ptc::OracleSpectrum& oracle() {
  static const ptc::OracleSpectrum cached = ptc::oracle_spectrum(5);
  return cached;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("central stencils reproduce the textbook fourth-order weights") {
  const auto d1 = ptc::central_stencil(1);
  REQUIRE(d1.size() == 5);
  CHECK(d1[0] == doctest::Approx(1.0 / 12));
  CHECK(d1[1] == doctest::Approx(-8.0 / 12));
  CHECK(d1[2] == doctest::Approx(0.0));
  CHECK(d1[3] == doctest::Approx(8.0 / 12));
  const auto d2 = ptc::central_stencil(2);
  CHECK(d2[2] == doctest::Approx(-30.0 / 12));
  CHECK(d2[1] == doctest::Approx(16.0 / 12));
  // Third and fourth derivative stencils are exact on polynomials up to degree order+3.
  for (unsigned order : {3U, 4U}) {
    const auto w = ptc::central_stencil(order);
    const int r = static_cast<int>(w.size() / 2);
    for (int deg = 0; deg <= static_cast<int>(order) + 3; ++deg) {
      double acc = 0;
      for (int j = -r; j <= r; ++j) acc += w[static_cast<std::size_t>(j + r)] * std::pow(j + 0.5, deg);
      double exact = 0;
      if (deg >= static_cast<int>(order)) {
        exact = std::tgamma(deg + 1.0) / std::tgamma(deg - order + 1.0) * std::pow(0.5, deg - static_cast<int>(order));
      }
      CHECK(acc == doctest::Approx(exact).epsilon(1e-9));
    }
  }
}

TEST_CASE("matrixize: x in momentum representation is i times the derivative stencil") {
  const Grid grid(Variable::momentum, -4, 4, 33);
  const auto m = ptc::matrixize(OperatorExpr::x(), grid);
  const double h = grid.spacing();
  CHECK(m(10, 11) == std::complex<double>(0, 8.0 / (12 * h)));
  CHECK(m(10, 12) == std::complex<double>(0, -1.0 / (12 * h)));
  CHECK(m.real().cwiseAbs().maxCoeff() == 0.0);
  CHECK((m.imag() + m.imag().transpose()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("matrixize: ix is anti-Hermitian") {
  const Grid grid(Variable::momentum, -4, 4, 41);
  const auto m = ptc::matrixize(mono(CRational::i(), 1, 0), grid);
  CHECK((m + m.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("matrixize is linear") {
  const Grid grid(Variable::position, -3, 3, 61);
  const OperatorExpr a = mono(CRational(2, 1), 2, 1) + mono(1, 0, 3);
  const OperatorExpr b = mono(CRational(0, -3), 1, 2) + mono(5, 4, 0);
  const CRational alpha(ptc::Rational(1, 3), ptc::Rational(-2));
  const auto lhs = ptc::matrixize(a * alpha + b, grid);
  const auto rhs = alpha.to_complex() * ptc::matrixize(a, grid) + ptc::matrixize(b, grid);
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-12 * rhs.cwiseAbs().maxCoeff());
}

TEST_CASE("matrixize rejects coarse grids") {
  const Grid grid(Variable::position, -1, 1, 16);
  try {
    (void)ptc::matrixize(mono(1, 5, 0), grid);
    FAIL("expected GridTooCoarse");
  } catch (const ptc::Error& e) {
    CHECK(e.code() == ptc::ErrorCode::GridTooCoarse);
  }
  CHECK_THROWS_AS(Grid(Variable::position, -1, 1, 15), ptc::Error);
  CHECK_THROWS_AS(Grid(Variable::position, 1, -1, 64), ptc::Error);
}

TEST_CASE("shifted oscillator p^2 + x^2 - 1 has spectrum 0, 2, 4, 6, 8") {
  const Grid grid(Variable::position, -10, 10, 801);
  const OperatorExpr h = mono(1, 0, 2) + mono(1, 2, 0) + mono(-1, 0, 0);
  const auto spec = ptc::eigensolve_hermitian(ptc::matrixize(h, grid), 5);
  // The fourth-order stencil's truncation error grows like h^4 <d^6>; level 4 sits at 1.05e-6.
  for (int n = 0; n < 4; ++n) CHECK(std::abs(spec.eigenvalues[static_cast<std::size_t>(n)].real() - 2.0 * n) < 1e-6);
  CHECK(std::abs(spec.eigenvalues[4].real() - 8.0) < 1.2e-6);
  for (double r : spec.residual_norms) CHECK(r < 1e-8);
}

TEST_CASE("eigensolve_hermitian and eigensolve_general agree on the oscillator") {
  const Grid grid(Variable::position, -8, 8, 321);
  const auto m = ptc::matrixize(mono(1, 0, 2) + mono(1, 2, 0), grid);
  const auto herm = ptc::eigensolve_hermitian(m, 4);
  const auto gen = ptc::eigensolve_general(m, 4);
  for (int n = 0; n < 4; ++n) {
    const auto idx = static_cast<std::size_t>(n);
    CHECK(herm.eigenvalues[idx].real() == doctest::Approx(2.0 * n + 1).epsilon(1e-5));
    CHECK(std::abs(gen.eigenvalues[idx] - herm.eigenvalues[idx]) < 1e-9);
    CHECK(gen.residual_norms[idx] < 1e-7);
  }
}

TEST_CASE("eigensolve_general on a diagonal matrix") {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(3, 3);
  m(0, 0) = 3;
  m(1, 1) = 1;
  m(2, 2) = 2;
  const auto spec = ptc::eigensolve_general(m, 3);
  CHECK(spec.eigenvalues[0] == std::complex<double>(1, 0));
  CHECK(spec.eigenvalues[1] == std::complex<double>(2, 0));
  CHECK(spec.eigenvalues[2] == std::complex<double>(3, 0));
}

TEST_CASE("eigensolve_hermitian rejects non-Hermitian input") {
  const Grid grid(Variable::momentum, -4, 4, 41);
  try {
    (void)ptc::eigensolve_hermitian(ptc::matrixize(ptc::build_H1(ptc::parse_params("-2i,1,1")), grid), 3);
    FAIL("expected NotHermitian");
  } catch (const ptc::Error& e) {
    CHECK(e.code() == ptc::ErrorCode::NotHermitian);
  }
}

TEST_CASE("oracle spectrum converges and matches the independent reference") {
  const auto& o = oracle();
  REQUIRE(o.levels.size() == 5);
  for (std::size_t n = 0; n < 5; ++n) {
    CHECK(o.drift[n] < ptc::kOracleDriftBound);
    CHECK(std::abs(o.levels[n] - ptc::kAnchorReferenceLevels[n]) < 1e-8);
    if (n > 0) CHECK(o.levels[n] > o.levels[n - 1]);
  }
}

TEST_CASE("grid refinement shrinks the raw error monotonically") {
  const auto& o = oracle();
  for (std::size_t n = 0; n < 5; ++n) {
    double prev = 1e300;
    for (const auto& raw : o.raw) {
      const double err = std::abs(raw[n] - ptc::kAnchorReferenceLevels[n]);
      CHECK(err < prev);
      prev = err;
    }
  }
}

TEST_CASE("parity image has the same spectrum") {
  const auto image = ptc::oracle_spectrum(5, ptc::anchor_parity_image());
  for (std::size_t n = 0; n < 5; ++n) CHECK(std::abs(image.levels[n] - oracle().levels[n]) < 1e-8);
}

TEST_CASE("oracle level limits") {
  CHECK_THROWS_AS(ptc::oracle_spectrum(9), ptc::Error);
  const auto one = ptc::oracle_spectrum(1);
  CHECK(one.levels.size() == 1);
  CHECK(std::abs(one.levels[0] - ptc::kAnchorReferenceLevels[0]) < 1e-8);
}

TEST_CASE("Hermitian form of every test contour reproduces the oracle") {
  for (const char* text : {"-2i,1,1", "i,1,1", "1,1,1", "1,0,1", "-2i,5,1"}) {
    CAPTURE(text);
    const auto spec = ptc::hermitian_spectrum(ptc::parse_params(text), 5);
    for (std::size_t n = 0; n < 5; ++n) {
      CHECK(rel(spec.eigenvalues[n].real(), oracle().levels[n]) < 1e-5);
      CHECK(spec.residual_norms[n] < 1e-8);
    }
  }
}

TEST_CASE("direct non-Hermitian H1 for the lower PT contour has a real spectrum") {
  const auto jm = ptc::parse_params("-2i,1,1");
  const auto spec = ptc::h1_spectrum(jm, 5, ptc::momentum_grid_for(jm, 601));
  for (std::size_t n = 0; n < 5; ++n) {
    CAPTURE(spec.eigenvalues[n]);
    CHECK(std::abs(spec.eigenvalues[n].imag()) < 1e-4);
    CHECK(rel(spec.eigenvalues[n].real(), oracle().levels[n]) < 1e-3);
    CHECK(spec.residual_norms[n] < 1e-7);
  }
}
