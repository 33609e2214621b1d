// Copyright (c) The ptcontour Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "ptcontour/crational.hpp"
#include "ptcontour/operator_expr.hpp"
#include "ptcontour/params.hpp"

namespace ptc {

/// H = p^2 - x^4, the wrong-sign quartic before any contour is chosen.
OperatorExpr seed_hamiltonian();
/// h1 = p^2 + 4x^4 - 2x, the Hermitian anchor.
OperatorExpr anchor_hamiltonian();
/// p^2 + 4x^4 + 2x, the parity image of the anchor.
OperatorExpr anchor_parity_image();

/// H = p^2 + 2ixp whose eigenfunctions are the Hermite polynomials.
OperatorExpr hermite_hamiltonian();
/// Generator -x^2/2 of rho = exp(-x^2/2) for the Hermite model.
OperatorExpr hermite_generator();

/// H1 = -(4/(a^2 c^2)) (b + icx) p^2 - (2/(a^2 c)) p - a^4 (b + icx)^2,
/// the quartic after the substitution x -> a sqrt(b + icx).
OperatorExpr build_H1(const ContourParams& params);

struct Hermitized {
  OperatorExpr h;
  CRational f;  // coefficient of p^3 in the generator
  CRational g;  // coefficient of p
  /// S = f p^3 + g p, so rho = exp(S) and h = rho H1 rho^-1.
  OperatorExpr generator() const;
};

/// Conjugates H1 by rho = exp(f p^3 + g p) with f = -2/(3 a^6 c^3) and
/// g = -b/c. The result is (4/(a^8 c^4)) p^4 + (2/(a^2 c)) p + a^4 c^2 x^2,
/// checked term by term.
///
/// Throws Error{NotHermitizable} if a^2 c is not real and
/// Error{NonHermitianRho} if b/c is not real.
Hermitized hermitize(const ContourParams& params);

/// Expected closed form of the Hermitian Hamiltonian for given parameters.
OperatorExpr hermitian_closed_form(const ContourParams& params);

struct SwapResult {
  OperatorExpr h1;
  /// Set when the result is the parity image p^2 + 4x^4 + 2x.
  bool parity = false;
};

/// Maps h to the anchor form by x -> 2p/(a^2 c), p -> -(a^2 c) x / 2 followed
/// by the dilation (x, p) -> (2x, p/2). Throws Error{SwapMismatch} when the
/// image is neither the anchor nor its parity image.
SwapResult canonical_swap(const OperatorExpr& h, const ContourParams& params);

}  // namespace ptc
