// Copyright (c) The ptcontour Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "ptcontour/hamiltonians.hpp"

#include "ptcontour/errors.hpp"

namespace ptc {

namespace {

using Op = OperatorExpr;

Op x_pow(unsigned m, const CRational& c = 1) { return Op::monomial(c, m, 0); }
Op p_pow(unsigned n, const CRational& c = 1) { return Op::monomial(c, 0, n); }

void require_hermitizable(const ContourParams& params) {
  if (!params.real_a2c()) {
    throw Error(ErrorCode::NotHermitizable,
                "a^2 c = " + params.a2c().to_string() + " is not real for " + params.to_string());
  }
  if (!params.real_b_over_c()) {
    throw Error(ErrorCode::NonHermitianRho,
                "b/c = " + params.b_over_c().to_string() + " is not real for " + params.to_string());
  }
}

}  // namespace

Op seed_hamiltonian() { return p_pow(2) - x_pow(4); }

Op anchor_hamiltonian() { return p_pow(2) + x_pow(4, 4) + x_pow(1, -2); }

Op anchor_parity_image() { return p_pow(2) + x_pow(4, 4) + x_pow(1, 2); }

Op hermite_hamiltonian() { return p_pow(2) + Op::monomial(CRational(0, 2), 1, 1); }

Op hermite_generator() { return x_pow(2, CRational::frac(-1, 2)); }

Op build_H1(const ContourParams& params) {
  const CRational& a = params.a();
  const CRational& b = params.b();
  const CRational& c = params.c();
  const CRational a2 = a * a;
  // y = b + icx
  const Op y = Op::scalar(b) + x_pow(1, CRational::i() * c);
  Op h = (y * p_pow(2)) * (CRational(-4) / (a2 * c * c));
  h += p_pow(1, CRational(-2) / (a2 * c));
  h += (y * y) * -(a2 * a2);
  return h;
}

Op Hermitized::generator() const { return p_pow(3, f) + p_pow(1, g); }

Op hermitian_closed_form(const ContourParams& params) {
  const CRational s = params.a2c();
  const CRational a2 = params.a() * params.a();
  return p_pow(4, CRational(4) / s.pow(4)) + p_pow(1, CRational(2) / s) +
         x_pow(2, a2 * a2 * params.c() * params.c());
}

Hermitized hermitize(const ContourParams& params) {
  require_hermitizable(params);
  const CRational s = params.a2c();
  Hermitized out;
  out.f = CRational(-2) / (CRational(3) * s.pow(3));
  out.g = -params.b_over_c();
  out.h = bch_conjugate(out.generator(), build_H1(params));
  if (out.h != hermitian_closed_form(params)) {
    throw Error(ErrorCode::PostconditionFailed,
                "conjugated H1 differs from the closed form: " + out.h.to_string());
  }
  if (!is_hermitian(out.h)) {
    throw Error(ErrorCode::PostconditionFailed, "conjugated H1 is not Hermitian");
  }
  return out;
}

SwapResult canonical_swap(const Op& h, const ContourParams& params) {
  require_hermitizable(params);
  const CRational s = params.a2c();
  // Substitution x -> 2p/s, p -> -s x/2 composed with (x, p) -> (2x, p/2).
  const Op x_image = p_pow(1, CRational(1) / s);
  const Op p_image = x_pow(1, -s);
  SwapResult out;
  out.h1 = substitute_linear(h, x_image, p_image);
  if (out.h1 == anchor_hamiltonian()) {
    out.parity = false;
  } else if (out.h1 == anchor_parity_image()) {
    out.parity = true;
  } else {
    throw Error(ErrorCode::SwapMismatch,
                "swap image " + out.h1.to_string() + " is not p^2 + 4x^4 -/+ 2x");
  }
  return out;
}

}  // namespace ptc
