// Copyright (c) The ptcontour Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <ostream>
#include <string>
#include <utility>

#include "ptcontour/crational.hpp"

namespace ptc {

/// Polynomial in the Weyl algebra [x, p] = i, stored in normal order: every
/// monomial is x^m p^n with all x factors to the left. Zero coefficients are
/// never stored, so two equal operators have identical term maps.
class OperatorExpr {
 public:
  using Key = std::pair<unsigned, unsigned>;  // (m, n) for x^m p^n
  using TermMap = std::map<Key, CRational>;

  OperatorExpr() = default;

  static OperatorExpr scalar(const CRational& c) { return monomial(c, 0, 0); }
  static OperatorExpr monomial(const CRational& c, unsigned m, unsigned n);
  static OperatorExpr x() { return monomial(1, 1, 0); }
  static OperatorExpr p() { return monomial(1, 0, 1); }

  const TermMap& terms() const { return terms_; }
  CRational coeff(unsigned m, unsigned n) const;
  bool is_zero() const { return terms_.empty(); }
  /// Highest total degree m + n; 0 for scalars and for the zero operator.
  unsigned degree() const;
  unsigned x_degree() const;

  /// Adds c * x^m p^n, dropping the entry if it cancels.
  void add_term(unsigned m, unsigned n, const CRational& c);

  OperatorExpr operator-() const;
  OperatorExpr& operator+=(const OperatorExpr& o);
  OperatorExpr& operator-=(const OperatorExpr& o);
  OperatorExpr& operator*=(const CRational& c);

  friend OperatorExpr operator+(OperatorExpr a, const OperatorExpr& b) { return a += b; }
  friend OperatorExpr operator-(OperatorExpr a, const OperatorExpr& b) { return a -= b; }
  friend OperatorExpr operator*(OperatorExpr a, const CRational& c) { return a *= c; }
  friend OperatorExpr operator*(const CRational& c, OperatorExpr a) { return a *= c; }
  /// Noncommutative product, normal ordered.
  friend OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b);
  friend bool operator==(const OperatorExpr& a, const OperatorExpr& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const OperatorExpr& a, const OperatorExpr& b) { return !(a == b); }

  /// e.g. "(1/64)p^4 + (-1/2)p + (16)x^2"; "0" for the zero operator.
  std::string to_string() const;

 private:
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const OperatorExpr& a);

OperatorExpr multiply(const OperatorExpr& a, const OperatorExpr& b);
OperatorExpr pow(const OperatorExpr& a, unsigned n);
/// [a, b] = ab - ba.
OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b);
/// Formal adjoint: (c x^m p^n)^dagger = conj(c) p^n x^m, renormal-ordered.
OperatorExpr adjoint(const OperatorExpr& a);
bool is_hermitian(const OperatorExpr& a);

struct BchExpansion {
  OperatorExpr value;
  /// Largest n with ad_S^n(A) != 0 (0 when S and A commute).
  int depth = 0;
};

inline constexpr int kDefaultBchDepth = 16;

/// exp(S) A exp(-S) = sum_n ad_S^n(A) / n!, summed until the nested
/// commutator vanishes. Throws Error{NonTerminating} when ad_S^n(A) is
/// nonzero for some n > max_depth.
BchExpansion bch_expand(const OperatorExpr& s, const OperatorExpr& a, int max_depth = kDefaultBchDepth);
OperatorExpr bch_conjugate(const OperatorExpr& s, const OperatorExpr& a, int max_depth = kDefaultBchDepth);

/// Algebra homomorphism x -> x_image, p -> p_image. The images must satisfy
/// [x_image, p_image] = i exactly, otherwise Error{NotCanonical}.
OperatorExpr substitute_linear(const OperatorExpr& a, const OperatorExpr& x_image,
                               const OperatorExpr& p_image);

}  // namespace ptc
