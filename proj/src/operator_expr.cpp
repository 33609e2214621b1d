// Copyright (c) The ptcontour Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "ptcontour/operator_expr.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "ptcontour/errors.hpp"

namespace ptc {

OperatorExpr OperatorExpr::monomial(const CRational& c, unsigned m, unsigned n) {
  OperatorExpr out;
  out.add_term(m, n, c);
  return out;
}

CRational OperatorExpr::coeff(unsigned m, unsigned n) const {
  auto it = terms_.find({m, n});
  return it == terms_.end() ? CRational() : it->second;
}

unsigned OperatorExpr::degree() const {
  unsigned d = 0;
  for (const auto& [key, c] : terms_) d = std::max(d, key.first + key.second);
  return d;
}

unsigned OperatorExpr::x_degree() const {
  unsigned d = 0;
  for (const auto& [key, c] : terms_) d = std::max(d, key.first);
  return d;
}

void OperatorExpr::add_term(unsigned m, unsigned n, const CRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({m, n}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OperatorExpr OperatorExpr::operator-() const {
  OperatorExpr out = *this;
  for (auto& [key, c] : out.terms_) c = -c;
  return out;
}

OperatorExpr& OperatorExpr::operator+=(const OperatorExpr& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
  return *this;
}

OperatorExpr& OperatorExpr::operator-=(const OperatorExpr& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
  return *this;
}

OperatorExpr& OperatorExpr::operator*=(const CRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

namespace {

BigInt binomial(unsigned n, unsigned k) {
  BigInt r = 1;
  for (unsigned j = 1; j <= k; ++j) {
    r *= n - k + j;
    r /= j;
  }
  return r;
}

BigInt falling_factorial(unsigned n, unsigned k) {
  BigInt r = 1;
  for (unsigned j = 0; j < k; ++j) r *= n - j;
  return r;
}

// (-i)^k
CRational minus_i_pow(unsigned k) {
  switch (k % 4) {
    case 0: return 1;
    case 1: return {Rational(0), Rational(-1)};
    case 2: return -1;
    default: return CRational::i();
  }
}

}  // namespace

// p^b x^c = sum_k C(b,k) c!/(c-k)! (-i)^k x^(c-k) p^(b-k), since p acts on x
// powers as -i d/dx.
OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b) {
  OperatorExpr out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      const auto [m1, n1] = ka;
      const auto [m2, n2] = kb;
      const CRational prod = ca * cb;
      const unsigned kmax = std::min(n1, m2);
      for (unsigned k = 0; k <= kmax; ++k) {
        const Rational comb(binomial(n1, k) * falling_factorial(m2, k));
        out.add_term(m1 + m2 - k, n1 + n2 - k, prod * CRational(comb) * minus_i_pow(k));
      }
    }
  }
  return out;
}

std::string OperatorExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first reads most naturally.
  std::vector<std::pair<Key, CRational>> items(terms_.begin(), terms_.end());
  std::stable_sort(items.begin(), items.end(), [](const auto& l, const auto& r) {
    return l.first.first + l.first.second > r.first.first + r.first.second;
  });
  for (const auto& [key, c] : items) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (key.first > 0) os << "x" << (key.first > 1 ? "^" + std::to_string(key.first) : "");
    if (key.second > 0) os << "p" << (key.second > 1 ? "^" + std::to_string(key.second) : "");
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const OperatorExpr& a) { return os << a.to_string(); }

OperatorExpr multiply(const OperatorExpr& a, const OperatorExpr& b) { return a * b; }

OperatorExpr pow(const OperatorExpr& a, unsigned n) {
  OperatorExpr result = OperatorExpr::scalar(1);
  for (unsigned k = 0; k < n; ++k) result = result * a;
  return result;
}

OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b) { return a * b - b * a; }

OperatorExpr adjoint(const OperatorExpr& a) {
  OperatorExpr out;
  for (const auto& [key, c] : a.terms()) {
    out += OperatorExpr::monomial(c.conj(), 0, key.second) * OperatorExpr::monomial(1, key.first, 0);
  }
  return out;
}

bool is_hermitian(const OperatorExpr& a) { return adjoint(a) == a; }

BchExpansion bch_expand(const OperatorExpr& s, const OperatorExpr& a, int max_depth) {
  BchExpansion out{a, 0};
  OperatorExpr term = a;
  for (int n = 1;; ++n) {
    term = commutator(s, term);
    if (term.is_zero()) return out;
    if (n > max_depth) {
      throw Error(ErrorCode::NonTerminating,
                  "BCH series still nonzero at nesting depth " + std::to_string(max_depth));
    }
    term *= CRational(Rational(1, n));
    out.value += term;
    out.depth = n;
  }
}

OperatorExpr bch_conjugate(const OperatorExpr& s, const OperatorExpr& a, int max_depth) {
  return bch_expand(s, a, max_depth).value;
}

OperatorExpr substitute_linear(const OperatorExpr& a, const OperatorExpr& x_image,
                               const OperatorExpr& p_image) {
  if (commutator(x_image, p_image) != OperatorExpr::scalar(CRational::i())) {
    throw Error(ErrorCode::NotCanonical, "substitution images do not satisfy [x', p'] = i");
  }
  std::vector<OperatorExpr> x_pow{OperatorExpr::scalar(1)};
  std::vector<OperatorExpr> p_pow{OperatorExpr::scalar(1)};
  OperatorExpr out;
  for (const auto& [key, c] : a.terms()) {
    while (x_pow.size() <= key.first) x_pow.push_back(x_pow.back() * x_image);
    while (p_pow.size() <= key.second) p_pow.push_back(p_pow.back() * p_image);
    out += (x_pow[key.first] * p_pow[key.second]) * c;
  }
  return out;
}

}  // namespace ptc
