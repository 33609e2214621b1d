// Copyright (c) The ptcontour Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ptc {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Exact complex number with rational real and imaginary parts (a Gaussian
/// rational). Parts are kept in lowest terms with positive denominators, so
/// equality is structural.
class CRational {
 public:
  CRational() = default;
  CRational(std::int64_t re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  CRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  CRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static CRational i() { return {Rational(0), Rational(1)}; }
  static CRational frac(std::int64_t num, std::int64_t den) { return Rational(num, den); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  CRational conj() const { return {re_, -im_}; }
  /// |z|^2, exact.
  Rational norm() const { return re_ * re_ + im_ * im_; }

  CRational operator-() const { return {-re_, -im_}; }
  CRational& operator+=(const CRational& o);
  CRational& operator-=(const CRational& o);
  CRational& operator*=(const CRational& o);
  /// Throws Error{InvalidParams} on division by zero.
  CRational& operator/=(const CRational& o);

  friend CRational operator+(CRational a, const CRational& b) { return a += b; }
  friend CRational operator-(CRational a, const CRational& b) { return a -= b; }
  friend CRational operator*(CRational a, const CRational& b) { return a *= b; }
  friend CRational operator/(CRational a, const CRational& b) { return a /= b; }
  friend bool operator==(const CRational& a, const CRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const CRational& a, const CRational& b) { return !(a == b); }

  CRational pow(unsigned n) const;
  std::complex<double> to_complex() const;

  /// "num/den" (or "num" when den == 1) for the real and imaginary part.
  std::string re_string() const;
  std::string im_string() const;
  /// Human readable, e.g. "-2i", "1/3+2/5i", "0".
  std::string to_string() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const CRational& z);

std::string rational_to_string(const Rational& q);
double rational_to_double(const Rational& q);
/// Parses "num/den" or "num"; throws Error{ParseError}.
Rational parse_rational_fraction(std::string_view text);

/// Parses the complex literal grammar [+-]R[(+-)R i] where R is an integer, a
/// decimal, or a fraction num/den. A bare "i" means 1i. Decimals are
/// converted to exact fractions. Throws Error{ParseError} naming the offset.
CRational parse_complex(std::string_view text);

}  // namespace ptc
