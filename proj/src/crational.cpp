// Copyright (c) The ptcontour Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "ptcontour/crational.hpp"

#include <cctype>
#include <sstream>

#include "ptcontour/errors.hpp"

namespace ptc {

CRational& CRational::operator+=(const CRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

CRational& CRational::operator-=(const CRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

CRational& CRational::operator*=(const CRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

CRational& CRational::operator/=(const CRational& o) {
  const Rational d = o.norm();
  if (d == 0) {
    throw Error(ErrorCode::InvalidParams, "division by zero in CRational");
  }
  Rational re = (re_ * o.re_ + im_ * o.im_) / d;
  Rational im = (im_ * o.re_ - re_ * o.im_) / d;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

CRational CRational::pow(unsigned n) const {
  CRational result(1);
  CRational base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

double rational_to_double(const Rational& q) { return q.convert_to<double>(); }

std::complex<double> CRational::to_complex() const {
  return {rational_to_double(re_), rational_to_double(im_)};
}

std::string rational_to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string CRational::re_string() const { return rational_to_string(re_); }
std::string CRational::im_string() const { return rational_to_string(im_); }

std::string CRational::to_string() const {
  if (im_ == 0) return re_string();
  std::string imag;
  const Rational mag = im_ < 0 ? Rational(-im_) : im_;
  imag = mag == 1 ? "i" : rational_to_string(mag) + "i";
  if (re_ == 0) return (im_ < 0 ? "-" : "") + imag;
  return re_string() + (im_ < 0 ? "-" : "+") + imag;
}

std::ostream& operator<<(std::ostream& os, const CRational& z) { return os << z.to_string(); }

namespace {

[[noreturn]] void parse_fail(std::string_view text, std::size_t pos, const std::string& what) {
  std::ostringstream msg;
  msg << "cannot parse '" << text << "' at position " << pos << ": " << what;
  throw Error(ErrorCode::ParseError, msg.str());
}

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Reads an unsigned R (integer, decimal or fraction) starting at pos.
// Returns false without consuming anything when no digit is present.
bool read_magnitude(std::string_view text, std::size_t& pos, Rational& out) {
  const std::size_t start = pos;
  std::size_t p = pos;
  while (p < text.size() && is_digit(text[p])) ++p;
  std::size_t int_end = p;
  if (p < text.size() && text[p] == '.') {
    ++p;
    const std::size_t frac_start = p;
    while (p < text.size() && is_digit(text[p])) ++p;
    if (p == frac_start && int_end == start) parse_fail(text, start, "expected digits");
    BigInt num(std::string(text.substr(start, int_end - start)).empty()
                   ? std::string("0")
                   : std::string(text.substr(start, int_end - start)));
    BigInt scale = 1;
    for (std::size_t k = frac_start; k < p; ++k) {
      num = num * 10 + (text[k] - '0');
      scale *= 10;
    }
    out = Rational(num, scale);
    pos = p;
    return true;
  }
  if (int_end == start) return false;
  BigInt num(std::string(text.substr(start, int_end - start)));
  if (p < text.size() && text[p] == '/') {
    ++p;
    const std::size_t den_start = p;
    while (p < text.size() && is_digit(text[p])) ++p;
    if (p == den_start) parse_fail(text, den_start, "expected denominator digits");
    BigInt den(std::string(text.substr(den_start, p - den_start)));
    if (den == 0) parse_fail(text, den_start, "zero denominator");
    out = Rational(num, den);
  } else {
    out = Rational(num);
  }
  pos = p;
  return true;
}

// One signed term: [+-]R or [+-]R i or [+-]i. Sets is_imag.
Rational read_term(std::string_view text, std::size_t& pos, bool sign_required, bool& is_imag) {
  int sign = 1;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    sign = text[pos] == '-' ? -1 : 1;
    ++pos;
  } else if (sign_required) {
    parse_fail(text, pos, "expected '+' or '-'");
  }
  Rational mag;
  const bool has_mag = read_magnitude(text, pos, mag);
  is_imag = false;
  if (pos < text.size() && text[pos] == 'i') {
    is_imag = true;
    ++pos;
    if (!has_mag) mag = 1;
  } else if (!has_mag) {
    parse_fail(text, pos, "expected a number or 'i'");
  }
  return sign < 0 ? Rational(-mag) : mag;
}

}  // namespace

Rational parse_rational_fraction(std::string_view text) {
  std::size_t pos = 0;
  int sign = 1;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    sign = text[pos] == '-' ? -1 : 1;
    ++pos;
  }
  Rational mag;
  if (!read_magnitude(text, pos, mag)) parse_fail(text, pos, "expected a number");
  if (pos != text.size()) parse_fail(text, pos, "trailing characters");
  return sign < 0 ? Rational(-mag) : mag;
}

CRational parse_complex(std::string_view text) {
  if (text.empty()) parse_fail(text, 0, "empty literal");
  std::size_t pos = 0;
  bool is_imag = false;
  Rational first = read_term(text, pos, false, is_imag);
  if (pos == text.size()) {
    return is_imag ? CRational(Rational(0), first) : CRational(first);
  }
  if (is_imag) parse_fail(text, pos, "imaginary part must come last");
  Rational second = read_term(text, pos, true, is_imag);
  if (!is_imag) parse_fail(text, pos, "second term must be imaginary");
  if (pos != text.size()) parse_fail(text, pos, "trailing characters");
  return {first, second};
}

}  // namespace ptc
