// Copyright (c) The ptcontour Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

#include "ptcontour/crational.hpp"

namespace ptc {

/// Root selection for z = a*sqrt(b + i c x).
enum class Branch { principal, lower, upper };

std::string_view to_string(Branch b);
/// Throws Error{ParseError} for anything but principal/lower/upper.
Branch parse_branch(std::string_view text);

/// Contour z(x) = a*sqrt(b + i c x). Construction rejects a == 0 or c == 0.
class ContourParams {
 public:
  ContourParams(CRational a, CRational b, CRational c, Branch branch = Branch::principal);

  const CRational& a() const { return a_; }
  const CRational& b() const { return b_; }
  const CRational& c() const { return c_; }
  Branch branch() const { return branch_; }

  /// s = a^2 c, the combination every Hermitian quantity depends on.
  CRational a2c() const { return a_ * a_ * c_; }
  CRational b_over_c() const { return b_ / c_; }

  bool real_a2c() const { return a2c().is_real(); }
  bool real_b_over_c() const { return b_over_c().is_real(); }

  /// "a,b,c" using the complex literal grammar, e.g. "-2i,1,1".
  std::string to_string() const;

  friend bool operator==(const ContourParams& l, const ContourParams& r) {
    return l.a_ == r.a_ && l.b_ == r.b_ && l.c_ == r.c_ && l.branch_ == r.branch_;
  }

 private:
  CRational a_;
  CRational b_;
  CRational c_;
  Branch branch_;
};

/// Parses "a,b,c" (each a complex literal). Throws Error{ParseError}.
ContourParams parse_params(std::string_view text, Branch branch = Branch::principal);

}  // namespace ptc
