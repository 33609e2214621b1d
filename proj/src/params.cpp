// Copyright (c) The ptcontour Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "ptcontour/params.hpp"

#include "ptcontour/errors.hpp"

namespace ptc {

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::principal: return "principal";
    case Branch::lower: return "lower";
    case Branch::upper: return "upper";
  }
  return "principal";
}

Branch parse_branch(std::string_view text) {
  if (text == "principal") return Branch::principal;
  if (text == "lower") return Branch::lower;
  if (text == "upper") return Branch::upper;
  throw Error(ErrorCode::ParseError, "unknown branch '" + std::string(text) + "'");
}

ContourParams::ContourParams(CRational a, CRational b, CRational c, Branch branch)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), branch_(branch) {
  if (a_.is_zero()) throw Error(ErrorCode::InvalidParams, "contour parameter a must be nonzero");
  if (c_.is_zero()) throw Error(ErrorCode::InvalidParams, "contour parameter c must be nonzero");
}

std::string ContourParams::to_string() const {
  return a_.to_string() + "," + b_.to_string() + "," + c_.to_string();
}

ContourParams parse_params(std::string_view text, Branch branch) {
  const auto first = text.find(',');
  const auto second = first == std::string_view::npos ? first : text.find(',', first + 1);
  if (second == std::string_view::npos || text.find(',', second + 1) != std::string_view::npos) {
    throw Error(ErrorCode::ParseError,
                "expected three comma-separated values a,b,c, got '" + std::string(text) + "'");
  }
  return {parse_complex(text.substr(0, first)),
          parse_complex(text.substr(first + 1, second - first - 1)),
          parse_complex(text.substr(second + 1)), branch};
}

}  // namespace ptc
