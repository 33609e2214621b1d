// Copyright (c) The ptcontour Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ptc {

enum class ErrorCode {
  InvalidParams,
  NotHermitizable,
  NonHermitianRho,
  NonTerminating,
  NotCanonical,
  SwapMismatch,
  BranchUndefined,
  OnStokesLine,
  GridTooCoarse,
  NotHermitian,
  NoConvergence,
  NotConverged,
  NonIntegrable,
  PushforwardMismatch,
  GridMismatch,
  OutOfDomain,
  ParseError,
  PostconditionFailed,
  IoError,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; callers switch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ptc
