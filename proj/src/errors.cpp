// Copyright (c) The ptcontour Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "ptcontour/errors.hpp"

namespace ptc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::NotHermitizable: return "NotHermitizable";
    case ErrorCode::NonHermitianRho: return "NonHermitianRho";
    case ErrorCode::NonTerminating: return "NonTerminating";
    case ErrorCode::NotCanonical: return "NotCanonical";
    case ErrorCode::SwapMismatch: return "SwapMismatch";
    case ErrorCode::BranchUndefined: return "BranchUndefined";
    case ErrorCode::OnStokesLine: return "OnStokesLine";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NotConverged: return "NotConverged";
    case ErrorCode::NonIntegrable: return "NonIntegrable";
    case ErrorCode::PushforwardMismatch: return "PushforwardMismatch";
    case ErrorCode::GridMismatch: return "GridMismatch";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::PostconditionFailed: return "PostconditionFailed";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace ptc
