// Copyright (c) The ptcontour Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>

namespace ptc {

/// Lowest eight eigenvalues of h1 = p^2 + 4x^4 - 2x, frozen from a sinc-DVR
/// (Colbert-Miller) diagonalization on [-6, 6] with 1201 points. That
/// discretization converges spectrally (601, 801 and 1001 points agree to
/// all printed digits) and shares no code with the finite-difference path.
inline constexpr std::array<double, 8> kAnchorReferenceLevels = {
    1.477149753581692,  6.00338608329872,   11.80243359514598,  18.4588187040819,
    25.791792378521066, 33.694279876596,    42.093807710822674, 50.937404324542186,
};

}  // namespace ptc
