// Copyright (c) The ptcontour Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "ptcontour/contour.hpp"
#include "ptcontour/errors.hpp"

using ptc::Branch;
using ptc::ContourParams;
using ptc::CRational;
using ptc::Rational;

namespace {

constexpr double kPi = std::numbers::pi;

ContourParams params(const char* text, Branch branch = Branch::principal) {
  return ptc::parse_params(text, branch);
}

}  // namespace

TEST_CASE("sample examples") {
  CHECK(std::abs(ptc::contour_point(params("-2i,1,1"), 0.0) - std::complex<double>(0, -2)) < 1e-15);
  CHECK(std::abs(ptc::contour_point(params("1,1,1"), 0.0) - std::complex<double>(1, 0)) < 1e-15);
  const auto z = ptc::contour_point(params("1,0,1", Branch::upper), 1.0);
  CHECK(std::abs(z - std::polar(1.0, kPi / 4)) < 1e-15);
  const auto zl = ptc::contour_point(params("1,0,1", Branch::lower), 1.0);
  CHECK(std::abs(zl + std::polar(1.0, kPi / 4)) < 1e-15);
}

TEST_CASE("samples satisfy z^2 = a^2 (b + icx)") {
  const double xs[] = {-7.5, -1.0, 0.0, 0.3, 2.0, 40.0};
  for (const char* text : {"-2i,1,1", "i,1,1", "1,1,1", "1/2+i,3,-2"}) {
    for (Branch br : {Branch::principal, Branch::lower, Branch::upper}) {
      CAPTURE(text);
      const ContourParams pc = params(text, br);
      const auto a = pc.a().to_complex();
      const auto b = pc.b().to_complex();
      const auto c = pc.c().to_complex();
      std::vector<ptc::ContourSample> samples;
      try {
        samples = ptc::sample(pc, xs);
      } catch (const ptc::Error& e) {
        // (1,1,1) at x = 0 has a real root and nothing before it on this list
        // only when x = 0 comes first; here it never does.
        FAIL(e.what());
      }
      for (const auto& s : samples) {
        const auto expected = a * a * (b + std::complex<double>(0, 1) * c * s.x);
        CHECK(std::abs(s.z * s.z - expected) <= 1e-12 * std::max(1.0, std::abs(expected)));
      }
    }
  }
}

TEST_CASE("real root with no history is BranchUndefined; continuity resolves later ones") {
  const double first[] = {0.0};
  try {
    (void)ptc::sample(params("1,1,1", Branch::upper), first);
    FAIL("expected BranchUndefined");
  } catch (const ptc::Error& e) {
    CHECK(e.code() == ptc::ErrorCode::BranchUndefined);
  }
  const double walk[] = {-0.01, 0.0, 0.01};
  const auto s = ptc::sample(params("1,1,1", Branch::upper), walk);
  // At x = -0.01 the upper root is -sqrt(1 - 0.01i) ~ -1 + 0.005i.
  CHECK(s[1].z.real() < 0.0);
  CHECK(s[1].z.imag() == 0.0);
}

TEST_CASE("endpoint_angles examples") {
  auto jm = ptc::endpoint_angles(params("-2i,1,1"));
  CHECK(jm.theta_minus == doctest::Approx(-3 * kPi / 4).epsilon(1e-14));
  CHECK(jm.theta_plus == doctest::Approx(-kPi / 4).epsilon(1e-14));
  auto upper = ptc::endpoint_angles(params("i,1,1"));
  CHECK(upper.theta_plus == doctest::Approx(3 * kPi / 4).epsilon(1e-14));
  CHECK(upper.theta_minus == doctest::Approx(kPi / 4).epsilon(1e-14));
  auto adj = ptc::endpoint_angles(params("1,1,1"));
  CHECK(adj.theta_minus == doctest::Approx(-kPi / 4).epsilon(1e-14));
  CHECK(adj.theta_plus == doctest::Approx(kPi / 4).epsilon(1e-14));
}

TEST_CASE("wedge_report examples") {
  const auto jm = ptc::wedge_report(params("-2i,1,1"));
  CHECK_FALSE(jm.adjacent);
  CHECK(jm.pt_symmetric);
  CHECK(jm.decay_family_plus == ptc::DecayFamily::B);
  CHECK(jm.decay_family_minus == ptc::DecayFamily::B);
  CHECK(jm.wedge_plus == -1);
  CHECK(jm.wedge_minus == -3);

  const auto adj = ptc::wedge_report(params("1,1,1"));
  CHECK(adj.adjacent);
  CHECK_FALSE(adj.pt_symmetric);
  CHECK(adj.decay_family_plus != adj.decay_family_minus);

  const auto upper = ptc::wedge_report(params("i,1,1"));
  CHECK_FALSE(upper.adjacent);
  CHECK(upper.pt_symmetric);

  for (Branch br : {Branch::upper, Branch::lower}) {
    const auto root = ptc::wedge_report(params("1,0,1", br));
    CHECK_FALSE(root.adjacent);
    CHECK(root.pt_symmetric);
    CHECK(root.decay_family_plus == root.decay_family_minus);
  }
}

TEST_CASE("endpoint on a Stokes line is rejected") {
  // With Gaussian-rational inputs the only reachable multiples of pi/3 are
  // 0 and pi.
  const ContourParams on_axis(CRational(Rational(0), Rational(1)), 1, CRational(Rational(0), Rational(1)));
  CHECK_THROWS_AS(ptc::wedge_report(on_axis), ptc::Error);  // purely imaginary c
  // arg(a) = -pi/4 puts theta_+ at 0.
  const ContourParams zero_angle(CRational(1, -1), 1, 1);
  try {
    (void)ptc::wedge_report(zero_angle);
    FAIL("expected OnStokesLine");
  } catch (const ptc::Error& e) {
    CHECK(e.code() == ptc::ErrorCode::OnStokesLine);
  }
}

TEST_CASE("PT symmetry predicate for real b, c with real or imaginary a") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> small(1, 5);
  std::uniform_int_distribution<int> sign(0, 1);
  for (int t = 0; t < 20; ++t) {
    const int s = sign(rng) ? 1 : -1;
    const CRational a = sign(rng) ? CRational(s * small(rng)) : CRational(Rational(0), Rational(s * small(rng)));
    const ContourParams pc(a, small(rng), CRational(s * small(rng)));
    CAPTURE(pc.to_string());
    // Imaginary a with real b, c is PT symmetric; real a is not.
    CHECK(ptc::is_pt_symmetric(pc) == !a.is_real());
  }
}

TEST_CASE("adjacency is symmetric and invariant under x -> -x") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> small(-5, 5);
  int tested = 0;
  while (tested < 20) {
    const CRational a(Rational(small(rng)), Rational(small(rng)));
    const int c = small(rng);
    const int b = small(rng);
    if (a.is_zero() || c == 0) continue;
    const ContourParams pc(a, b, c);
    const ContourParams flipped(a, b, -c);
    ptc::WedgeReport r1, r2;
    try {
      r1 = ptc::wedge_report(pc);
      r2 = ptc::wedge_report(flipped);
    } catch (const ptc::Error&) {
      continue;  // endpoint on a Stokes line
    }
    CHECK(r1.wedge_plus == r2.wedge_minus);
    CHECK(r1.wedge_minus == r2.wedge_plus);
    CHECK(r1.adjacent == r2.adjacent);
    CHECK(ptc::wedges_adjacent(r1.wedge_plus, r1.wedge_minus) ==
          ptc::wedges_adjacent(r1.wedge_minus, r1.wedge_plus));
    ++tested;
  }
}

TEST_CASE("closed-form angles agree with far-field arg for random parameters") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> small(-6, 6);
  int tested = 0;
  while (tested < 20) {
    const CRational a(Rational(small(rng)), Rational(small(rng)));
    const CRational c(Rational(small(rng)), Rational(small(rng), 3));
    if (a.is_zero() || c.is_zero() || c.re() == 0) continue;
    const ContourParams pc(a, CRational(Rational(small(rng)), Rational(small(rng))), c);
    const auto angles = ptc::endpoint_angles(pc);  // throws on > 1e-6 disagreement
    CHECK(angles.theta_plus > -kPi);
    CHECK(angles.theta_plus <= kPi);
    ++tested;
  }
}
