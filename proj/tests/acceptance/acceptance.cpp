// Copyright (c) The ptcontour Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every tolerance used below is a named constant.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ptcontour/contour.hpp"
#include "ptcontour/errors.hpp"
#include "ptcontour/hamiltonians.hpp"
#include "ptcontour/isomap.hpp"
#include "ptcontour/metric.hpp"
#include "ptcontour/reference.hpp"
#include "ptcontour/spectral.hpp"
#include "ptcontour/wkb.hpp"

namespace {

using ptc::CRational;
using ptc::Rational;

constexpr double kOracleDrift = 1e-7;          // criterion 3, successive-grid drift
constexpr double kFixtureAgreement = 1e-8;     // criterion 3, oracle vs frozen fixture
constexpr double kSpectrumRelative = 1e-5;     // criterion 3, contour spectra vs oracle
constexpr double kAmplitudeDeviation = 1e-6;   // criterion 4
constexpr double kBlowUpWitness = 1e10;        // criterion 5
constexpr double kFiniteAmplitudeSlack = 1e-8; // criterion 5
constexpr double kIntegrabilityChange = 1e-6;  // criterion 6
constexpr double kHermiteRelative = 1e-8;      // criterion 8

const char* const kTestMatrix[] = {"-2i,1,1", "i,1,1", "1,1,1", "1,0,1", "-2i,5,1"};

CRational q(long num, long den = 1) { return CRational(Rational(num, den)); }

struct Verdict {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail << " [failed: " << what << "]";
    }
  }
};

bool report(int id, const char* title, const std::function<void(Verdict&)>& body) {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(v);
  } catch (const ptc::Error& e) {
    v.passed = false;
    v.detail << " [error " << ptc::to_string(e.code()) << ": " << e.what() << "]";
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s criterion %d: %s |%s (%.1fs)\n", v.passed ? "PASS" : "FAIL", id, title, v.detail.str().c_str(),
              seconds);
  std::fflush(stdout);
  return v.passed;
}

void exact_algebra(Verdict& v) {
  const ptc::OperatorExpr chain = ptc::bch_conjugate(ptc::hermite_generator(), ptc::hermite_hamiltonian());
  const ptc::OperatorExpr shifted_oscillator = ptc::OperatorExpr::monomial(1, 0, 2) +
                                               ptc::OperatorExpr::monomial(1, 2, 0) +
                                               ptc::OperatorExpr::monomial(-1, 0, 0);
  v.require(chain == shifted_oscillator, "hermite chain gave " + chain.to_string());

  const std::pair<CRational, CRational> expected_metrics[] = {
      {q(1, 48), q(-2)}, {q(4, 3), q(-2)}, {q(-4, 3), q(-2)}, {q(-4, 3), q(0)}, {q(1, 48), q(-10)}};
  for (std::size_t k = 0; k < std::size(kTestMatrix); ++k) {
    const auto params = ptc::parse_params(kTestMatrix[k]);
    const auto herm = ptc::hermitize(params);
    const CRational a = params.a();
    const CRational c = params.c();
    const bool coefficients = herm.h.coeff(0, 4) == CRational(4) / (a.pow(8) * c.pow(4)) &&
                              herm.h.coeff(0, 1) == CRational(2) / (a.pow(2) * c) &&
                              herm.h.coeff(2, 0) == a.pow(4) * c.pow(2) && herm.h.terms().size() == 3;
    v.require(coefficients, std::string("hermitian form of ") + kTestMatrix[k]);
    const auto metric = ptc::metric_of(params);
    v.require(metric.kappa3 == expected_metrics[k].first && metric.kappa1 == expected_metrics[k].second,
              std::string("metric of ") + kTestMatrix[k]);
    v.detail << " (" << kTestMatrix[k] << "): kappa=(" << metric.kappa3 << ", " << metric.kappa1 << ")";
  }
}

void pushforward(Verdict& v) {
  int pairs = 0;
  for (const char* src : kTestMatrix) {
    for (const char* dst : kTestMatrix) {
      if (src == dst) continue;
      const auto m = ptc::map_params(ptc::parse_params(src), ptc::parse_params(dst));
      const auto eta1 = ptc::metric_of(m.source);
      const auto eta2 = ptc::metric_of(m.target);
      const bool ok = eta1.kappa3 / m.beta.pow(3) == eta2.kappa3 &&
                      eta1.kappa1 / m.beta - CRational(2) * m.gamma == eta2.kappa1;
      v.require(ok, std::string(src) + " -> " + dst);
      ++pairs;
    }
  }
  v.require(pairs == 20, "pair count");
  v.detail << " " << pairs << " ordered pairs exact";
}

void oracle(Verdict& v) {
  const auto o = ptc::oracle_spectrum(5);
  double drift = 0;
  double fixture = 0;
  for (std::size_t k = 0; k < 5; ++k) {
    drift = std::max(drift, o.drift[k]);
    fixture = std::max(fixture, std::abs(o.levels[k] - ptc::kAnchorReferenceLevels[k]));
  }
  v.require(drift < kOracleDrift, "oracle drift");
  v.require(fixture < kFixtureAgreement, "oracle vs frozen fixture");
  v.detail << " drift=" << drift << " fixture_gap=" << fixture;
  double worst = 0;
  for (const char* text : kTestMatrix) {
    const auto spec = ptc::hermitian_spectrum(ptc::parse_params(text), 5);
    for (std::size_t k = 0; k < 5; ++k) {
      worst = std::max(worst, std::abs(spec.eigenvalues[k].real() - o.levels[k]) / o.levels[k]);
    }
  }
  v.require(worst < kSpectrumRelative, "contour spectra vs oracle");
  v.detail << " max_rel_dev=" << worst << " E0..E4=";
  for (double e : o.levels) v.detail << ' ' << e;
}

void isometry(Verdict& v) {
  for (const char* src : {"i,1,1", "1,1,1", "1,0,1"}) {
    const auto r = ptc::verify_isometry(ptc::parse_params(src), ptc::parse_params("-2i,1,1"), 3);
    v.require(r.max_deviation < kAmplitudeDeviation, std::string(src) + " deviation");
    v.require(r.source_identity_deviation < kAmplitudeDeviation, std::string(src) + " source identity");
    v.require(r.target_identity_deviation < kAmplitudeDeviation, std::string(src) + " target identity");
    v.detail << " (" << src << "): dev=" << r.max_deviation << " id=" << std::max(r.source_identity_deviation,
                                                                                  r.target_identity_deviation);
  }
}

void blow_up(Verdict& v) {
  const auto params = ptc::parse_params("1,1,1");
  const ptc::Grid grid(ptc::Variable::momentum, -40, 40, 1601);
  const auto basis = ptc::eigenbasis(params, 3, grid);
  const int top = grid.n - 1;
  const auto& psi0 = basis[0];
  const double materialized =
      std::abs(psi0.factor[static_cast<std::size_t>(top)]) *
      std::exp(psi0.log_scale[static_cast<std::size_t>(top)] + ptc::evaluate(psi0.exponent, grid.hi));
  v.require(std::isfinite(materialized) && materialized > kBlowUpWitness, "blow-up witness");
  double largest = 0;
  for (const auto& row : ptc::amplitude_matrix(basis, ptc::metric_of(params))) {
    for (const auto& value : row) largest = std::max(largest, std::abs(value));
  }
  v.require(largest <= 1 + kFiniteAmplitudeSlack, "amplitudes bounded");
  v.detail << " |psi0(p=40)|=" << materialized << " max|<psi_i|eta|psi_j>|=" << largest;
}

void wkb(Verdict& v) {
  for (ptc::WkbTag tag : {ptc::WkbTag::upper_pt, ptc::WkbTag::adjacent, ptc::WkbTag::sqrt_ix}) {
    const auto r = ptc::check_asymptotics(tag);
    const std::string name(ptc::to_string(tag));
    for (const auto& tail : r.tails) {
      const bool growth_expected = tag == ptc::WkbTag::adjacent && tail.direction == 1;
      v.require(tail.expect_growth == growth_expected && tail.monotone,
                name + (tail.direction > 0 ? " +inf tail" : " -inf tail"));
    }
    v.require(r.weighted_decays_both_ends, name + " weighted decay");
    v.require(r.integrability_change < kIntegrabilityChange, name + " integrability");
    v.detail << " " << name << ": change=" << r.integrability_change;
  }
}

void wedges(Verdict& v) {
  struct Case {
    const char* params;
    ptc::Branch branch;
    bool adjacent;
    bool pt;
  };
  const Case cases[] = {{"-2i,1,1", ptc::Branch::principal, false, true},
                        {"i,1,1", ptc::Branch::principal, false, true},
                        {"1,0,1", ptc::Branch::upper, false, true},
                        {"1,0,1", ptc::Branch::lower, false, true},
                        {"1,1,1", ptc::Branch::principal, true, false}};
  for (const auto& c : cases) {
    const auto r = ptc::wedge_report(ptc::parse_params(c.params, c.branch));
    const std::string name = std::string(c.params) + "/" + std::string(ptc::to_string(c.branch));
    v.require(r.adjacent == c.adjacent && r.pt_symmetric == c.pt, name);
    v.detail << " " << name << ": wedges " << r.wedge_minus << "->" << r.wedge_plus
             << (r.adjacent ? " adjacent" : " non-adjacent") << (r.pt_symmetric ? " PT" : " non-PT") << ";";
  }
}

void hermite(Verdict& v) {
  const auto demo = ptc::hermite_demo(5);
  const double err = demo.max_relative_error();
  v.require(err < kHermiteRelative, "hermite orthogonality");
  v.detail << " max_rel_err=" << err;
}

}  // namespace

int main() {
  bool all = true;
  all &= report(1, "exact algebra suite", exact_algebra);
  all &= report(2, "metric pushforward identities", pushforward);
  all &= report(3, "oracle spectrum and contour independence", oracle);
  all &= report(4, "amplitude invariance", isometry);
  all &= report(5, "blow-up yet finite", blow_up);
  all &= report(6, "WKB asymptotics", wkb);
  all &= report(7, "wedge taxonomy", wedges);
  all &= report(8, "Hermite demo", hermite);
  std::printf("%s: acceptance gate\n", all ? "PASS" : "FAIL");
  return all ? 0 : 1;
}
