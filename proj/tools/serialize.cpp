// Copyright (c) The ptcontour Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "serialize.hpp"

namespace ptc::io {

json to_json(std::complex<double> z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json to_json(const CRational& z) { return z.to_string(); }

json to_json(const ContourParams& params) {
  return {{"a", params.a().to_string()},
          {"b", params.b().to_string()},
          {"c", params.c().to_string()},
          {"branch", std::string(to_string(params.branch()))}};
}

json to_json(const Grid& grid) {
  return {{"variable", std::string(to_string(grid.variable))}, {"lo", grid.lo}, {"hi", grid.hi}, {"n", grid.n}};
}

json to_json(const SpectrumResult& spec) {
  json values = json::array();
  for (const auto& e : spec.eigenvalues) values.push_back(to_json(e));
  json out{{"eigenvalues", values}, {"residuals", spec.residual_norms}, {"method", spec.method}};
  out["grid"] = spec.grid ? to_json(*spec.grid) : json();
  return out;
}

json to_json(const MetricSpec& metric) {
  return {{"kappa3", to_json(metric.kappa3)}, {"kappa1", to_json(metric.kappa1)}, {"params", to_json(metric.origin)}};
}

json to_json(const WedgeReport& report) {
  return {{"theta_plus", report.theta_plus},
          {"theta_minus", report.theta_minus},
          {"wedge_plus", report.wedge_plus},
          {"wedge_minus", report.wedge_minus},
          {"decay_family_plus", std::string(1, to_char(report.decay_family_plus))},
          {"decay_family_minus", std::string(1, to_char(report.decay_family_minus))},
          {"adjacent", report.adjacent},
          {"pt_symmetric", report.pt_symmetric}};
}

json to_json(const AmplitudeTable& table) {
  json rows = json::array();
  for (const auto& row : table) {
    json cells = json::array();
    for (const auto& value : row) cells.push_back(to_json(value));
    rows.push_back(cells);
  }
  return rows;
}

json to_json(const IsometryReport& report) {
  return {{"src", to_json(report.map.source)},
          {"dst", to_json(report.map.target)},
          {"beta", to_json(report.map.beta)},
          {"gamma", to_json(report.map.gamma)},
          {"max_deviation", report.max_deviation},
          {"source_identity_deviation", report.source_identity_deviation},
          {"target_identity_deviation", report.target_identity_deviation},
          {"exponents_match_target", report.exponents_match_target},
          {"amplitude_tables", {{"source", to_json(report.source_amplitudes)},
                                {"target", to_json(report.target_amplitudes)}}},
          {"passed", report.passed()}};
}

json to_json(const HermiteDemo& demo) {
  return {{"n_max", demo.n_max},
          {"table", demo.table},
          {"oracle", demo.oracle},
          {"max_relative_error", demo.max_relative_error()}};
}

json to_json(const AsymptoticsReport& report) {
  json tails = json::array();
  for (const auto& tail : report.tails) {
    tails.push_back({{"direction", tail.direction}, {"expect_growth", tail.expect_growth}, {"monotone", tail.monotone}});
  }
  return {{"tag", std::string(to_string(report.tag))},
          {"tails", tails},
          {"integrability_change", report.integrability_change},
          {"weighted_decays_both_ends", report.weighted_decays_both_ends},
          {"passed", report.passed()}};
}

json to_json(const NumericComparison& cmp) {
  json ends = json::array();
  for (const auto& end : cmp.ends) {
    ends.push_back({{"direction", end.direction},
                    {"numeric_slope", end.numeric_slope},
                    {"wkb_slope", end.wkb_slope},
                    {"same_sign", end.same_sign},
                    {"relative_difference", end.relative_difference}});
  }
  return {{"tag", std::string(to_string(cmp.tag))}, {"level", cmp.level}, {"ends", ends}};
}

json error_json(ErrorCode code, const std::string& message) {
  return {{"error", {{"code", std::string(to_string(code))}, {"message", message}}}};
}

std::string dump(const json& value) { return value.dump(2) + "\n"; }

}  // namespace ptc::io
