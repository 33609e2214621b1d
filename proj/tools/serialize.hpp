// Copyright (c) The ptcontour Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <vector>

#include "json.hpp"
#include "ptcontour/contour.hpp"
#include "ptcontour/crational.hpp"
#include "ptcontour/errors.hpp"
#include "ptcontour/isomap.hpp"
#include "ptcontour/metric.hpp"
#include "ptcontour/params.hpp"
#include "ptcontour/spectral.hpp"
#include "ptcontour/wkb.hpp"

// JSON views of library results. Objects use nlohmann::json's std::map
// storage, so keys come out sorted and dumps are byte-stable.
namespace ptc::io {

using nlohmann::json;

json to_json(std::complex<double> z);
json to_json(const CRational& z);
json to_json(const ContourParams& params);
json to_json(const Grid& grid);
json to_json(const SpectrumResult& spec);
json to_json(const MetricSpec& metric);
json to_json(const WedgeReport& report);
json to_json(const AmplitudeTable& table);
json to_json(const IsometryReport& report);
json to_json(const HermiteDemo& demo);
json to_json(const AsymptoticsReport& report);
json to_json(const NumericComparison& cmp);
json error_json(ErrorCode code, const std::string& message);

/// Two-space indented dump with a trailing newline.
std::string dump(const json& value);

}  // namespace ptc::io
