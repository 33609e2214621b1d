// Copyright (c) The ptcontour Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ptcontour/errors.hpp"
#include "ptcontour/params.hpp"
#include "ptcontour/wkb.hpp"

namespace ptc::cli {

enum ExitCode : int {
  kPass = 0,
  kValidationFailure = 2,
  kNonConvergence = 3,
  kParseFailure = 4,
};

int exit_code_for(ErrorCode code);

struct RunConfig {
  std::string command;
  std::optional<ContourParams> source;
  std::optional<ContourParams> target;
  std::optional<WkbTag> tag;
  int levels = 0;  // 0 picks the command default
  int grid_n = 0;
  int n_max = 5;
  std::filesystem::path out_dir = "ptcontour-out";
  std::set<std::string> formats = {"json", "csv", "svg"};
  std::filesystem::path config_file;
};

/// Parses argv-style arguments (without the program name) into a config.
/// Throws Error{ParseError} on malformed input; --help is reported through
/// the returned flag.
struct ParsedArgs {
  RunConfig config;
  bool help = false;
  std::string help_text;
};
ParsedArgs parse_args(const std::vector<std::string>& args);

/// Runs one command. The result JSON goes to `out` and, when "json" is among
/// the formats, to <out_dir>/<command>.json. Errors are reported as JSON
/// {"error": {"code", "message"}} and mapped to exit codes 2, 3 or 4.
int run(const RunConfig& config, std::ostream& out);

/// parse_args + run with error mapping.
int run_cli(const std::vector<std::string>& args, std::ostream& out);

}  // namespace ptc::cli
