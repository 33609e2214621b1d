// Copyright (c) The ptcontour Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "CLI11.hpp"
#include "figures.hpp"
#include "ptcontour/contour.hpp"
#include "ptcontour/hamiltonians.hpp"
#include "ptcontour/isomap.hpp"
#include "ptcontour/metric.hpp"
#include "ptcontour/reference.hpp"
#include "ptcontour/spectral.hpp"
#include "serialize.hpp"

namespace ptc::cli {

namespace {

using io::json;

const char* const kTestMatrix[] = {"-2i,1,1", "i,1,1", "1,1,1", "1,0,1", "-2i,5,1"};

struct Artifact {
  std::string format;
  std::string name;
  std::string content;
};

struct Outcome {
  json result;
  bool passed = true;
  std::vector<Artifact> artifacts;
};

ContourParams require(const std::optional<ContourParams>& params, const char* what) {
  if (!params) throw Error(ErrorCode::InvalidParams, std::string("missing ") + what);
  return *params;
}

json check(const std::string& name, bool passed, const std::string& detail) {
  return {{"name", name}, {"passed", passed}, {"detail", detail}};
}

template <typename Fn>
json guarded(const std::string& name, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    return check(name, false, std::string(to_string(e.code())) + ": " + e.what());
  }
}

Outcome algebra_verify() {
  json checks = json::array();
  checks.push_back(guarded("hermite_chain", [] {
    const OperatorExpr h = bch_conjugate(hermite_generator(), hermite_hamiltonian());
    const OperatorExpr expected = OperatorExpr::monomial(1, 0, 2) + OperatorExpr::monomial(1, 2, 0) +
                                  OperatorExpr::monomial(-1, 0, 0);
    return check("hermite_chain", h == expected, h.to_string());
  }));
  for (const char* text : kTestMatrix) {
    const ContourParams params = parse_params(text);
    const std::string tag = std::string("(") + text + ")";
    checks.push_back(guarded("hermitian_form" + tag, [&] {
      const Hermitized herm = hermitize(params);
      const CRational a = params.a();
      const CRational c = params.c();
      const bool ok = herm.h.coeff(0, 4) == CRational(4) / (a.pow(8) * c.pow(4)) &&
                      herm.h.coeff(0, 1) == CRational(2) / (a.pow(2) * c) &&
                      herm.h.coeff(2, 0) == a.pow(4) * c.pow(2) && herm.h.terms().size() == 3;
      return check("hermitian_form" + tag, ok, herm.h.to_string());
    }));
    checks.push_back(guarded("metric" + tag, [&] {
      const MetricSpec m = metric_of(params);
      const CRational a = params.a();
      const CRational c = params.c();
      const bool ok = m.kappa3 == CRational(-4) / (CRational(3) * a.pow(6) * c.pow(3)) &&
                      m.kappa1 == CRational(-2) * params.b() / c;
      return check("metric" + tag, ok, "kappa3=" + m.kappa3.to_string() + " kappa1=" + m.kappa1.to_string());
    }));
    checks.push_back(guarded("anchor_swap" + tag, [&] {
      const SwapResult swap = canonical_swap(hermitize(params).h, params);
      return check("anchor_swap" + tag, swap.h1 == anchor_hamiltonian() && !swap.parity, swap.h1.to_string());
    }));
  }
  int pairs = 0;
  for (const char* src : kTestMatrix) {
    for (const char* dst : kTestMatrix) {
      if (src == dst) continue;
      const std::string name = std::string("pushforward(") + src + " -> " + dst + ")";
      checks.push_back(guarded(name, [&] {
        const IsoMap m = map_params(parse_params(src), parse_params(dst));
        const MetricSpec eta = push_metric(m, metric_of(m.source));
        return check(name, true, "beta=" + m.beta.to_string() + " gamma=" + m.gamma.to_string() +
                                     " eta2=(" + eta.kappa3.to_string() + ", " + eta.kappa1.to_string() + ")");
      }));
      ++pairs;
    }
  }
  const bool passed =
      std::all_of(checks.begin(), checks.end(), [](const json& c) { return c.at("passed").get<bool>(); });
  return {{{"checks", checks}, {"pushforward_pairs", pairs}, {"passed", passed}}, passed, {}};
}

Outcome spectrum(const RunConfig& config) {
  const ContourParams params = require(config.source, "--a/--b/--c");
  const int levels = config.levels > 0 ? config.levels : 5;
  const int n = config.grid_n > 0 ? config.grid_n : 1201;
  if (levels > static_cast<int>(kAnchorReferenceLevels.size())) {
    throw Error(ErrorCode::InvalidParams, "at most 8 levels have a reference value");
  }
  const Hermitized herm = hermitize(params);
  const SpectrumResult spec = hermitian_spectrum(params, levels, n);

  constexpr double kTolerance = 1e-5;
  json deviations = json::array();
  json reference = json::array();
  double worst = 0;
  io::CsvWriter csv({"level", "re", "im", "residual", "reference", "relative_deviation"});
  for (int k = 0; k < levels; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    const double ref = kAnchorReferenceLevels[idx];
    const double dev = std::abs(spec.eigenvalues[idx].real() - ref) / ref;
    worst = std::max(worst, dev);
    deviations.push_back(dev);
    reference.push_back(ref);
    csv.row({std::to_string(k), io::CsvWriter::number(spec.eigenvalues[idx].real()),
             io::CsvWriter::number(spec.eigenvalues[idx].imag()), io::CsvWriter::number(spec.residual_norms[idx]),
             io::CsvWriter::number(ref), io::CsvWriter::number(dev)});
  }
  const bool passed = worst < kTolerance;
  json result{{"params", io::to_json(params)},
              {"hermitian", herm.h.to_string()},
              {"metric", io::to_json(metric_of(params))},
              {"spectrum", io::to_json(spec)},
              {"reference", reference},
              {"relative_deviation", deviations},
              {"max_relative_deviation", worst},
              {"tolerance", kTolerance},
              {"passed", passed}};
  return {result, passed, {{"csv", "spectrum.csv", csv.str()}}};
}

Outcome iso_check(const RunConfig& config) {
  const ContourParams src = require(config.source, "--src");
  const ContourParams dst = require(config.target, "--dst");
  const int levels = config.levels > 0 ? config.levels : 3;
  const int n = config.grid_n > 0 ? config.grid_n : 801;
  const IsometryReport report = verify_isometry(src, dst, levels, n);

  io::CsvWriter csv({"i", "j", "source_re", "source_im", "target_re", "target_im", "abs_deviation"});
  for (int i = 0; i < levels; ++i) {
    for (int j = 0; j < levels; ++j) {
      const auto a1 = report.source_amplitudes[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      const auto a2 = report.target_amplitudes[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      csv.row({std::to_string(i), std::to_string(j), io::CsvWriter::number(a1.real()),
               io::CsvWriter::number(a1.imag()), io::CsvWriter::number(a2.real()), io::CsvWriter::number(a2.imag()),
               io::CsvWriter::number(std::abs(a1 - a2))});
    }
  }
  json result = io::to_json(report);
  result["tolerance"] = 1e-6;
  result["grid_n"] = n;
  return {result, report.passed(), {{"csv", "amplitudes.csv", csv.str()}}};
}

Outcome wedges(const RunConfig& config) {
  const ContourParams params = require(config.source, "--a/--b/--c");
  const WedgeReport report = wedge_report(params);
  json result = io::to_json(report);
  result["params"] = io::to_json(params);
  return {result, true, {{"svg", "wedges.svg", io::render_wedge_svg(params, report)}}};
}

Outcome wkb(const RunConfig& config) {
  if (!config.tag) throw Error(ErrorCode::InvalidParams, "missing --tag");
  const WkbTag tag = *config.tag;
  std::vector<double> p;
  for (int j = 0; j <= 1200; ++j) p.push_back(-6.0 + j * 0.01);
  const WkbProfile prof = wkb_profile(tag, p);
  const AsymptoticsReport asymptotics = check_asymptotics(tag);
  const NumericComparison comparison = compare_to_numeric(tag, params_for(tag));

  io::CsvWriter csv({"p", "log_abs_phi", "log_abs_phi_eta_phi", "in_mask", "complex_branch"});
  io::Series raw{"log|phi|", {}, {}};
  io::Series weighted{"log|phi eta phi|", {}, {}};
  for (std::size_t j = 0; j < p.size(); ++j) {
    csv.row({io::CsvWriter::number(p[j]), io::CsvWriter::number(prof.log_magnitude[j]),
             io::CsvWriter::number(prof.weighted[j]), prof.mask[j] ? "1" : "0", prof.complex_branch[j] ? "1" : "0"});
    raw.x.push_back(p[j]);
    weighted.x.push_back(p[j]);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    raw.y.push_back(prof.mask[j] ? prof.log_magnitude[j] : nan);
    weighted.y.push_back(prof.mask[j] ? prof.weighted[j] : nan);
  }
  io::LinePlot plot{"WKB profile: " + std::string(to_string(tag)), "p", "log magnitude", {raw, weighted},
                    std::pair{-60.0, 20.0}};

  json result{{"tag", std::string(to_string(tag))},
              {"params", io::to_json(params_for(tag))},
              {"metric", io::to_json(metric_of(params_for(tag)))},
              {"asymptotics", io::to_json(asymptotics)},
              {"numeric_comparison", io::to_json(comparison)},
              {"passed", asymptotics.passed()}};
  return {result, asymptotics.passed(), {{"csv", "wkb.csv", csv.str()}, {"svg", "wkb.svg", io::render_svg(plot)}}};
}

Outcome hermite(const RunConfig& config) {
  const HermiteDemo demo = hermite_demo(config.n_max);
  constexpr double kTolerance = 1e-8;
  io::CsvWriter csv({"x", "H0", "H1", "H2", "H3"});
  std::vector<io::Series> series(4);
  for (int k = 0; k < 4; ++k) series[static_cast<std::size_t>(k)].label = "H" + std::to_string(k);
  for (std::size_t j = 0; j < demo.x.size(); ++j) {
    std::vector<std::string> row{io::CsvWriter::number(demo.x[j])};
    for (std::size_t k = 0; k < 4; ++k) {
      row.push_back(io::CsvWriter::number(demo.curves[j][k]));
      series[k].x.push_back(demo.x[j]);
      series[k].y.push_back(demo.curves[j][k]);
    }
    csv.row(row);
  }
  io::LinePlot plot{"Hermite polynomials H0..H3", "x", "H_n(x)", series, std::pair{-20.0, 20.0}};
  json result = io::to_json(demo);
  result["tolerance"] = kTolerance;
  const bool passed = demo.max_relative_error() < kTolerance;
  result["passed"] = passed;
  return {result, passed, {{"csv", "hermite.csv", csv.str()}, {"svg", "hermite.svg", io::render_svg(plot)}}};
}

bool safe_entry_name(const std::string& name) {
  return !name.empty() && std::all_of(name.begin(), name.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-' || ch == '.';
  }) && name != "." && name != "..";
}

Outcome sweep(const RunConfig& config) {
  boost::property_tree::ptree tree;
  try {
    boost::property_tree::ini_parser::read_ini(config.config_file.string(), tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    const bool missing = !std::filesystem::exists(config.config_file);
    throw Error(missing ? ErrorCode::IoError : ErrorCode::ParseError,
                missing ? "cannot read " + config.config_file.string() : std::string(e.what()));
  }

  std::string formats;
  for (const auto& f : config.formats) formats += (formats.empty() ? "" : ",") + f;

  struct Entry {
    std::string name;
    std::vector<std::string> args;
  };
  std::vector<Entry> entries;
  for (const auto& [section, body] : tree) {
    if (body.empty()) throw Error(ErrorCode::ParseError, "key '" + section + "' outside a section");
    if (!safe_entry_name(section)) throw Error(ErrorCode::InvalidParams, "unsafe sweep entry name '" + section + "'");
    const auto command = body.get_optional<std::string>("command");
    if (!command) throw Error(ErrorCode::ParseError, "sweep entry '" + section + "' has no command");
    if (*command == "sweep") throw Error(ErrorCode::InvalidParams, "sweeps cannot nest");
    Entry entry{section, {*command}};
    for (const auto& [key, value] : body) {
      if (key == "command") continue;
      entry.args.push_back("--" + key + "=" + value.data());
    }
    entry.args.push_back("--out=" + (config.out_dir / section).string());
    entry.args.push_back("--formats=" + formats);
    entries.push_back(std::move(entry));
  }

  std::vector<std::future<std::pair<int, std::string>>> jobs;
  for (const auto& entry : entries) {
    jobs.push_back(std::async(std::launch::async, [args = entry.args] {
      std::ostringstream sink;
      const int code = run_cli(args, sink);
      return std::pair{code, sink.str()};
    }));
  }
  json results = json::object();
  bool passed = true;
  int worst = kPass;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    auto [code, text] = jobs[k].get();
    results[entries[k].name] = {{"exit_code", code}, {"result", json::parse(text)}};
    passed = passed && code == kPass;
    worst = std::max(worst, code);
  }
  return {{{"entries", results}, {"count", entries.size()}, {"worst_exit_code", worst}, {"passed", passed}},
          passed,
          {}};
}

Outcome dispatch(const RunConfig& config) {
  if (config.command == "algebra-verify") return algebra_verify();
  if (config.command == "spectrum") return spectrum(config);
  if (config.command == "iso-check") return iso_check(config);
  if (config.command == "wedges") return wedges(config);
  if (config.command == "wkb") return wkb(config);
  if (config.command == "hermite-demo") return hermite(config);
  if (config.command == "sweep") return sweep(config);
  throw Error(ErrorCode::ParseError, "unknown command '" + config.command + "'");
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  file << content;
  if (!file) throw Error(ErrorCode::IoError, "cannot write " + path.string());
}

std::set<std::string> parse_formats(const std::string& text) {
  std::set<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item != "json" && item != "csv" && item != "svg") {
      throw Error(ErrorCode::ParseError, "unknown format '" + item + "' in --formats");
    }
    out.insert(item);
  }
  return out;
}

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
      return kParseFailure;
    case ErrorCode::NoConvergence:
    case ErrorCode::NotConverged:
      return kNonConvergence;
    default:
      return kValidationFailure;
  }
}

ParsedArgs parse_args(const std::vector<std::string>& args) {
  ParsedArgs parsed;
  RunConfig& config = parsed.config;

  CLI::App app{"Contour-independent analysis of the wrong-sign quartic oscillator", "ptcontour"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_dir = config.out_dir.string();
  std::string formats = "json,csv,svg";
  app.add_option("--out", out_dir, "Output directory (created if missing)");
  app.add_option("--formats", formats, "Comma separated subset of json,csv,svg");

  std::string a;
  std::string b;
  std::string c;
  std::string branch = "principal";
  std::string src;
  std::string dst;
  std::string tag;
  auto contour_options = [&](CLI::App* sub) {
    sub->add_option("--a", a, "Contour parameter a (complex literal)")->required();
    sub->add_option("--b", b, "Contour parameter b")->required();
    sub->add_option("--c", c, "Contour parameter c")->required();
    sub->add_option("--branch", branch, "principal, lower or upper");
  };
  auto grid_options = [&](CLI::App* sub) {
    sub->add_option("--levels", config.levels, "Number of levels");
    sub->add_option("--grid-n", config.grid_n, "Grid points");
  };

  app.add_subcommand("algebra-verify", "Run the exact operator identities");
  auto* spec = app.add_subcommand("spectrum", "Spectrum of the Hermitian form against the reference");
  contour_options(spec);
  grid_options(spec);
  auto* iso = app.add_subcommand("iso-check", "Amplitude preservation between two contours");
  iso->add_option("--src", src, "Source contour a,b,c")->required();
  iso->add_option("--dst", dst, "Target contour a,b,c")->required();
  iso->add_option("--branch", branch, "Branch for both contours");
  grid_options(iso);
  auto* wedge = app.add_subcommand("wedges", "Stokes wedge classification and figure");
  contour_options(wedge);
  auto* wkb_cmd = app.add_subcommand("wkb", "WKB profile, asymptotics and numeric comparison");
  wkb_cmd->add_option("--tag", tag, "upper_pt, adjacent or sqrt_ix")->required();
  auto* herm = app.add_subcommand("hermite-demo", "Hermite weight-function table and figure");
  herm->add_option("--n-max", config.n_max, "Highest polynomial degree (<= 8)");
  std::string config_file;
  auto* sw = app.add_subcommand("sweep", "Run the entries of an INI file concurrently");
  sw->add_option("--config", config_file, "INI file, one section per run")->required();

  // CLI11 takes the vector in reverse order.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    parsed.help = true;
    parsed.help_text = app.help();
    return parsed;
  } catch (const CLI::ParseError& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }

  config.command = app.get_subcommands().front()->get_name();
  config.out_dir = out_dir;
  config.formats = parse_formats(formats);
  const Branch br = parse_branch(branch);
  if (!a.empty()) config.source = ContourParams(parse_complex(a), parse_complex(b), parse_complex(c), br);
  if (!src.empty()) config.source = parse_params(src, br);
  if (!dst.empty()) config.target = parse_params(dst, br);
  if (!tag.empty()) config.tag = parse_wkb_tag(tag);
  config.config_file = config_file;
  return parsed;
}

int run(const RunConfig& config, std::ostream& out) {
  try {
    Outcome outcome = dispatch(config);
    std::filesystem::create_directories(config.out_dir);
    json written = json::array();
    for (const auto& artifact : outcome.artifacts) {
      if (config.formats.count(artifact.format) == 0) continue;
      write_file(config.out_dir / artifact.name, artifact.content);
      written.push_back(artifact.name);
    }
    outcome.result["command"] = config.command;
    if (config.formats.count("json") != 0) written.push_back(config.command + ".json");
    outcome.result["artifacts"] = written;
    const std::string text = io::dump(outcome.result);
    if (config.formats.count("json") != 0) write_file(config.out_dir / (config.command + ".json"), text);
    out << text;
    return outcome.passed ? kPass : kValidationFailure;
  } catch (const Error& e) {
    json err = io::error_json(e.code(), e.what());
    err["command"] = config.command;
    out << io::dump(err);
    return exit_code_for(e.code());
  } catch (const std::filesystem::filesystem_error& e) {
    json err = io::error_json(ErrorCode::IoError, e.what());
    err["command"] = config.command;
    out << io::dump(err);
    return exit_code_for(ErrorCode::IoError);
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out) {
  ParsedArgs parsed;
  try {
    parsed = parse_args(args);
  } catch (const Error& e) {
    out << io::dump(io::error_json(e.code(), e.what()));
    return exit_code_for(e.code());
  }
  if (parsed.help) {
    out << parsed.help_text;
    return kPass;
  }
  return run(parsed.config, out);
}

}  // namespace ptc::cli
