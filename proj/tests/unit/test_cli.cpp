// Copyright (c) The ptcontour Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "figures.hpp"
#include "serialize.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string text;
  json doc;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  const int code = ptc::cli::run_cli(args, out);
  Run r{code, out.str(), json()};
  if (code != 0 || r.text.front() == '{') r.doc = json::parse(r.text);
  return r;
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("ptc_cli_test_" + name);
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("csv quoting follows RFC 4180") {
  ptc::io::CsvWriter csv({"name", "value"});
  csv.row({"plain", "1"});
  csv.row({"a,b", "say \"hi\""});
  csv.row({"short"});
  CHECK(csv.str() == "name,value\r\nplain,1\r\n\"a,b\",\"say \"\"hi\"\"\"\r\nshort,\r\n");
  CHECK(ptc::io::CsvWriter::number(0.1) == "0.10000000000000001");
}

TEST_CASE("svg line plot is a closed document and skips clipped samples") {
  ptc::io::LinePlot plot{"t & t", "x", "y", {{"s", {0, 1, 2, 3}, {0, 1, 100, 2}}}, std::pair{-1.0, 5.0}};
  const std::string svg = ptc::io::render_svg(plot);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("t &amp; t") != std::string::npos);
  std::size_t lines = 0;
  for (std::size_t pos = svg.find("<polyline"); pos != std::string::npos; pos = svg.find("<polyline", pos + 1)) ++lines;
  CHECK(lines == 2);
}

TEST_CASE("negative complex literals are accepted as option values") {
  const auto parsed = ptc::cli::parse_args({"spectrum", "--a", "-2i", "--b", "5", "--c", "1"});
  REQUIRE(parsed.config.source);
  CHECK(parsed.config.source->a() == ptc::CRational(0) - ptc::CRational::i() * ptc::CRational(2));
  CHECK(parsed.config.source->b() == ptc::CRational(5));
  const auto iso = ptc::cli::parse_args({"iso-check", "--src", "1,1,1", "--dst", "-2i,1,1"});
  CHECK(iso.config.target == ptc::parse_params("-2i,1,1"));
}

TEST_CASE("parse failures exit with code 4 and an error document") {
  auto r = run({"spectrum", "--a", "1/0x", "--b", "1", "--c", "1"});
  CHECK(r.code == 4);
  CHECK(r.doc["error"]["code"] == "ParseError");
  r = run({"frobnicate"});
  CHECK(r.code == 4);
  r = run({"wedges", "--a", "1", "--b", "1", "--c", "1", "--formats", "json,png"});
  CHECK(r.code == 4);
  r = run({"wkb", "--tag", "sideways"});
  CHECK(r.code == 4);
}

TEST_CASE("validation failures exit with code 2") {
  const auto dir = scratch("invalid");
  auto r = run({"spectrum", "--a", "1+i", "--b", "1", "--c", "1", "--out", dir.string()});
  CHECK(r.code == 2);
  CHECK(r.doc["error"]["code"] == "NotHermitizable");
  CHECK(r.doc["command"] == "spectrum");
  r = run({"spectrum", "--a", "1", "--b", "1", "--c", "1", "--levels", "9", "--out", dir.string()});
  CHECK(r.code == 2);
  r = run({"wedges", "--a", "1", "--b", "1", "--c", "i", "--out", dir.string()});
  CHECK(r.code == 2);
}

TEST_CASE("wedges for the adjacent contour") {
  const auto dir = scratch("wedges");
  const auto r = run({"wedges", "--a", "1", "--b", "1", "--c", "1", "--out", dir.string()});
  REQUIRE(r.code == 0);
  CHECK(r.doc["adjacent"] == true);
  CHECK(r.doc["pt_symmetric"] == false);
  CHECK(fs::exists(dir / "wedges.svg"));
  CHECK(slurp(dir / "wedges.json") == r.text);
}

TEST_CASE("output is deterministic and confined to --out") {
  const auto a = scratch("det_a");
  const auto b = scratch("det_b");
  const auto ra = run({"hermite-demo", "--out", a.string()});
  const auto rb = run({"hermite-demo", "--out", b.string()});
  REQUIRE(ra.code == 0);
  CHECK(ra.text == rb.text);
  std::vector<std::string> files;
  for (const auto& entry : fs::recursive_directory_iterator(a)) files.push_back(entry.path().filename().string());
  std::sort(files.begin(), files.end());
  CHECK(files == std::vector<std::string>{"hermite-demo.json", "hermite.csv", "hermite.svg"});
  for (const auto& name : files) CHECK(slurp(a / name) == slurp(b / name));
  CHECK(slurp(a / "hermite.csv").rfind("x,H0,H1,H2,H3\r\n", 0) == 0);
  CHECK(ra.doc["max_relative_error"].get<double>() < 1e-8);
}

TEST_CASE("iso-check reports the negative-beta map") {
  const auto dir = scratch("iso");
  const auto r = run({"iso-check", "--src", "1,1,1", "--dst", "-2i,1,1", "--out", dir.string()});
  REQUIRE(r.code == 0);
  CHECK(r.doc["beta"] == "-4");
  CHECK(r.doc["gamma"] == "5/4");
  CHECK(r.doc["max_deviation"].get<double>() < 1e-6);
  CHECK(r.doc["amplitude_tables"]["source"].size() == 3);
  CHECK(fs::exists(dir / "amplitudes.csv"));
}

TEST_CASE("spectrum is independent of b") {
  const auto dir = scratch("spectrum");
  const auto r1 = run({"spectrum", "--a", "-2i", "--b", "1", "--c", "1", "--out", (dir / "b1").string()});
  const auto r5 = run({"spectrum", "--a", "-2i", "--b", "5", "--c", "1", "--out", (dir / "b5").string()});
  REQUIRE(r1.code == 0);
  REQUIRE(r5.code == 0);
  const auto& e1 = r1.doc["spectrum"]["eigenvalues"];
  const auto& e5 = r5.doc["spectrum"]["eigenvalues"];
  REQUIRE(e1.size() == 5);
  for (std::size_t k = 0; k < 5; ++k) {
    CHECK(std::abs(e1[k]["re"].get<double>() - e5[k]["re"].get<double>()) < 1e-7);
  }
  CHECK(r5.doc["max_relative_deviation"].get<double>() < 1e-5);
  CHECK(r5.doc["metric"]["kappa1"] == "-10");
}

TEST_CASE("wkb and algebra-verify pass") {
  const auto dir = scratch("misc");
  auto r = run({"wkb", "--tag", "adjacent", "--out", dir.string()});
  CHECK(r.code == 0);
  CHECK(r.doc["asymptotics"]["passed"] == true);
  CHECK(fs::exists(dir / "wkb.svg"));
  r = run({"algebra-verify", "--out", dir.string(), "--formats", "json"});
  CHECK(r.code == 0);
  CHECK(r.doc["pushforward_pairs"] == 20);
  for (const auto& c : r.doc["checks"]) CHECK_MESSAGE(c["passed"] == true, c["name"]);
}

TEST_CASE("sweep runs every entry and merges a summary") {
  const auto dir = scratch("sweep");
  const auto r = run({"sweep", "--config", PTC_FIXTURE_DIR "/sweep.ini", "--out", dir.string()});
  REQUIRE(r.code == 0);
  CHECK(r.doc["count"] == 4);
  CHECK(r.doc["entries"]["adjacent_wedges"]["result"]["adjacent"] == true);
  CHECK(r.doc["entries"]["lower_pt_wedges"]["result"]["pt_symmetric"] == true);
  CHECK(r.doc["entries"]["upper_to_lower"]["result"]["beta"] == "4");
  CHECK(fs::exists(dir / "sweep.json"));
  CHECK(fs::exists(dir / "hermite" / "hermite.svg"));
  CHECK(fs::exists(dir / "upper_to_lower" / "amplitudes.csv"));
}

TEST_CASE("sweep rejects unsafe or nested entries") {
  const auto dir = scratch("sweep_bad");
  fs::create_directories(dir);
  {
    std::ofstream ini(dir / "bad.ini");
    ini << "[..]\ncommand = wedges\n";
  }
  CHECK(run({"sweep", "--config", (dir / "bad.ini").string(), "--out", dir.string()}).code == 2);
  {
    std::ofstream ini(dir / "nested.ini");
    ini << "[inner]\ncommand = sweep\n";
  }
  CHECK(run({"sweep", "--config", (dir / "nested.ini").string(), "--out", dir.string()}).code == 2);
  const auto missing = run({"sweep", "--config", (dir / "absent.ini").string(), "--out", dir.string()});
  CHECK(missing.code == 2);
  CHECK(missing.doc["error"]["code"] == "IoError");
}
