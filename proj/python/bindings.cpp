// Copyright (c) The ptcontour Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "ptcontour/contour.hpp"
#include "ptcontour/errors.hpp"
#include "ptcontour/hamiltonians.hpp"
#include "ptcontour/isomap.hpp"
#include "ptcontour/metric.hpp"
#include "ptcontour/spectral.hpp"
#include "ptcontour/wkb.hpp"

namespace py = pybind11;
using namespace py::literals;

namespace {

// Exact quantities cross the boundary as strings in the literal grammar
// accepted by parse_params, e.g. "-4/3" or "2i".
std::string exact(const ptc::CRational& q) { return q.to_string(); }

py::dict wedge_dict(const ptc::WedgeReport& r) {
  return py::dict("theta_plus"_a = r.theta_plus, "theta_minus"_a = r.theta_minus, "wedge_plus"_a = r.wedge_plus,
                  "wedge_minus"_a = r.wedge_minus,
                  "decay_family_plus"_a = std::string(1, ptc::to_char(r.decay_family_plus)),
                  "decay_family_minus"_a = std::string(1, ptc::to_char(r.decay_family_minus)),
                  "adjacent"_a = r.adjacent, "pt_symmetric"_a = r.pt_symmetric);
}

py::dict isometry_dict(const ptc::IsometryReport& r) {
  return py::dict("beta"_a = exact(r.map.beta), "gamma"_a = exact(r.map.gamma),
                  "source_amplitudes"_a = r.source_amplitudes, "target_amplitudes"_a = r.target_amplitudes,
                  "max_deviation"_a = r.max_deviation, "source_identity_deviation"_a = r.source_identity_deviation,
                  "target_identity_deviation"_a = r.target_identity_deviation,
                  "exponents_match_target"_a = r.exponents_match_target, "passed"_a = r.passed());
}

py::dict asymptotics_dict(const ptc::AsymptoticsReport& r) {
  py::list tails;
  for (const auto& t : r.tails) {
    tails.append(py::dict("direction"_a = t.direction, "expect_growth"_a = t.expect_growth, "monotone"_a = t.monotone));
  }
  return py::dict("tag"_a = std::string(ptc::to_string(r.tag)), "tails"_a = tails,
                  "integrability_change"_a = r.integrability_change,
                  "weighted_decays_both_ends"_a = r.weighted_decays_both_ends, "passed"_a = r.passed());
}

}  // namespace

PYBIND11_MODULE(_ptcontour, m) {
  m.doc() = "Exact operator algebra and numerics for PT-symmetric quartic contours";

  static py::exception<ptc::Error> error(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ptc::Error& e) {
      const std::string code(ptc::to_string(e.code()));
      py::object exc = py::reinterpret_borrow<py::object>(error.ptr())(code + ": " + e.what());
      exc.attr("code") = code;
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  py::class_<ptc::ContourParams>(m, "ContourParams")
      .def_property_readonly("a", [](const ptc::ContourParams& p) { return exact(p.a()); })
      .def_property_readonly("b", [](const ptc::ContourParams& p) { return exact(p.b()); })
      .def_property_readonly("c", [](const ptc::ContourParams& p) { return exact(p.c()); })
      .def_property_readonly("branch",
                             [](const ptc::ContourParams& p) { return std::string(ptc::to_string(p.branch())); })
      .def_property_readonly("a2c", [](const ptc::ContourParams& p) { return exact(p.a2c()); })
      .def("__eq__", [](const ptc::ContourParams& l, const ptc::ContourParams& r) { return l == r; })
      .def("__str__", &ptc::ContourParams::to_string)
      .def("__repr__", [](const ptc::ContourParams& p) {
        return "ContourParams('" + p.to_string() + "', branch='" + std::string(ptc::to_string(p.branch())) + "')";
      });

  m.def(
      "parse_params",
      [](const std::string& text, const std::string& branch) {
        return ptc::parse_params(text, ptc::parse_branch(branch));
      },
      "text"_a, "branch"_a = "principal", "Parse \"a,b,c\" into contour parameters.");

  m.def(
      "contour_points",
      [](const ptc::ContourParams& p, const std::vector<double>& x) {
        std::vector<std::complex<double>> z;
        for (const auto& s : ptc::sample(p, x)) z.push_back(s.z);
        return z;
      },
      "params"_a, "x"_a);

  m.def(
      "hermitize",
      [](const ptc::ContourParams& p) {
        const auto h = ptc::hermitize(p);
        return py::dict("h"_a = h.h.to_string(), "f"_a = exact(h.f), "g"_a = exact(h.g),
                        "generator"_a = h.generator().to_string());
      },
      "params"_a);

  m.def(
      "metric",
      [](const ptc::ContourParams& p) {
        const auto eta = ptc::metric_of(p);
        return py::dict("kappa3"_a = exact(eta.kappa3), "kappa1"_a = exact(eta.kappa1));
      },
      "params"_a);

  m.def(
      "map_params",
      [](const ptc::ContourParams& src, const ptc::ContourParams& dst) {
        const auto map = ptc::map_params(src, dst);
        const auto pushed = ptc::push_metric(map, ptc::metric_of(src));
        return py::dict("beta"_a = exact(map.beta), "gamma"_a = exact(map.gamma),
                        "kappa3"_a = exact(pushed.kappa3), "kappa1"_a = exact(pushed.kappa1));
      },
      "source"_a, "target"_a);

  m.def(
      "spectrum",
      [](const ptc::ContourParams& p, int k, int n) {
        const auto s = ptc::hermitian_spectrum(p, k, n);
        return py::dict("eigenvalues"_a = s.eigenvalues, "residual_norms"_a = s.residual_norms, "method"_a = s.method);
      },
      "params"_a, "levels"_a = 5, "n"_a = 1201);

  m.def(
      "oracle_spectrum",
      [](int levels) {
        const auto o = ptc::oracle_spectrum(levels);
        return py::dict("levels"_a = o.levels, "drift"_a = o.drift, "grid_sizes"_a = o.grid_sizes);
      },
      "levels"_a = 5);

  m.def("wedge_report", [](const ptc::ContourParams& p) { return wedge_dict(ptc::wedge_report(p)); }, "params"_a);

  m.def(
      "verify_isometry",
      [](const ptc::ContourParams& src, const ptc::ContourParams& dst, int k, int n) {
        return isometry_dict(ptc::verify_isometry(src, dst, k, n));
      },
      "source"_a, "target"_a, "levels"_a = 3, "n"_a = 801);

  m.def(
      "wkb",
      [](const std::string& tag, const std::vector<double>& p) {
        const auto prof = ptc::wkb_profile(ptc::parse_wkb_tag(tag), p);
        return py::dict("p"_a = prof.p, "log_magnitude"_a = prof.log_magnitude, "weighted"_a = prof.weighted,
                        "mask"_a = prof.mask, "complex_branch"_a = prof.complex_branch);
      },
      "tag"_a, "p"_a);

  m.def(
      "check_asymptotics",
      [](const std::string& tag) { return asymptotics_dict(ptc::check_asymptotics(ptc::parse_wkb_tag(tag))); },
      "tag"_a);

  m.def(
      "hermite_demo",
      [](int n_max) {
        const auto d = ptc::hermite_demo(n_max);
        return py::dict("table"_a = d.table, "oracle"_a = d.oracle, "max_relative_error"_a = d.max_relative_error());
      },
      "n_max"_a = 5);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        int code = 0;
        {
          py::gil_scoped_release release;
          code = ptc::cli::run_cli(args, out);
        }
        return py::make_tuple(code, out.str());
      },
      "args"_a, "Run a ptcontour subcommand; returns (exit_code, stdout).");
}
