# Copyright (c) The ptcontour Authors. All rights reserved.
# SPDX-License-Identifier: Apache-2.0

import json
import math

import pytest

import ptcontour as ptc


def test_parse_and_exact_metric():
    p = ptc.parse_params("-2i,1,1")
    assert p.a == "-2i" and p.branch == "principal"
    assert ptc.metric(p) == {"kappa3": "1/48", "kappa1": "-2"}
    assert ptc.parse_params("1,0,1", "upper").branch == "upper"


def test_hermitize_coefficients():
    h = ptc.hermitize(ptc.parse_params("1,1,1"))
    assert h["f"] == "-2/3" and h["g"] == "-1"


def test_pushforward_matches_target_metric():
    src, dst = ptc.parse_params("1,1,1"), ptc.parse_params("-2i,1,1")
    m = ptc.map_params(src, dst)
    assert (m["beta"], m["gamma"]) == ("-4", "5/4")
    assert (m["kappa3"], m["kappa1"]) == ("1/48", "-2")


def test_errors_carry_code():
    with pytest.raises(ptc.Error) as info:
        ptc.parse_params("1,,1")
    assert info.value.code == "ParseError"
    with pytest.raises(ptc.Error) as info:
        ptc.hermitize(ptc.parse_params("1,1,i"))
    assert info.value.code == "NotHermitizable"


def test_contour_points():
    z = ptc.contour_points(ptc.parse_params("1,0,1"), [4.0])
    assert abs(z[0] - complex(math.sqrt(2), math.sqrt(2))) < 1e-12


def test_wedges():
    assert ptc.wedge_report(ptc.parse_params("1,1,1"))["adjacent"]
    r = ptc.wedge_report(ptc.parse_params("-2i,1,1"))
    assert not r["adjacent"] and r["pt_symmetric"]


def test_spectrum_is_contour_independent():
    a = ptc.spectrum(ptc.parse_params("-2i,1,1"), 3, 601)["eigenvalues"]
    b = ptc.spectrum(ptc.parse_params("1,1,1"), 3, 601)["eigenvalues"]
    assert a[0].real == pytest.approx(1.4771497, rel=1e-4)
    for x, y in zip(a, b):
        assert abs(x - y) < 1e-6


def test_isometry():
    r = ptc.verify_isometry(ptc.parse_params("1,1,1"), ptc.parse_params("-2i,1,1"), 2, 401)
    assert r["passed"] and r["max_deviation"] < 1e-6


def test_wkb_and_hermite():
    prof = ptc.wkb("adjacent", [-2.0, 0.5, 2.0])
    assert len(prof["log_magnitude"]) == 3
    assert ptc.check_asymptotics("upper_pt")["passed"]
    assert ptc.hermite_demo(5)["max_relative_error"] < 1e-8


def test_run_cli(tmp_path):
    code, out = ptc.run_cli(["wedges", "--a", "1", "--b", "1", "--c", "1", "--out", str(tmp_path), "--formats", "json"])
    assert code == 0
    assert json.loads(out)["adjacent"] is True
    code, out = ptc.run_cli(["wedges", "--a", "1/0x", "--b", "1", "--c", "1", "--out", str(tmp_path)])
    assert code == 4 and "error" in json.loads(out)
