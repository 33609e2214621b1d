# Copyright (c) The ptcontour Authors. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
"""Python bindings for the ptcontour C++ core.

Exact quantities (metric coefficients, map parameters) are returned as
strings in the same literal grammar that ``parse_params`` accepts.
"""

from ._ptcontour import (
    ContourParams,
    Error,
    check_asymptotics,
    contour_points,
    hermite_demo,
    hermitize,
    map_params,
    metric,
    oracle_spectrum,
    parse_params,
    run_cli,
    spectrum,
    verify_isometry,
    wedge_report,
    wkb,
)

__all__ = [
    "ContourParams",
    "Error",
    "check_asymptotics",
    "contour_points",
    "hermite_demo",
    "hermitize",
    "map_params",
    "metric",
    "oracle_spectrum",
    "parse_params",
    "run_cli",
    "spectrum",
    "verify_isometry",
    "wedge_report",
    "wkb",
]
