#!/usr/bin/env python
# -*- coding:utf-8 -*-
# project : compacta
# filename : report
# author : ly_13
# date : 3/11/2025

import json

from apps.compacta.arith import format_rat, pow2, render_creal
from apps.compacta.hausdorff import FiniteList
from apps.compacta.metric.spaces import Point


def render_point(point: Point, precision: int) -> list:
    return [format_rat(c.approx(precision)) for c in point.coords]


def render_list(points: FiniteList, precision: int) -> dict:
    exact = all(p.is_exact for p in points)
    return {
        "size": len(points),
        "points": [render_point(p, precision) for p in points],
        "error": "0" if exact else format_rat(pow2(precision)),
    }


def render_value(x, precision: int) -> dict:
    return render_creal(x, precision)


def dump_report(report: dict) -> str:
    """Canonical JSON text: sorted keys, fixed separators, one trailing newline."""
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
