#!/usr/bin/env python
# -*- coding:utf-8 -*-
# project : compacta
# filename : nets
# author : ly_13
# date : 3/3/2025

import itertools
import math

from django.utils.translation import gettext_lazy as _

from apps.compacta.arith import parse_rat
from apps.compacta.exceptions import PreconditionViolation
from apps.compacta.hausdorff import FiniteList
from apps.compacta.metric.spaces import RealSpace


def _axis(lo, hi, spacing):
    lo, hi = parse_rat(lo), parse_rat(hi)
    if lo > hi:
        raise PreconditionViolation(_("Box interval [{}, {}] is reversed").format(lo, hi))
    count = math.floor((hi - lo) / spacing)
    values = [lo + i * spacing for i in range(count + 1)]
    # the upper end always belongs to the grid
    if values[-1] != hi:
        values.append(hi)
    return values


def grid_net(space: RealSpace, box, spacing) -> FiniteList:
    """
    All grid points of ``box`` at ``spacing``, endpoints included.

    ``box`` is a list of (lo, hi) pairs, one per coordinate. The list lies within Hausdorff
    distance spacing/2 of the box in the sup metric.
    """
    spacing = parse_rat(spacing)
    if spacing <= 0:
        raise PreconditionViolation(_("Grid spacing must be positive, got {}").format(spacing))
    if not box:
        raise PreconditionViolation(_("Box description is empty"))
    if len(box) != space.dimension:
        raise PreconditionViolation(
            _("Box has {} intervals but {} has dimension {}").format(len(box), space.name, space.dimension)
        )
    axes = []
    for interval in box:
        if len(interval) != 2:
            raise PreconditionViolation(_("Box interval must be a [lo, hi] pair, got {!r}").format(interval))
        axes.append(_axis(interval[0], interval[1], spacing))
    return FiniteList(space, [space.point(*coords) for coords in itertools.product(*axes)])


def normalize_box(box):
    """The box as a tuple of (lo, hi) Fraction pairs."""
    return tuple((parse_rat(lo), parse_rat(hi)) for lo, hi in box)


def box_gap(box, row):
    """Sup distance from the rational point ``row`` to ``box``."""
    return max(max(lo - c, c - hi, 0) for (lo, hi), c in zip(box, row))


def clip_box(box, row, reach):
    """``box`` cut down to the cube of half side ``reach`` around ``row``; None if they are disjoint."""
    clipped = tuple((max(lo, c - reach), min(hi, c + reach)) for (lo, hi), c in zip(box, row))
    if any(lo > hi for lo, hi in clipped):
        return None
    return clipped


def _contains(outer, inner):
    return all(a <= c and d <= b for (a, b), (c, d) in zip(outer, inner))


def merge_boxes(boxes):
    """
    A shorter list of boxes with the same union.

    Boxes agreeing on every axis but one are joined when their intervals on that axis meet,
    and boxes inside another one are dropped.
    """
    boxes = list(dict.fromkeys(normalize_box(box) for box in boxes))
    if len(boxes) < 2:
        return boxes
    dimension = len(boxes[0])
    changed = True
    while changed:
        changed = False
        for axis in range(dimension):
            groups = {}
            for box in boxes:
                groups.setdefault(box[:axis] + box[axis + 1 :], []).append(box[axis])
            merged = []
            for rest, intervals in groups.items():
                intervals.sort()
                runs = [list(intervals[0])]
                for lo, hi in intervals[1:]:
                    if lo <= runs[-1][1]:
                        runs[-1][1] = max(runs[-1][1], hi)
                    else:
                        runs.append([lo, hi])
                merged.extend(rest[:axis] + ((lo, hi),) + rest[axis:] for lo, hi in runs)
            if len(merged) < len(boxes):
                changed = True
            boxes = merged
        kept = [box for box in boxes if not any(other != box and _contains(other, box) for other in boxes)]
        if len(kept) < len(boxes):
            changed = True
            boxes = kept
    return boxes
