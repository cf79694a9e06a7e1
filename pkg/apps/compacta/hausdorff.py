#!/usr/bin/env python
# -*- coding:utf-8 -*-
# project : compacta
# filename : hausdorff
# author : ly_13
# date : 3/3/2025

"""
Nonempty finite point lists and the Hausdorff distance between them.

Lists keep order and duplicates. Distances between exact points are exact, so the
lattice over rational lists is computed without any precision bookkeeping; long rational
lists of R^d go through a cell index instead of the full distance matrix.
"""

import math
from fractions import Fraction
from typing import Iterable, List, Optional

from django.utils.translation import gettext_lazy as _

from apps.compacta.arith import CReal, Verdict, ZERO, approx_compare, ceil_log2, parse_rat
from apps.compacta.exceptions import PreconditionViolation, SpaceMismatch
from apps.compacta.metric.cells import ScaledRows, greedy_cover
from apps.compacta.metric.spaces import MetricSpace, Point, RealSpace

__all__ = ["FiniteList", "list_hausdorff", "directed_distance", "concat", "thin_net"]

# below this many point pairs the plain matrix is cheaper than an index
INDEX_PAIRS = 256

_UNSET = object()


class FiniteList(object):
    __slots__ = ("space", "points", "_scaled")

    def __init__(self, space: MetricSpace, points: Iterable[Point]):
        points = tuple(points)
        if not points:
            raise PreconditionViolation(_("A point list must hold at least one point"))
        space.check(*points)
        self.space = space
        self.points = points
        self._scaled = _UNSET

    @classmethod
    def of_checked(cls, space: MetricSpace, points: Iterable[Point]) -> "FiniteList":
        """A list of points already known to belong to ``space``."""
        zeta = cls.__new__(cls)
        zeta.space = space
        zeta.points = tuple(points)
        if not zeta.points:
            raise PreconditionViolation(_("A point list must hold at least one point"))
        zeta._scaled = _UNSET
        return zeta

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, index):
        return self.points[index]

    def __repr__(self):
        return f"<FiniteList {self.space.name} len={len(self.points)}>"

    def scaled(self) -> Optional[ScaledRows]:
        """Integer rows of a list of exact points of R^d, None for oracle points or other spaces."""
        if self._scaled is _UNSET:
            scaled = None
            if isinstance(self.space, RealSpace):
                rows = [point.rational() for point in self.points]
                if all(row is not None for row in rows):
                    scaled = ScaledRows(rows)
            self._scaled = scaled
        return self._scaled

    def deduplicated(self) -> "FiniteList":
        """Drops repeated point objects and exactly equal rational points; returns self if none."""
        unique = list(dict.fromkeys(self.points))
        seen = set()
        kept: List[Point] = []
        for point in unique:
            value = point.rational()
            if value is not None:
                if value in seen:
                    continue
                seen.add(value)
            kept.append(point)
        if len(kept) == len(self.points):
            return self
        return FiniteList.of_checked(self.space, kept)


def _check_same_space(zeta: FiniteList, eta: FiniteList):
    if zeta.space.name != eta.space.name:
        raise SpaceMismatch(zeta.space.name, eta.space.name)


def _directed(matrix) -> Fraction:
    return max(min(row) for row in matrix)


def _transpose(matrix):
    return [list(column) for column in zip(*matrix)]


def _indexed_lattice(zeta: FiniteList, eta: FiniteList, both: bool) -> Optional[Fraction]:
    if len(zeta) * len(eta) <= INDEX_PAIRS:
        return None
    left, right = zeta.scaled(), eta.scaled()
    if left is None or right is None:
        return None
    denominator = math.lcm(left.denominator, right.denominator)
    left, right = left.rescaled(denominator), right.rescaled(denominator)
    value = max(right.index.nearest(row) for row in left.rows)
    if both:
        value = max(value, max(left.index.nearest(row) for row in right.rows))
    return Fraction(value, denominator)


def _lattice(zeta: FiniteList, eta: FiniteList, both: bool) -> CReal:
    indexed = _indexed_lattice(zeta, eta, both)
    if indexed is not None:
        return CReal(exact=indexed)
    space = zeta.space
    distances = [[space.dist(p, q) for q in eta] for p in zeta]
    if all(d.is_exact for row in distances for d in row):
        matrix = [[d.exact for d in row] for row in distances]
        value = _directed(matrix)
        if both:
            value = max(value, _directed(_transpose(matrix)))
        return CReal(exact=value)

    shift = ceil_log2(len(zeta) * len(eta))

    def oracle(n):
        matrix = [[d.approx(n + shift) for d in row] for row in distances]
        value = _directed(matrix)
        if both:
            value = max(value, _directed(_transpose(matrix)))
        return value

    return CReal(oracle, label="hausdorff" if both else "directed")


def list_hausdorff(zeta: FiniteList, eta: FiniteList) -> CReal:
    _check_same_space(zeta, eta)
    if zeta is eta:
        return ZERO
    return _lattice(zeta, eta, both=True)


def directed_distance(zeta: FiniteList, eta: FiniteList) -> CReal:
    """sup over points of zeta of the distance to eta."""
    _check_same_space(zeta, eta)
    if zeta is eta:
        return ZERO
    return _lattice(zeta, eta, both=False)


def concat(zeta: FiniteList, eta: FiniteList) -> FiniteList:
    _check_same_space(zeta, eta)
    return FiniteList.of_checked(zeta.space, zeta.points + eta.points)


def thin_net(zeta: FiniteList, r) -> FiniteList:
    """Greedy sublist with every point of zeta strictly within r of it."""
    r = parse_rat(r)
    if r <= 0:
        raise PreconditionViolation(_("Thinning radius must be positive, got {}").format(r))
    space = zeta.space
    scaled = zeta.scaled()
    if scaled is not None:
        # a point is covered when its distance verdict against (r/2, r) comes out below
        reach = math.floor(r * 3 / 4 * scaled.denominator)
        kept = [zeta[k] for k in greedy_cover(scaled.rows, reach)]
    else:
        kept = []
        for point in zeta:
            covered = any(approx_compare(space.dist(point, other), r / 2, r) == Verdict.less_than_b for other in kept)
            if not covered:
                kept.append(point)
    if len(kept) == len(zeta):
        return zeta
    return FiniteList.of_checked(space, kept)
