#!/usr/bin/env python
# -*- coding:utf-8 -*-
# project : compacta
# filename : cells
# author : ly_13
# date : 3/3/2025

"""
Exact range and nearest point queries on rational points of R^d under the sup metric.

Coordinates are scaled to integers over one common denominator and bucketed into cubes, so a
query only reads the cubes next to it. Every answer is exact, the cubes only decide what is read.
"""

import itertools
import math
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

__all__ = ["ScaledRows", "CellIndex", "greedy_cover"]

Row = Tuple[Fraction, ...]
IntRow = Tuple[int, ...]


def _denominator(rows: Sequence[Row]) -> int:
    denominator = 1
    for row in rows:
        for value in row:
            if denominator % value.denominator:
                denominator = math.lcm(denominator, value.denominator)
    return denominator


def _sup(left: IntRow, right: IntRow) -> int:
    return max(abs(a - b) for a, b in zip(left, right))


class CellIndex(object):
    """Integer rows bucketed into cubes of side ``side``."""

    def __init__(self, rows: Sequence[IntRow], side: int):
        self.rows = rows
        self.side = max(1, int(side))
        self.cells: Dict[IntRow, List[int]] = {}
        for index, row in enumerate(rows):
            self.cells.setdefault(self.key(row), []).append(index)

    @classmethod
    def spread_over(cls, rows: Sequence[IntRow]) -> "CellIndex":
        """About one row per cube."""
        dimension = len(rows[0])
        extent = max(max(row[i] for row in rows) - min(row[i] for row in rows) for i in range(dimension))
        per_axis = max(1, math.ceil(len(rows) ** (1 / dimension)))
        return cls(rows, extent // per_axis)

    def key(self, row) -> IntRow:
        return tuple(v // self.side for v in row)

    def in_box(self, low: IntRow, high: IntRow) -> List[int]:
        """Sorted indices of the rows with low <= row <= high coordinatewise."""
        first, last = self.key(low), self.key(high)
        spans = [range(a, b + 1) for a, b in zip(first, last)]
        if any(len(span) == 0 for span in spans):
            return []
        if math.prod(len(span) for span in spans) > len(self.cells):
            keys = [key for key in self.cells if all(a <= k <= b for k, a, b in zip(key, first, last))]
        else:
            keys = itertools.product(*spans)
        found = []
        for key in keys:
            for index in self.cells.get(key, ()):
                if all(a <= v <= b for v, a, b in zip(self.rows[index], low, high)):
                    found.append(index)
        found.sort()
        return found

    def _ring(self, home: IntRow, radius: int):
        if radius == 0:
            yield home
            return
        dimension = len(home)
        # the face at +-radius on one axis, earlier axes strictly inside so no cube comes twice
        for axis in range(dimension):
            spans = [range(-radius + 1, radius)] * axis + [range(-radius, radius + 1)] * (dimension - axis - 1)
            for side in (-radius, radius):
                for rest in itertools.product(*spans):
                    offset = rest[:axis] + (side,) + rest[axis:]
                    yield tuple(h + o for h, o in zip(home, offset))

    def nearest(self, row: IntRow) -> int:
        """Least sup distance from ``row`` to an indexed row."""
        home = self.key(row)
        best: Optional[int] = None
        radius = 0
        while True:
            if (2 * radius + 1) ** len(row) > len(self.cells):
                # the ring outgrew the occupied cubes, read everything once
                return min(_sup(other, row) for other in self.rows)
            for key in self._ring(home, radius):
                for index in self.cells.get(key, ()):
                    distance = _sup(self.rows[index], row)
                    if best is None or distance < best:
                        best = distance
            # unread cubes lie further than radius * side
            if best is not None and best <= radius * self.side:
                return best
            radius += 1


class ScaledRows(object):
    """Rational rows as integers over ``denominator``, with a lazily built CellIndex."""

    def __init__(self, rows: Sequence[Row], denominator: int = None):
        self.source = rows
        self.denominator = denominator or _denominator(rows)
        self.rows: List[IntRow] = [
            tuple(v.numerator * (self.denominator // v.denominator) for v in row) for row in rows
        ]
        self._index: Optional[CellIndex] = None

    @property
    def index(self) -> CellIndex:
        if self._index is None:
            self._index = CellIndex.spread_over(self.rows)
        return self._index

    def rescaled(self, denominator: int) -> "ScaledRows":
        if denominator == self.denominator:
            return self
        return ScaledRows(self.source, denominator)

    def within(self, centre: Row, radius: Fraction) -> List[int]:
        """Sorted indices of the rows at sup distance at most ``radius`` from ``centre``."""
        low = tuple(math.ceil((c - radius) * self.denominator) for c in centre)
        high = tuple(math.floor((c + radius) * self.denominator) for c in centre)
        return self.index.in_box(low, high)


def greedy_cover(rows: Sequence[IntRow], reach: int) -> List[int]:
    """
    Indices kept by a greedy pass: a row is kept unless an earlier kept row lies within sup
    distance ``reach`` of it.
    """
    side = max(1, reach)
    kept: List[int] = []
    cells: Dict[IntRow, List[int]] = {}
    offsets = list(itertools.product((-1, 0, 1), repeat=len(rows[0]))) if rows else []
    for index, row in enumerate(rows):
        key = tuple(v // side for v in row)
        covered = False
        for offset in offsets:
            for other in cells.get(tuple(k + o for k, o in zip(key, offset)), ()):
                if _sup(rows[other], row) <= reach:
                    covered = True
                    break
            if covered:
                break
        if not covered:
            kept.append(index)
            cells.setdefault(key, []).append(index)
    return kept
