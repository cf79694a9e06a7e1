#!/usr/bin/env python
# -*- coding:utf-8 -*-
# project : compacta
# filename : spaces
# author : ly_13
# date : 3/3/2025

import functools
from typing import Callable, Sequence

from django.conf import settings
from django.utils.translation import gettext_lazy as _

from apps.common.utils import get_logger
from apps.compacta.arith import CReal, ZERO, as_creal, creal_max
from apps.compacta.exceptions import PreconditionViolation, SpaceMismatch

logger = get_logger(__name__)

__all__ = ["Point", "MetricSpace", "RealSpace", "real_line", "real_box_space"]


class Point(object):
    """A point of one metric space. Coordinates are CReals; generic code treats them as opaque."""

    __slots__ = ("space", "coords")

    def __init__(self, space: "MetricSpace", coords: Sequence[CReal]):
        self.space = space
        self.coords = tuple(coords)

    @property
    def is_exact(self) -> bool:
        return all(c.is_exact for c in self.coords)

    def rational(self):
        """Exact coordinates as a tuple of Fractions, None if any coordinate is an oracle."""
        if not self.is_exact:
            return None
        return tuple(c.exact for c in self.coords)

    def approx(self, n: int):
        return tuple(c.approx(n) for c in self.coords)

    def __repr__(self):
        value = self.rational()
        if value is None:
            return f"<Point {self.space.name} oracle>"
        return f"<Point {self.space.name} ({', '.join(str(v) for v in value)})>"


class MetricSpace(object):
    """
    A named complete metric space.

    Subclasses implement ``_dist`` and ``limit``. Distances are cached per space in an lru
    keyed on point identity; the cache size comes from COMPACTA_METRIC_CACHE_SIZE.
    """

    name = ""

    def __init__(self, name: str, cache_size: int = None):
        self.name = name
        size = cache_size or getattr(settings, "COMPACTA_METRIC_CACHE_SIZE", 65536)
        self._dist_cached = functools.lru_cache(maxsize=size)(self._dist)

    def __repr__(self):
        return f"<{self.__class__.__name__} {self.name}>"

    def check(self, *points: Point):
        for point in points:
            if point.space.name != self.name:
                raise SpaceMismatch(self.name, point.space.name)

    def dist(self, p: Point, q: Point) -> CReal:
        self.check(p, q)
        if p is q:
            return ZERO
        return self._dist_cached(p, q)

    def _dist(self, p: Point, q: Point) -> CReal:
        raise NotImplementedError

    def limit(self, seq: Callable[[int], Point]) -> Point:
        """Limit of ``seq`` given dist(seq(k), seq(k+1)) <= 2^-k-1 for every k."""
        raise NotImplementedError

    def cache_info(self):
        return self._dist_cached.cache_info()


def _coordinate_gap(x: CReal, y: CReal) -> CReal:
    if x.is_exact and y.is_exact:
        return CReal(exact=abs(x.exact - y.exact))
    # both read one bit deeper, so the gap is symmetric and within 2^-n
    return CReal(lambda n: abs(x.approx(n + 1) - y.approx(n + 1)), label="gap")


def _limit_coordinate(seq, index):
    return CReal(lambda n: seq(n + 1).coords[index].approx(n + 1), label="limit")


class RealSpace(MetricSpace):
    """R^d under the sup metric; d = 1 is the real line."""

    def __init__(self, dimension: int, name: str = None, cache_size: int = None):
        if isinstance(dimension, bool) or not isinstance(dimension, int) or dimension < 1:
            raise PreconditionViolation(_("Dimension must be a positive integer, got {}").format(dimension))
        self.dimension = dimension
        super().__init__(name or f"R^{dimension}", cache_size=cache_size)
        size = cache_size or getattr(settings, "COMPACTA_METRIC_CACHE_SIZE", 65536)
        self._rational_point = functools.lru_cache(maxsize=size)(self._make_rational_point)

    def point(self, *coords) -> Point:
        if len(coords) == 1 and isinstance(coords[0], (list, tuple)):
            coords = tuple(coords[0])
        if len(coords) != self.dimension:
            raise PreconditionViolation(
                _("A point of {} needs {} coordinates, got {}").format(self.name, self.dimension, len(coords))
            )
        coords = [as_creal(c) for c in coords]
        if all(c.is_exact for c in coords):
            # equal rational points share one object, so identity keyed caches see them once
            return self._rational_point(tuple(c.exact for c in coords))
        return Point(self, coords)

    def _make_rational_point(self, values) -> Point:
        return Point(self, [CReal(exact=v) for v in values])

    def _dist(self, p: Point, q: Point) -> CReal:
        gaps = [_coordinate_gap(x, y) for x, y in zip(p.coords, q.coords)]
        if len(gaps) == 1:
            return gaps[0]
        return creal_max(*gaps)

    def limit(self, seq: Callable[[int], Point]) -> Point:
        return Point(self, [_limit_coordinate(seq, i) for i in range(self.dimension)])


@functools.cache
def real_line() -> RealSpace:
    return RealSpace(1, name="R")


@functools.cache
def real_box_space(dimension: int) -> RealSpace:
    return RealSpace(dimension)
