#!/usr/bin/env python
# -*- coding:utf-8 -*-
# project : compacta
# filename : base
# author : ly_13
# date : 3/6/2025

import functools
from fractions import Fraction
from typing import Callable

from django.conf import settings

from apps.common.utils import get_logger
from apps.compacta.arith import parse_rat
from apps.compacta.compacts import Compact
from apps.compacta.exceptions import InvalidModulus, PreconditionViolation, SpaceMismatch
from apps.compacta.metric.spaces import MetricSpace, Point

logger = get_logger(__name__)

__all__ = ["EffectiveMap", "UniformModulus", "ImageOracle"]


def _cache_size():
    return getattr(settings, "COMPACTA_IMAGE_CACHE_SIZE", 4096)


def _value_cache_size():
    return getattr(settings, "COMPACTA_VALUE_CACHE_SIZE", 65536)


class EffectiveMap(object):
    """An everywhere defined map; values are memoized per point object, up to COMPACTA_VALUE_CACHE_SIZE."""

    def __init__(self, domain: MetricSpace, codomain: MetricSpace, apply: Callable[[Point], Point], label: str = ""):
        self.domain = domain
        self.codomain = codomain
        self.label = label
        self._apply = functools.lru_cache(maxsize=_value_cache_size())(apply)

    def __call__(self, x: Point) -> Point:
        self.domain.check(x)
        value = self._apply(x)
        if not isinstance(value, Point):
            raise PreconditionViolation(f"map {self.label} returned {value!r}")
        if value.space.name != self.codomain.name:
            raise SpaceMismatch(self.codomain.name, value.space.name)
        return value

    def __repr__(self):
        return f"<EffectiveMap {self.label} {self.domain.name} -> {self.codomain.name}>"


class UniformModulus(object):
    """delta(K, epsilon): members of K closer than delta have images closer than epsilon."""

    def __init__(self, delta: Callable[[Compact, Fraction], Fraction], label: str = ""):
        self._delta = delta
        self.label = label

    def __call__(self, compact: Compact, epsilon) -> Fraction:
        value = parse_rat(self._delta(compact, parse_rat(epsilon)))
        if value <= 0:
            raise InvalidModulus(value)
        return value

    def __repr__(self):
        return f"<UniformModulus {self.label}>"


class ImageOracle(object):
    """
    pi(K) is a compact whose members are the closure of the image of the members of K.

    Answers are cached per compact object, so repeated questions about one piece share nets.
    """

    def __init__(self, pi: Callable[[Compact], Compact], domain: MetricSpace, codomain: MetricSpace, label: str = ""):
        self.domain = domain
        self.codomain = codomain
        self.label = label
        self._pi = functools.lru_cache(maxsize=_cache_size())(pi)

    def pi(self, compact: Compact) -> Compact:
        if compact.space.name != self.domain.name:
            raise SpaceMismatch(self.domain.name, compact.space.name)
        image = self._pi(compact)
        if image.space.name != self.codomain.name:
            raise SpaceMismatch(self.codomain.name, image.space.name)
        return image

    def __repr__(self):
        return f"<ImageOracle {self.label} {self.domain.name} -> {self.codomain.name}>"
