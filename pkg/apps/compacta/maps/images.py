#!/usr/bin/env python
# -*- coding:utf-8 -*-
# project : compacta
# filename : images
# author : ly_13
# date : 3/6/2025

from apps.common.utils import get_logger
from apps.compacta.arith import exponent_at_most, pow2
from apps.compacta.compacts import Compact
from apps.compacta.exceptions import SpaceMismatch
from apps.compacta.hausdorff import FiniteList
from apps.compacta.maps.base import EffectiveMap, ImageOracle, UniformModulus
from apps.compacta.metric.spaces import MetricSpace, Point, real_line

logger = get_logger(__name__)

__all__ = [
    "IDENTITY_MODULUS",
    "image_compact",
    "image_oracle",
    "distance_functional",
    "derive_image_oracle",
    "compose",
]

IDENTITY_MODULUS = UniformModulus(lambda compact, epsilon: epsilon, label="identity")


def image_compact(f: EffectiveMap, mu: UniformModulus, compact: Compact) -> Compact:
    """
    The image of ``compact`` under ``f``, net(n) being the f-image of a net of ``compact`` fine
    enough that mu(compact, 2^-n-1) covers twice its mesh.
    """
    if compact.space.name != f.domain.name:
        raise SpaceMismatch(f.domain.name, compact.space.name)
    if compact.finite:
        points = compact.net(0)
        return Compact(f.codomain, lambda n: FiniteList(f.codomain, [f(p) for p in points]), finite=True, label="image")

    def net(n):
        delta = mu(compact, pow2(n + 1))
        m = exponent_at_most(delta / 2)
        return FiniteList(f.codomain, [f(p) for p in compact.net(m)])

    return Compact(f.codomain, net, label="image", inner=compact.inner)


def image_oracle(f: EffectiveMap, mu: UniformModulus) -> ImageOracle:
    return ImageOracle(lambda compact: image_compact(f, mu, compact), f.domain, f.codomain, label=f.label)


def distance_functional(space: MetricSpace, anchor: Point) -> EffectiveMap:
    """y -> dist(y, anchor) as a point of the real line; 1-Lipschitz."""
    space.check(anchor)
    line = real_line()
    return EffectiveMap(space, line, lambda y: line.point(space.dist(y, anchor)), label="distance")


def derive_image_oracle(phi: EffectiveMap, oracle: ImageOracle) -> ImageOracle:
    """Image oracle of phi o f from the one of f, for a 1-Lipschitz phi."""
    if phi.domain.name != oracle.codomain.name:
        raise SpaceMismatch(oracle.codomain.name, phi.domain.name)
    return ImageOracle(
        lambda compact: image_compact(phi, IDENTITY_MODULUS, oracle.pi(compact)),
        oracle.domain,
        phi.codomain,
        label=f"{phi.label}.{oracle.label}",
    )


def compose(g: EffectiveMap, f: EffectiveMap) -> EffectiveMap:
    if g.domain.name != f.codomain.name:
        raise SpaceMismatch(f.codomain.name, g.domain.name)
    return EffectiveMap(f.domain, g.codomain, lambda x: g(f(x)), label=f"{g.label}.{f.label}")
