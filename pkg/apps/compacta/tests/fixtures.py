#!/usr/bin/env python
# -*- coding:utf-8 -*-
# project : compacta
# filename : fixtures
# author : ly_13
# date : 3/14/2025

"""
Shared builders for the test suites: random rational lists, the catalog of maps with their
reference moduli, and the compacts the extraction cells run on.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from apps.compacta.arith import CReal, dyadic_round
from apps.compacta.compacts import box_compact, compact_of_list, compact_union, net_of_box
from apps.compacta.hausdorff import FiniteList
from apps.compacta.maps import EffectiveMap, UniformModulus, image_oracle
from apps.compacta.maps.expressions import compile_expression
from apps.compacta.metric import real_box_space, real_line
from apps.compacta.services.reference import synthesize_reference_modulus

VAR = {"op": "var"}
HALF = {"op": "const", "value": "1/2"}


def rat(text) -> Fraction:
    return Fraction(text)


def dyadic(rng: random.Random, low=-8, high=8, bits=3) -> Fraction:
    scale = 2**bits
    return Fraction(rng.randint(low * scale, high * scale), scale)


def random_list(rng: random.Random, space, max_len=6) -> FiniteList:
    dimension = space.dimension
    return FiniteList(
        space, [space.point(*(dyadic(rng) for _i in range(dimension))) for _k in range(rng.randint(1, max_len))]
    )


def points(space, *values) -> FiniteList:
    if space.dimension == 1:
        return FiniteList(space, [space.point(v) for v in values])
    return FiniteList(space, [space.point(*v) for v in values])


def line_list(*values):
    return compact_of_list(points(real_line(), *values))


def _square(x: CReal) -> CReal:
    # coordinates of the test compacts stay within [-2, 2]
    if x.is_exact:
        return CReal(exact=x.exact * x.exact)
    return CReal(lambda n: dyadic_round(x.approx(n + 3) ** 2, n + 1), label="square")


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    build: Callable
    lipschitz: Fraction
    low: Fraction
    high: Fraction

    def map_on(self, space) -> EffectiveMap:
        return self.build(space)

    def reference_modulus(self) -> UniformModulus:
        bound = self.lipschitz
        return UniformModulus(lambda compact, epsilon: Fraction(1) if bound == 0 else epsilon / bound, label=self.name)

    def oracle_on(self, space):
        f = self.map_on(space)
        return f, image_oracle(f, self.reference_modulus())


def _expression(expression):
    return lambda space: compile_expression(expression, space, label=str(expression.get("op")))


def _square_map(space):
    line = real_line()
    return EffectiveMap(space, line, lambda p: line.point(_square(p.coords[0])), label="square")


# analytic ranges are over [0, 1]
CATALOG = [
    CatalogEntry("x", _expression(VAR), Fraction(1), Fraction(0), Fraction(1)),
    CatalogEntry(
        "2x", _expression({"op": "scale", "factor": "2", "args": [VAR]}), Fraction(2), Fraction(0), Fraction(2)
    ),
    CatalogEntry("x^2", _square_map, Fraction(2), Fraction(0), Fraction(1)),
    CatalogEntry(
        "|x-1/2|",
        _expression({"op": "abs", "args": [{"op": "sub", "args": [VAR, HALF]}]}),
        Fraction(1),
        Fraction(0),
        Fraction(1, 2),
    ),
    CatalogEntry(
        "min(1,2x)",
        _expression(
            {"op": "min", "args": [{"op": "const", "value": "1"}, {"op": "scale", "factor": "2", "args": [VAR]}]}
        ),
        Fraction(2),
        Fraction(0),
        Fraction(1),
    ),
    CatalogEntry("1/3", _expression({"op": "const", "value": "1/3"}), Fraction(0), Fraction(1, 3), Fraction(1, 3)),
]


def catalog(name) -> CatalogEntry:
    return next(entry for entry in CATALOG if entry.name == name)


def unit_net(spacing="1/64"):
    return net_of_box(real_line(), [("0", "1")], spacing)


def square_net(spacing="1/4"):
    return net_of_box(real_box_space(2), [("-1", "1"), ("-1", "1")], spacing)


def two_components(spacing="1/64"):
    line = real_line()
    return compact_union(net_of_box(line, [("0", "1/4")], spacing), net_of_box(line, [("3/4", "1")], spacing))


def unit_box(high="1/8"):
    return box_compact(real_line(), [("0", high)])


def two_boxes():
    line = real_line()
    return compact_union(box_compact(line, [("0", "1/16")]), box_compact(line, [("1/8", "3/16")]))


def expression_oracle(expression, space):
    f = compile_expression(expression, space)
    return f, image_oracle(f, synthesize_reference_modulus(expression))


def x_and_square_oracle(space):
    """x -> (x, x^2) into the plane, with its image oracle; Lipschitz 2 on [-1, 1]."""
    plane = real_box_space(2)

    def apply(p):
        x = p.coords[0]
        return plane.point(x, _square(x))

    f = EffectiveMap(space, plane, apply, label="x,x^2")
    return f, image_oracle(f, UniformModulus(lambda compact, epsilon: epsilon / 2, label="x,x^2"))
