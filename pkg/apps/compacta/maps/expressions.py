#!/usr/bin/env python
# -*- coding:utf-8 -*-
# project : compacta
# filename : expressions
# author : ly_13
# date : 3/7/2025

"""
The JSON function language of the command line.

An expression is a dict such as ``{"op": "scale", "factor": "2", "args": [{"op": "var"}]}``;
a list of expressions is a map into R^k under the sup metric. Every atom is 1-Lipschitz and
scalings multiply the bound, so ``lipschitz_bound`` gives a sound constant for any tree.
"""

from fractions import Fraction
from typing import Callable, List

from django.db.models import TextChoices
from django.utils.translation import gettext_lazy as _

from apps.compacta.arith import CReal, creal_arith, creal_max, creal_min, creal_of_rat, parse_rat
from apps.compacta.exceptions import PreconditionViolation
from apps.compacta.maps.base import EffectiveMap
from apps.compacta.metric.spaces import Point, RealSpace, real_box_space, real_line

__all__ = ["ExpressionOp", "ExpressionError", "validate_expression", "lipschitz_bound", "compile_expression"]


class ExpressionOp(TextChoices):
    var = "var", _("Coordinate")
    const = "const", _("Constant")
    add = "add", _("Sum")
    sub = "sub", _("Difference")
    min = "min", _("Minimum")
    max = "max", _("Maximum")
    abs = "abs", _("Absolute value")
    scale = "scale", _("Rational scaling")
    dist_to = "dist_to", _("Distance to a point")


_ARGS = {
    ExpressionOp.var: (0, 0),
    ExpressionOp.const: (0, 0),
    ExpressionOp.dist_to: (0, 0),
    ExpressionOp.add: (2, 2),
    ExpressionOp.sub: (2, 2),
    ExpressionOp.abs: (1, 1),
    ExpressionOp.scale: (1, 1),
    ExpressionOp.min: (1, None),
    ExpressionOp.max: (1, None),
}


class ExpressionError(PreconditionViolation):
    default_code = "invalid_expression"

    def __init__(self, detail, pointer=""):
        self.pointer = pointer
        super().__init__(detail=detail)

    def as_dict(self):
        data = super().as_dict()
        data["pointer"] = self.pointer
        return data


def _rational(node, key, pointer):
    try:
        return parse_rat(node.get(key))
    except PreconditionViolation as e:
        raise ExpressionError(e.detail, f"{pointer}/{key}") from e


def _validate(node, dimension: int, pointer: str):
    if not isinstance(node, dict):
        raise ExpressionError(_("Expected an expression object"), pointer)
    op = node.get("op")
    if op not in ExpressionOp.values:
        raise ExpressionError(_("Unknown operation {!r}").format(op), f"{pointer}/op")
    op = ExpressionOp(op)
    args = node.get("args", [])
    if not isinstance(args, list):
        raise ExpressionError(_("args must be a list"), f"{pointer}/args")
    least, most = _ARGS[op]
    if len(args) < least or (most is not None and len(args) > most):
        expected = least if least == most else f"at least {least}"
        raise ExpressionError(
            _("{} takes {} arguments, got {}").format(op.value, expected, len(args)), f"{pointer}/args"
        )

    if op == ExpressionOp.var:
        index = node.get("index", 0)
        if isinstance(index, bool) or not isinstance(index, int) or not 0 <= index < dimension:
            raise ExpressionError(_("Coordinate index must lie in [0, {})").format(dimension), f"{pointer}/index")
    elif op == ExpressionOp.const:
        _rational(node, "value", pointer)
    elif op == ExpressionOp.scale:
        _rational(node, "factor", pointer)
    elif op == ExpressionOp.dist_to:
        point = node.get("point")
        if not isinstance(point, list) or len(point) != dimension:
            raise ExpressionError(_("dist_to needs a point with {} coordinates").format(dimension), f"{pointer}/point")
        for i, value in enumerate(point):
            try:
                parse_rat(value)
            except PreconditionViolation as e:
                raise ExpressionError(e.detail, f"{pointer}/point/{i}") from e

    for i, arg in enumerate(args):
        _validate(arg, dimension, f"{pointer}/args/{i}")


def validate_expression(expression, dimension: int, pointer: str = ""):
    """Raises ExpressionError with a JSON pointer to the first bad node."""
    if isinstance(expression, list):
        if not expression:
            raise ExpressionError(_("A map into R^k needs at least one component"), pointer)
        for i, node in enumerate(expression):
            _validate(node, dimension, f"{pointer}/{i}")
    else:
        _validate(expression, dimension, pointer)


def _bound(node) -> Fraction:
    op = ExpressionOp(node["op"])
    args = node.get("args", [])
    if op in (ExpressionOp.var, ExpressionOp.dist_to):
        return Fraction(1)
    if op == ExpressionOp.const:
        return Fraction(0)
    if op in (ExpressionOp.add, ExpressionOp.sub):
        return _bound(args[0]) + _bound(args[1])
    if op in (ExpressionOp.min, ExpressionOp.max):
        return max(_bound(arg) for arg in args)
    if op == ExpressionOp.abs:
        return _bound(args[0])
    return abs(parse_rat(node["factor"])) * _bound(args[0])


def lipschitz_bound(expression) -> Fraction:
    """Lipschitz constant for the sup metric on both sides."""
    if isinstance(expression, list):
        return max(_bound(node) for node in expression)
    return _bound(expression)


def _compile(node, domain: RealSpace) -> Callable[[Point], CReal]:
    op = ExpressionOp(node["op"])
    args = [_compile(arg, domain) for arg in node.get("args", [])]
    if op == ExpressionOp.var:
        index = node.get("index", 0)
        return lambda x: x.coords[index]
    if op == ExpressionOp.const:
        value = creal_of_rat(node["value"])
        return lambda x: value
    if op == ExpressionOp.dist_to:
        anchor = domain.point(*node["point"])
        return lambda x: domain.dist(x, anchor)
    if op in (ExpressionOp.add, ExpressionOp.sub):
        left, right = args
        return lambda x: creal_arith(op.value, [left(x), right(x)])
    if op == ExpressionOp.min:
        return lambda x: creal_min(*(arg(x) for arg in args))
    if op == ExpressionOp.max:
        return lambda x: creal_max(*(arg(x) for arg in args))
    (inner,) = args
    if op == ExpressionOp.abs:
        return lambda x: abs(inner(x))
    factor = parse_rat(node["factor"])
    return lambda x: inner(x).scale(factor)


def compile_expression(expression, domain: RealSpace, label: str = "expression") -> EffectiveMap:
    validate_expression(expression, domain.dimension)
    if isinstance(expression, list):
        parts: List[Callable] = [_compile(node, domain) for node in expression]
        codomain = real_box_space(len(parts))
    else:
        parts = [_compile(expression, domain)]
        codomain = real_line()
    return EffectiveMap(domain, codomain, lambda x: codomain.point(*(part(x) for part in parts)), label=label)
