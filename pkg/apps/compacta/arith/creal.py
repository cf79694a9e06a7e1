#!/usr/bin/env python
# -*- coding:utf-8 -*-
# project : compacta
# filename : creal
# author : ly_13
# date : 3/2/2025

import math
from fractions import Fraction
from typing import Callable, Sequence

from django.db.models import TextChoices
from django.utils.translation import gettext_lazy as _

from apps.common.base.magic import MagicCacheData
from apps.compacta.arith.rational import (
    ceil_log2,
    decimal_digits,
    dyadic_round,
    exponent_above,
    format_rat,
    parse_rat,
    pow2,
    render_decimal,
)
from apps.compacta.budget import SearchBudget
from apps.compacta.exceptions import ArityMismatch, PreconditionViolation

__all__ = [
    "Verdict",
    "ArithOp",
    "CReal",
    "creal_of_rat",
    "as_creal",
    "creal_arith",
    "creal_min",
    "creal_max",
    "approx_compare",
    "lower_bound_positive",
    "render_creal",
    "ZERO",
]


class Verdict(TextChoices):
    greater_than_a = "GreaterThanA", _("x > a")
    less_than_b = "LessThanB", _("x < b")


class ArithOp(TextChoices):
    add = "add", _("Sum")
    sub = "sub", _("Difference")
    neg = "neg", _("Negation")
    abs = "abs", _("Absolute value")
    min = "min", _("Minimum")
    max = "max", _("Maximum")
    scale_by_rat = "scale_by_rat", _("Rational scaling")


class CReal(object):
    """
    A real number given by ``approx(n)``, a rational within 2^-n of it for every integer n.

    Rational constants keep their exact value, operations on exact operands return exact
    results, so metric computations on rational points never go through the oracle path.
    """

    def __init__(self, oracle: Callable[[int], Fraction] = None, exact: Fraction = None, label: str = ""):
        if oracle is None and exact is None:
            raise PreconditionViolation(_("A real needs an oracle or an exact value"))
        self._oracle = oracle
        self.exact = Fraction(exact) if exact is not None else None
        self.label = label

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    def approx(self, n: int) -> Fraction:
        if self.exact is not None:
            return self.exact
        return self._approx(int(n))

    @MagicCacheData.make_cache()
    def _approx(self, n: int) -> Fraction:
        return Fraction(self._oracle(n))

    def __repr__(self):
        if self.exact is not None:
            return f"<CReal {self.exact}>"
        return f"<CReal {self.label or 'oracle'}>"

    def __add__(self, other):
        return creal_arith(ArithOp.add, [self, as_creal(other)])

    def __radd__(self, other):
        return creal_arith(ArithOp.add, [as_creal(other), self])

    def __sub__(self, other):
        return creal_arith(ArithOp.sub, [self, as_creal(other)])

    def __rsub__(self, other):
        return creal_arith(ArithOp.sub, [as_creal(other), self])

    def __neg__(self):
        return creal_arith(ArithOp.neg, [self])

    def __abs__(self):
        return creal_arith(ArithOp.abs, [self])

    def scale(self, factor) -> "CReal":
        return creal_arith(ArithOp.scale_by_rat, [self], factor=factor)


def creal_of_rat(q) -> CReal:
    return CReal(exact=parse_rat(q))


def as_creal(value) -> CReal:
    if isinstance(value, CReal):
        return value
    return creal_of_rat(value)


ZERO = creal_of_rat(0)

_ARITY = {
    ArithOp.add: 2,
    ArithOp.sub: 2,
    ArithOp.neg: 1,
    ArithOp.abs: 1,
    ArithOp.scale_by_rat: 1,
}


def _round_sum(n, values):
    return dyadic_round(sum(values, Fraction(0)), n + 1)


def creal_arith(op, args: Sequence[CReal], factor=None) -> CReal:
    """
    Builds the CReal for ``op`` applied to ``args``.

    Sums query their operands two bits deeper and round to a multiple of 2^-n-1, which keeps
    denominators small and the total error under 2^-n. min, max, neg and abs are exact on
    approximations. ``scale_by_rat`` needs ``factor``.
    """
    op = ArithOp(op)
    args = list(args)
    expected = _ARITY.get(op)
    if expected is None:
        if len(args) < 1:
            raise ArityMismatch(op.value, ">= 1", len(args))
    elif len(args) != expected:
        raise ArityMismatch(op.value, expected, len(args))
    if op == ArithOp.scale_by_rat:
        if factor is None:
            raise ArityMismatch(op.value, "1 and a factor", len(args))
        factor = parse_rat(factor)
    elif factor is not None:
        raise PreconditionViolation(_("Only scale_by_rat takes a factor"))

    if all(x.is_exact for x in args):
        values = [x.exact for x in args]
        if op == ArithOp.add:
            return CReal(exact=values[0] + values[1])
        if op == ArithOp.sub:
            return CReal(exact=values[0] - values[1])
        if op == ArithOp.neg:
            return CReal(exact=-values[0])
        if op == ArithOp.abs:
            return CReal(exact=abs(values[0]))
        if op == ArithOp.min:
            return CReal(exact=min(values))
        if op == ArithOp.max:
            return CReal(exact=max(values))
        return CReal(exact=values[0] * factor)

    if op == ArithOp.add:
        x, y = args
        return CReal(lambda n: _round_sum(n, (x.approx(n + 2), y.approx(n + 2))), label="add")
    if op == ArithOp.sub:
        x, y = args
        return CReal(lambda n: _round_sum(n, (x.approx(n + 2), -y.approx(n + 2))), label="sub")
    if op == ArithOp.neg:
        (x,) = args
        return CReal(lambda n: -x.approx(n), label="neg")
    if op == ArithOp.abs:
        (x,) = args
        return CReal(lambda n: abs(x.approx(n)), label="abs")
    if op == ArithOp.min:
        return CReal(lambda n: min(x.approx(n) for x in args), label="min")
    if op == ArithOp.max:
        return CReal(lambda n: max(x.approx(n) for x in args), label="max")

    (x,) = args
    if factor == 0:
        return CReal(exact=0)
    k = ceil_log2(math.ceil(abs(factor)))
    return CReal(lambda n: dyadic_round(x.approx(n + k + 2) * factor, n + 1), label="scale")


def creal_min(*args: CReal) -> CReal:
    return creal_arith(ArithOp.min, args)


def creal_max(*args: CReal) -> CReal:
    return creal_arith(ArithOp.max, args)


def approx_compare(x: CReal, a, b) -> Verdict:
    """
    The dichotomy for a < b: returns a verdict that is true of x.

    x is read at the first precision n with 2^-n < (b - a)/4 and compared with the midpoint,
    GreaterThanA when strictly above it. Rational x is compared exactly by the same rule.
    """
    a, b = parse_rat(a), parse_rat(b)
    if a >= b:
        raise PreconditionViolation(_("approx_compare needs a < b, got a={} b={}").format(a, b))
    middle = (a + b) / 2
    if x.is_exact:
        value = x.exact
    else:
        value = x.approx(exponent_above((b - a) / 4))
    if value > middle:
        return Verdict.greater_than_a
    return Verdict.less_than_b


def lower_bound_positive(x: CReal, budget) -> Fraction:
    """A rational r with 0 < r < x, found by reading x at 0, 1, 2, ... until it clears 2^-n+1."""
    if x.is_exact:
        if x.exact <= 0:
            raise PreconditionViolation(_("Expected a positive real, got {}").format(x.exact))
        return x.exact / 2
    budget = SearchBudget.coerce(budget)
    for n in budget.rounds("lower_bound_positive"):
        value = x.approx(n)
        if value > 2 * pow2(n):
            return (value - pow2(n)) / 2


def render_creal(x: CReal, n: int) -> dict:
    """
    x read at precision n: the rational approximation, its decimal rendering and a bound on
    the distance from the decimal to x.
    """
    value = x.approx(n)
    decimal = render_decimal(value, decimal_digits(n))
    error = abs(Fraction(decimal) - value)
    if not x.is_exact:
        error += pow2(n)
    return {"rational": format_rat(value), "decimal": decimal, "error": format_rat(error), "exact": x.is_exact}
