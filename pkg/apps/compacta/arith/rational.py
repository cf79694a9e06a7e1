#!/usr/bin/env python
# -*- coding:utf-8 -*-
# project : compacta
# filename : rational
# author : ly_13
# date : 3/2/2025

"""
Rational helpers. Rationals are plain ``fractions.Fraction`` values, always reduced
with a positive denominator; these functions cover parsing, dyadic bookkeeping and
rendering.
"""

import math
import numbers
from fractions import Fraction

from django.utils.translation import gettext_lazy as _

from apps.compacta.exceptions import PreconditionViolation

Rat = Fraction

__all__ = [
    "Rat",
    "parse_rat",
    "format_rat",
    "pow2",
    "ceil_log2",
    "exponent_at_most",
    "exponent_above",
    "dyadic_round",
    "render_decimal",
    "decimal_digits",
]


def parse_rat(value) -> Fraction:
    """Accepts ints, Fractions and strings such as "3", "-7/2" or "1.25"; floats are refused."""
    if isinstance(value, bool):
        raise PreconditionViolation(_("Booleans are not rationals"))
    if isinstance(value, Fraction):
        return value
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise PreconditionViolation(_("Not a rational number: {}").format(value)) from e
    raise PreconditionViolation(_("Not a rational number: {!r}").format(value))


def format_rat(q: Fraction) -> str:
    return str(Fraction(q))


def pow2(n: int) -> Fraction:
    """2^-n for any integer n."""
    if n >= 0:
        return Fraction(1, 1 << n)
    return Fraction(1 << -n)


def ceil_log2(n: int) -> int:
    """Least k >= 0 with 2^k >= n, for n >= 1."""
    if n <= 1:
        return 0
    return (n - 1).bit_length()


def exponent_at_most(q: Fraction) -> int:
    """Least m with 2^-m <= q, for q > 0."""
    q = Fraction(q)
    if q <= 0:
        raise PreconditionViolation(_("Expected a positive rational, got {}").format(q))
    m = q.denominator.bit_length() - q.numerator.bit_length()
    while pow2(m) > q:
        m += 1
    while pow2(m - 1) <= q:
        m -= 1
    return m


def exponent_above(q: Fraction) -> int:
    """Least m with 2^-m < q, for q > 0."""
    m = exponent_at_most(q)
    if pow2(m) == q:
        m += 1
    return m


def dyadic_round(q: Fraction, k: int) -> Fraction:
    """Nearest multiple of 2^-k, ties upward; moves q by at most 2^-k-1."""
    scale = pow2(-k)
    return Fraction(math.floor(q * scale + Fraction(1, 2))) / scale


def decimal_digits(n: int) -> int:
    """Decimal places needed so that half a unit in the last place is at most 2^-n."""
    if n <= 0:
        return 0
    digits = 0
    while Fraction(1, 2 * 10**digits) > pow2(n):
        digits += 1
    return digits


def render_decimal(q: Fraction, digits: int) -> str:
    """Round half away from zero to ``digits`` places, no exponent notation."""
    q = Fraction(q)
    sign = "-" if q < 0 else ""
    scaled = abs(q) * 10**digits
    units = math.floor(scaled + Fraction(1, 2))
    if units == 0:
        sign = ""
    text = str(units).rjust(digits + 1, "0")
    if digits == 0:
        return f"{sign}{text}"
    return f"{sign}{text[:-digits]}.{text[-digits:]}"
