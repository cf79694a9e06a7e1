#!/usr/bin/env python
# -*- coding:utf-8 -*-
# project : compacta
# filename : incidence
# author : ly_13
# date : 3/4/2025

"""
Majorization, membership and point selection.

Inclusion of compacts cannot be decided, so ``majorizes`` and ``is_member`` return a verdict
resolved at an explicit tolerance. The selection operations return actual members, built as
limits of chains through finer and finer nets.
"""

import threading
from fractions import Fraction
from typing import List, Tuple

from django.db.models import TextChoices
from django.utils.translation import gettext_lazy as _

from apps.common.utils import get_logger
from apps.compacta.arith import (
    Verdict,
    approx_compare,
    exponent_above,
    exponent_at_most,
    lower_bound_positive,
    parse_rat,
    pow2,
)
from apps.compacta.budget import SearchBudget
from apps.compacta.compacts.base import Compact, compact_dist, compact_of_list, compact_union
from apps.compacta.exceptions import BudgetExceeded, PreconditionViolation
from apps.compacta.hausdorff import FiniteList, concat
from apps.compacta.metric.spaces import Point

logger = get_logger(__name__)

__all__ = [
    "Component",
    "majorizes",
    "is_member",
    "nearest_index",
    "select_point",
    "component_select",
    "some_member",
    "member_net",
]


class Component(TextChoices):
    first = "First", _("First component")
    second = "Second", _("Second component")


def _positive(value, name) -> Fraction:
    value = parse_rat(value)
    if value <= 0:
        raise PreconditionViolation(_("{} must be positive, got {}").format(name, value))
    return value


def majorizes(smaller: Compact, larger: Compact, tol) -> Verdict:
    """LessThanB affirms smaller <= larger at resolution tol, GreaterThanA refutes it at tol/2."""
    tol = _positive(tol, "tol")
    defect = compact_dist(compact_union(smaller, larger), larger)
    return approx_compare(defect, tol / 2, tol)


def is_member(x: Point, compact: Compact, tol) -> Verdict:
    return majorizes(compact_of_list(FiniteList(compact.space, [x])), compact, tol)


def nearest_index(x: Point, compact: Compact, zeta: FiniteList, epsilon, budget=64) -> int:
    """
    First index k (0-based) with dist(x, zeta[k]) < epsilon.

    Round j accepts a point verified below epsilon with slack epsilon*2^-j, so a point
    strictly inside the ball is found once the slack drops under its margin.
    """
    epsilon = _positive(epsilon, "epsilon")
    compact.space.check(x)
    budget = SearchBudget.coerce(budget)
    row, scaled = x.rational(), zeta.scaled()
    if row is not None and scaled is not None:
        # only points within epsilon can pass a round
        candidates = scaled.within(row, epsilon)
    else:
        candidates = range(len(zeta))
    distances = [(k, compact.space.dist(x, zeta[k])) for k in candidates]
    for j in budget.rounds("nearest_index"):
        low = epsilon - epsilon * pow2(j)
        for k, distance in distances:
            if approx_compare(distance, low, epsilon) == Verdict.less_than_b:
                return k


def _nearest_list_point(compact: Compact, target: Point, epsilon: Fraction, budget: SearchBudget) -> Point:
    points = compact.net(0)
    index = nearest_index(target, compact, points, epsilon, budget)
    return points[index]


def _inner_point(compact: Compact, target: Point, epsilon: Fraction, budget: SearchBudget) -> Point:
    """A point of a finer and finer net within epsilon of target; inner nets hold members only."""
    space = compact.space
    row = target.rational()
    base = exponent_at_most(epsilon)
    for j in budget.rounds("select_point"):
        net = compact.net(base + j)
        scaled = net.scaled() if row is not None else None
        candidates = scaled.within(row, epsilon) if scaled is not None else range(len(net))
        low = epsilon - epsilon * pow2(j)
        for k in candidates:
            if approx_compare(space.dist(target, net[k]), low, epsilon) == Verdict.less_than_b:
                return net[k]


class _Chain(object):
    """x_1 in net(m), then x_l+1 in net(m+l) verified within 4*2^-m-l of x_l."""

    def __init__(self, compact: Compact, first: Point, m: int):
        self.compact = compact
        self.m = m
        self.points: List[Point] = [first]
        self._locker = threading.Lock()

    def link(self, index: int) -> Point:
        with self._locker:
            while len(self.points) < index:
                self.points.append(self._next(len(self.points)))
            return self.points[index - 1]

    def _next(self, level: int) -> Point:
        previous = self.points[-1]
        space = self.compact.space
        scale = pow2(self.m + level)
        for candidate in self.compact.net(self.m + level):
            if approx_compare(space.dist(previous, candidate), 3 * scale, 4 * scale) == Verdict.less_than_b:
                return candidate
        raise BudgetExceeded("select_point.chain", level)

    def term(self, k: int) -> Point:
        # dist(term(k), term(k+1)) <= 2^-k-1
        return self.link(max(1, k - self.m + 3))


def select_point(compact: Compact, zeta: FiniteList, k: int, epsilon, budget=64) -> Point:
    """
    A member of ``compact`` within epsilon of zeta[k], given h(compact, zeta) < epsilon.

    Finite compacts return a list point directly (the constant chain), and compacts whose nets
    hold members only return a net point.
    """
    epsilon = _positive(epsilon, "epsilon")
    if not 0 <= k < len(zeta):
        raise PreconditionViolation(_("Index {} out of range for a list of {} points").format(k, len(zeta)))
    budget = SearchBudget.coerce(budget)
    target = zeta[k]
    space = compact.space
    if compact.finite:
        return _nearest_list_point(compact, target, epsilon, budget)
    if compact.inner:
        return _inner_point(compact, target, epsilon, budget)

    spread = compact_dist(compact, compact_of_list(zeta))
    margin = lower_bound_positive(epsilon - spread, budget)
    m = exponent_at_most(margin / 8)
    scale = pow2(m)
    first = None
    for candidate in compact.net(m):
        if approx_compare(space.dist(candidate, target) - spread, scale, 2 * scale) == Verdict.less_than_b:
            first = candidate
            break
    if first is None:
        raise BudgetExceeded("select_point", 1)
    chain = _Chain(compact, first, m)
    logger.debug(f"select_point chain from precision {m} for index {k}")
    return space.limit(chain.term)


def component_select(x: Point, first: Compact, second: Compact, epsilon, budget=64) -> Tuple[Component, Point]:
    epsilon = _positive(epsilon, "epsilon")
    budget = SearchBudget.coerce(budget)
    n = exponent_above(epsilon / 2)
    left, right = first.net(n), second.net(n)
    both = concat(left, right)
    index = nearest_index(x, compact_union(first, second), both, epsilon / 2, budget)
    if index < len(left):
        return Component.first, select_point(first, left, index, epsilon / 2, budget)
    return Component.second, select_point(second, right, index - len(left), epsilon / 2, budget)


def some_member(compact: Compact, budget=64) -> Point:
    net = compact.net(0)
    if compact.inner:
        return net[0]
    return select_point(compact, net, 0, 2, budget)


def member_net(compact: Compact, radius, budget=64) -> FiniteList:
    """Members of ``compact`` forming a list within Hausdorff distance ``radius`` of it."""
    radius = _positive(radius, "radius")
    if compact.finite:
        return compact.net(0)
    if compact.inner:
        return compact.net(exponent_at_most(radius))
    p = exponent_at_most(radius / 4)
    net = compact.net(p)
    return FiniteList(compact.space, [select_point(compact, net, k, radius / 2, budget) for k in range(len(net))])
