#!/usr/bin/env python
# -*- coding:utf-8 -*-
# project : compacta
# filename : search
# author : ly_13
# date : 3/6/2025

from typing import Callable

from django.utils.translation import gettext_lazy as _

from apps.common.utils import get_logger
from apps.compacta.arith import Verdict, approx_compare, parse_rat, pow2
from apps.compacta.budget import SearchBudget
from apps.compacta.compacts import Compact, select_point
from apps.compacta.exceptions import BudgetExceeded, PreconditionViolation
from apps.compacta.maps.base import EffectiveMap
from apps.compacta.metric.spaces import Point

logger = get_logger(__name__)

__all__ = ["search_members", "find_point_near_value"]


def search_members(compact: Compact, accept: Callable[[Point], bool], budget, label: str = "search_members") -> Point:
    """
    First member of ``compact`` accepted by ``accept``, scanning the members next to the points
    of net(1), net(2), ... in order. A finite compact is scanned once.
    """
    budget = SearchBudget.coerce(budget)
    scanned = []
    for j in budget.rounds(label):
        net = compact.net(j)
        if any(net is other for other in scanned):
            if compact.finite:
                raise BudgetExceeded(label, j)
            continue
        scanned.append(net)
        for k in range(len(net)):
            x = net[k] if compact.inner else select_point(compact, net, k, 2 * pow2(j), budget)
            if accept(x):
                logger.debug(f"{label} accepted index {k} of net {j}")
                return x


def find_point_near_value(f: EffectiveMap, compact: Compact, y: Point, epsilon, budget) -> Point:
    """A member x of ``compact`` with dist(f(x), y) < epsilon, for y a limit value of f on it."""
    epsilon = parse_rat(epsilon)
    if epsilon <= 0:
        raise PreconditionViolation(_("epsilon must be positive, got {}").format(epsilon))
    f.codomain.check(y)

    def accept(x):
        gap = f.codomain.dist(f(x), y)
        return approx_compare(gap, epsilon * 3 / 4, epsilon) == Verdict.less_than_b

    return search_members(compact, accept, budget, label="find_point_near_value")
