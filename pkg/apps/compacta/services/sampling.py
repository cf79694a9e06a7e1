#!/usr/bin/env python
# -*- coding:utf-8 -*-
# project : compacta
# filename : sampling
# author : ly_13
# date : 3/12/2025

"""
Post hoc soundness checks of a modulus: random member pairs closer than delta must have
images closer than epsilon.

The first point of a pair comes from a pool of members. The second one is a pool member close
to it, or, when the first point lies in a box of the compact, a point of that box at a random
rational offset below delta. Finite compacts only have their own points to offer, so below
their mesh every pair is a point with itself.
"""

import random
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple

from django.utils.translation import gettext_lazy as _

from apps.common.utils import get_logger
from apps.compacta.arith import Verdict, approx_compare, format_rat, parse_rat, pow2
from apps.compacta.compacts import Compact, member_net
from apps.compacta.exceptions import PreconditionViolation
from apps.compacta.hausdorff import FiniteList
from apps.compacta.maps import EffectiveMap
from apps.compacta.metric.nets import box_gap
from apps.compacta.metric.spaces import Point

logger = get_logger(__name__)

__all__ = ["member_pool", "sample_member_pairs", "check_soundness"]

# slack on the image side of a sampled pair
SOUNDNESS_SLACK = pow2(20)

# mesh of the member pool of an oracle compact
POOL_MESH = pow2(6)

# offsets are multiples of 3/4 delta / OFFSET_STEPS
OFFSET_STEPS = 1024


def member_pool(compact: Compact, budget=64) -> FiniteList:
    """The members the first point of a pair is drawn from."""
    if compact.finite:
        return compact.net(0)
    return member_net(compact, POOL_MESH, budget)


def _boxes(compact: Compact):
    return [part.box for part in (compact.parts or (compact,)) if part.box is not None]


def _close(space, x, y, delta) -> bool:
    return approx_compare(space.dist(x, y), delta / 2, delta) == Verdict.less_than_b


def _offset_point(space, box, row, delta, rng: random.Random) -> Point:
    reach = delta * 3 / 4
    coords = []
    for (lo, hi), c in zip(box, row):
        value = c + reach * Fraction(rng.randint(-OFFSET_STEPS, OFFSET_STEPS), OFFSET_STEPS)
        coords.append(min(hi, max(lo, value)))
    return space.point(*coords)


def _neighbours(pool: FiniteList, i: int, delta: Fraction) -> List[int]:
    space = pool.space
    row, scaled = pool[i].rational(), pool.scaled()
    candidates = scaled.within(row, delta) if row is not None and scaled is not None else range(len(pool))
    return [j for j in candidates if _close(space, pool[i], pool[j], delta)]


def sample_member_pairs(compact: Compact, delta, samples: int, seed: int, budget=64) -> Iterator[Tuple[Point, Point]]:
    """
    ``samples`` pairs (x, x') of members closer than delta, x uniform over the pool.

    x' is drawn from the box holding x when there is one, otherwise uniformly among the pool
    members verified closer than delta to x (x itself included).
    """
    delta = parse_rat(delta)
    if delta <= 0:
        raise PreconditionViolation(_("delta must be positive, got {}").format(delta))
    if samples < 1:
        raise PreconditionViolation(_("At least one sample is needed, got {}").format(samples))
    pool = member_pool(compact, budget)
    space = compact.space
    boxes = _boxes(compact)
    neighbours = {}
    homes = {}
    rng = random.Random(seed)
    for _round in range(samples):
        i = rng.randrange(len(pool))
        x = pool[i]
        if i not in homes:
            homes[i] = _home_box(boxes, x.rational())
        home = homes[i]
        if home is not None:
            yield x, _offset_point(space, home, x.rational(), delta, rng)
            continue
        if i not in neighbours:
            neighbours[i] = _neighbours(pool, i, delta)
        yield x, pool[rng.choice(neighbours[i])]


def _home_box(boxes, row) -> Optional[tuple]:
    if row is None:
        return None
    return next((box for box in boxes if box_gap(box, row) == 0), None)


def check_soundness(f: EffectiveMap, compact: Compact, delta, epsilon, samples: int, seed: int, budget=64) -> dict:
    epsilon = parse_rat(epsilon)
    bound = epsilon + SOUNDNESS_SLACK
    violations = distinct = pairs = 0
    largest = Fraction(0)
    for x, y in sample_member_pairs(compact, delta, samples, seed, budget):
        pairs += 1
        if x is not y:
            distinct += 1
        gap = f.codomain.dist(f(x), f(y))
        largest = max(largest, gap.approx(30))
        if approx_compare(gap, bound, bound + SOUNDNESS_SLACK) == Verdict.greater_than_a:
            violations += 1
            logger.warning(f"soundness violation: images {format_rat(gap.approx(30))} apart with delta {delta}")
    return {"pairs": pairs, "violations": violations, "distinct": distinct, "max_gap": format_rat(largest)}
