#!/usr/bin/env python
# -*- coding:utf-8 -*-
# project : compacta
# filename : uniform
# author : ly_13
# date : 3/10/2025

"""
Uniform continuity moduli from an image oracle alone.

For a real valued f the modulus is built by induction on the oscillation level: two peak
moduli handle the members near the top, the remaining pieces have a lower level and recurse.
Maps into R^k go through the distance functionals to a finite list of image points.
"""

import itertools
from fractions import Fraction
from typing import Optional

from django.utils.translation import gettext_lazy as _

from apps.common.utils import get_logger
from apps.compacta.arith import CReal, Verdict, approx_compare, exponent_at_most, parse_rat
from apps.compacta.budget import SearchBudget
from apps.compacta.compacts import Compact, SplitTag, ball_split, member_net, sup_inf
from apps.compacta.exceptions import EmptyPiece, PreconditionViolation
from apps.compacta.hausdorff import thin_net
from apps.compacta.maps import EffectiveMap, ImageOracle, compose, derive_image_oracle, distance_functional
from apps.compacta.modulus.certificate import check_real_valued
from apps.compacta.modulus.peak import peak_modulus
from apps.compacta.modulus.trace import ModulusTrace

logger = get_logger(__name__)

__all__ = ["oscillation_level", "uniform_modulus_real", "uniform_modulus"]

LEVEL_STEPS = 60


def oscillation_level(oscillation: CReal, epsilon: Fraction, cap: Optional[int] = None) -> int:
    """Least n verifying oscillation < (n+1)*epsilon/60, or ``cap`` when that is smaller."""
    step = epsilon / LEVEL_STEPS
    levels = range(cap) if cap is not None else itertools.count()
    for n in levels:
        if approx_compare(oscillation, n * step, (n + 1) * step) == Verdict.less_than_b:
            return n
    return cap


def _positive(epsilon) -> Fraction:
    epsilon = parse_rat(epsilon)
    if epsilon <= 0:
        raise PreconditionViolation(_("epsilon must be positive, got {}").format(epsilon))
    return epsilon


def uniform_modulus_real(
    f: EffectiveMap, oracle: ImageOracle, compact: Compact, epsilon, budget, trace: ModulusTrace = None
) -> Fraction:
    check_real_valued(f)
    epsilon = _positive(epsilon)
    budget = SearchBudget.coerce(budget)
    delta = _inductive_modulus(f, oracle, compact, epsilon, budget, None, 0, trace)
    logger.info(f"uniform modulus for epsilon {epsilon}: delta {delta}")
    return delta


def _inductive_modulus(f, oracle, compact, epsilon, budget, cap, depth, trace) -> Fraction:
    top, bottom = sup_inf(oracle.pi(compact))
    level = oscillation_level(top - bottom, epsilon, cap)
    if level == 0:
        if trace is not None:
            trace.recursion(depth, level, Fraction(1))
        return Fraction(1)

    kappa = min(
        peak_modulus(f, oracle, compact, epsilon / 4, budget, trace),
        peak_modulus(f, oracle, compact, epsilon / 30, budget, trace),
    )
    delta = kappa / 4
    # each member lies within kappa/16 + kappa/4 of a centre, and centres are members
    centres = thin_net(member_net(compact, kappa / 16, budget), kappa / 4)
    pieces = gamma = gamma_prime = 0
    for centre in centres:
        try:
            split = ball_split(compact, centre, kappa / 2)
        except EmptyPiece:
            continue
        if split.tag == SplitTag.miss:
            continue
        pieces += 1
        value = f(centre).coords[0]
        if approx_compare(value - top, -epsilon / 8, -epsilon / 12) == Verdict.greater_than_a:
            gamma_prime += 1
            continue
        gamma += 1
        inner = _inductive_modulus(f, oracle, split.piece, epsilon, budget, level - 1, depth + 1, trace)
        delta = min(delta, inner)

    logger.debug(f"depth {depth} level {level}: {pieces} pieces, {gamma} recursed, delta {delta}")
    if trace is not None:
        trace.recursion(
            depth, level, delta, kappa=kappa, pieces=pieces, gamma=gamma, gamma_prime=gamma_prime
        )
    return delta


def uniform_modulus(
    f: EffectiveMap,
    oracle: ImageOracle,
    compact: Compact,
    epsilon,
    budget,
    trace: ModulusTrace = None,
    reduce: bool = False,
) -> Fraction:
    """
    delta with dist(f(x), f(x')) < epsilon for members of ``compact`` closer than delta.

    Maps into R^k are reduced to the distance functionals to an epsilon/4 thinned list of the
    image, each handled by the real valued construction at epsilon/3. For maps into the real
    line that construction already answers at epsilon itself, so it is used directly and the
    reduction only runs when ``reduce`` is set. Both routes return a valid modulus, the direct
    one without building anchors.
    """
    epsilon = _positive(epsilon)
    budget = SearchBudget.coerce(budget)
    if getattr(f.codomain, "dimension", None) == 1 and not reduce:
        return uniform_modulus_real(f, oracle, compact, epsilon, budget, trace)

    image = oracle.pi(compact)
    anchors = thin_net(image.net(exponent_at_most(epsilon / 12)), epsilon / 4)
    delta = None
    for anchor in anchors:
        phi = distance_functional(f.codomain, anchor)
        value = uniform_modulus_real(
            compose(phi, f), derive_image_oracle(phi, oracle), compact, epsilon / 3, budget, trace
        )
        delta = value if delta is None else min(delta, value)
    logger.info(f"uniform modulus through {len(anchors)} distance functionals: delta {delta}")
    return delta
