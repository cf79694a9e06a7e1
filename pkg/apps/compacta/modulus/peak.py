#!/usr/bin/env python
# -*- coding:utf-8 -*-
# project : compacta
# filename : peak
# author : ly_13
# date : 3/9/2025

from fractions import Fraction

from apps.common.utils import get_logger
from apps.compacta.arith import Verdict, approx_compare, parse_rat, pow2
from apps.compacta.budget import SearchBudget
from apps.compacta.compacts import Compact, compact_dist, compact_of_list, sup_inf
from apps.compacta.hausdorff import FiniteList
from apps.compacta.maps import EffectiveMap, ImageOracle
from apps.compacta.modulus.certificate import check_real_valued, initial_certificate
from apps.compacta.modulus.refine import refine_step
from apps.compacta.modulus.trace import ModulusTrace

logger = get_logger(__name__)

# finest level tried when K sits inside a tiny ball
MAX_START_LEVEL = 64
# the spread of K is only read this deep
START_PRECISION = 4


def _start_level(compact: Compact) -> int:
    """Largest m (up to MAX_START_LEVEL) with K inside the ball of radius 2^-m+2 around net(0)[0]."""
    centre = compact.net(0)[0]
    spread = compact_dist(compact, compact_of_list(FiniteList(compact.space, [centre])))
    upper = spread.exact if spread.is_exact else spread.approx(START_PRECISION) + pow2(START_PRECISION)
    m = 2
    while pow2(m - 2) <= upper:
        m -= 1
    while m < MAX_START_LEVEL and pow2(m - 1) > upper:
        m += 1
    return m


def peak_modulus(
    f: EffectiveMap, oracle: ImageOracle, compact: Compact, epsilon, budget, trace: ModulusTrace = None
) -> Fraction:
    """
    A delta good near the top: members x, x' closer than delta with f(x) > sup f(K) - epsilon/2
    have |f(x) - f(x')| <= 2 epsilon.

    Certificates are refined level by level until the image of the certified compact agrees with
    the image of its witnesses to within epsilon/2; the level reached gives delta.
    """
    check_real_valued(f)
    epsilon = parse_rat(epsilon)
    budget = SearchBudget.coerce(budget)
    top, bottom = sup_inf(oracle.pi(compact))
    if approx_compare(top - bottom, epsilon, 2 * epsilon) == Verdict.less_than_b:
        if trace is not None:
            trace.peak(epsilon, "flat", Fraction(1))
        return Fraction(1)

    m = _start_level(compact)
    cert = initial_certificate(f, oracle, compact, m, epsilon, budget)
    for k in budget.rounds("peak_modulus"):
        certified = oracle.pi(cert.compact)
        witnessed = oracle.pi(compact_of_list(cert.witnesses))
        if approx_compare(compact_dist(certified, witnessed), epsilon / 4, epsilon / 2) == Verdict.less_than_b:
            delta = pow2(m + k - 1)
            logger.debug(f"peak modulus for epsilon {epsilon}: level {m + k - 1}, delta {delta}")
            if trace is not None:
                trace.peak(epsilon, "peak", delta, m=m, rounds=k)
            return delta
        cert = refine_step(f, oracle, compact, cert, budget)
