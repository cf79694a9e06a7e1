#!/usr/bin/env python
# -*- coding:utf-8 -*-
# project : compacta
# filename : certificate
# author : ly_13
# date : 3/8/2025

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Tuple

from django.utils.translation import gettext_lazy as _

from apps.common.utils import get_logger
from apps.compacta.arith import Verdict, approx_compare, lower_bound_positive, parse_rat, pow2
from apps.compacta.compacts import Compact, compact_dist, compact_of_list, sup_inf
from apps.compacta.exceptions import PreconditionViolation
from apps.compacta.hausdorff import FiniteList
from apps.compacta.maps import EffectiveMap, ImageOracle, find_point_near_value

logger = get_logger(__name__)


@dataclass(frozen=True)
class ClassCertificate:
    """
    A compact of members of K at level n for threshold epsilon.

    ``witnesses`` are members of K whose values stay below sup f(K) - epsilon; every member of
    ``compact`` lies within 2^-n+4 of one of them.
    """

    n: int
    epsilon: Fraction
    compact: Compact
    witnesses: FiniteList
    provenance: Tuple[str, ...] = field(default_factory=tuple)

    def derived(self, compact: Compact, witnesses: FiniteList, step: str) -> "ClassCertificate":
        return ClassCertificate(self.n + 1, self.epsilon, compact, witnesses, self.provenance + (step,))


def check_real_valued(f: EffectiveMap):
    if getattr(f.codomain, "dimension", None) != 1:
        raise PreconditionViolation(_("Expected a real valued map, got codomain {}").format(f.codomain.name))


def initial_certificate(f: EffectiveMap, oracle: ImageOracle, compact: Compact, n: int, epsilon, budget):
    """
    The whole of K as a certificate at level n, which needs the oscillation of f on K above
    epsilon and K within 2^-n+3 of one of its members.
    """
    check_real_valued(f)
    epsilon = parse_rat(epsilon)
    top, bottom = sup_inf(oracle.pi(compact))
    gap = lower_bound_positive(top - epsilon - bottom, budget)
    target = f.codomain.point(bottom)
    witness = find_point_near_value(f, compact, target, gap, budget)
    spread = compact_dist(compact, compact_of_list(FiniteList(compact.space, [witness])))
    if approx_compare(spread, pow2(n - 3), pow2(n - 4)) == Verdict.greater_than_a:
        raise PreconditionViolation(_("Compact is too wide for a certificate at level {}").format(n))
    logger.debug(f"initial certificate at level {n} for epsilon {epsilon}")
    return ClassCertificate(n, epsilon, compact, FiniteList(compact.space, [witness]), ("initial",))
