#!/usr/bin/env python
# -*- coding:utf-8 -*-
# project : compacta
# filename : refine
# author : ly_13
# date : 3/9/2025

from apps.common.utils import get_logger
from apps.compacta.arith import Verdict, approx_compare, lower_bound_positive, pow2
from apps.compacta.budget import SearchBudget
from apps.compacta.compacts import (
    Compact,
    SplitTag,
    ball_split,
    compact_dist,
    compact_of_list,
    compact_simplify,
    compact_union_all,
    nearest_index,
    some_member,
    sup_inf,
)
from apps.compacta.exceptions import ClassViolation, EmptyPiece
from apps.compacta.hausdorff import FiniteList, thin_net
from apps.compacta.maps import EffectiveMap, ImageOracle, find_point_near_value
from apps.compacta.modulus.certificate import ClassCertificate, check_real_valued

logger = get_logger(__name__)


def refine_step(
    f: EffectiveMap, oracle: ImageOracle, compact: Compact, cert: ClassCertificate, budget
) -> ClassCertificate:
    """
    The certificate one level finer.

    The certified compact is cut into pieces around the points of a thinned 2^-n-2 net of K. Pieces on
    which f oscillates by more than epsilon stay and get a fresh low witness; the others shrink
    to the old witness next to them. The result must lie within 2^-n+5 of the input, anything
    else refutes the image oracle.
    """
    check_real_valued(f)
    budget = SearchBudget.coerce(budget)
    n, epsilon = cert.n, cert.epsilon
    space = compact.space
    top = sup_inf(oracle.pi(compact))[0]
    ceiling = top - epsilon
    radius = pow2(n)

    parts, witnesses = [], []
    high = low = missed = 0
    # every member of K lies within 2^-n-2 + 2^-n-1 of a centre
    centres = thin_net(compact.net(n + 2), pow2(n + 1))
    for centre in centres:
        try:
            split = ball_split(cert.compact, centre, radius)
        except EmptyPiece:
            missed += 1
            continue
        if split.tag == SplitTag.miss:
            missed += 1
            continue
        piece = split.piece
        piece_top, piece_bottom = sup_inf(oracle.pi(piece))
        if approx_compare(piece_top - piece_bottom, epsilon, 2 * epsilon) == Verdict.greater_than_a:
            high += 1
            gap = lower_bound_positive(ceiling - piece_bottom, budget)
            witness = find_point_near_value(f, piece, f.codomain.point(piece_bottom), gap, budget)
            parts.append(piece)
        else:
            low += 1
            anchor = some_member(piece, budget)
            index = nearest_index(anchor, cert.compact, cert.witnesses, pow2(n - 4), budget)
            witness = cert.witnesses[index]
            parts.append(compact_of_list(FiniteList(space, [witness])))
        witnesses.append(witness)

    if not parts:
        raise ClassViolation(f"no piece of the level {n} compact survived the split")
    refined = compact_simplify(compact_union_all(parts))
    if approx_compare(compact_dist(cert.compact, refined), 24 * radius, 32 * radius) == Verdict.greater_than_a:
        raise ClassViolation(f"refined compact moved by more than 2^{5 - n}")
    logger.debug(f"refine level {n}: {high} high pieces, {low} low pieces, {missed} misses")
    return cert.derived(refined, FiniteList(space, witnesses).deduplicated(), f"refine:{n}")
