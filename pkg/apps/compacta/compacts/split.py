#!/usr/bin/env python
# -*- coding:utf-8 -*-
# project : compacta
# filename : split
# author : ly_13
# date : 3/5/2025

import threading
from dataclasses import dataclass
from typing import List, Optional

from django.db.models import TextChoices
from django.utils.translation import gettext_lazy as _

from apps.common.utils import get_logger
from apps.compacta.arith import Verdict, approx_compare, creal_min, exponent_at_most, parse_rat, pow2
from apps.compacta.compacts.base import Compact, box_compact, compact_of_list, compact_union_all
from apps.compacta.exceptions import EmptyPiece, PreconditionViolation
from apps.compacta.hausdorff import FiniteList
from apps.compacta.metric.nets import box_gap, clip_box
from apps.compacta.metric.spaces import Point

logger = get_logger(__name__)

__all__ = ["SplitTag", "SplitResult", "ball_split"]


class SplitTag(TextChoices):
    miss = "Miss", _("Ball misses the compact")
    piece = "Piece", _("Piece of the compact inside the ball")


@dataclass(frozen=True)
class SplitResult:
    tag: SplitTag
    piece: Optional[Compact] = None


class _StageLists(object):
    """
    The filtered lists S_1, S_2, ... of a ball split.

    Stage k works on K.net(p_k) with 2^-p_k <= 2^-k-4 * radius. Stage 1 keeps the points
    verified inside 7/4 radius (all points inside 5/4 radius pass); stage k+1 keeps the
    points of the next net verified within 2^-k-2 * radius of a point kept at stage k.
    """

    def __init__(self, compact: Compact, centre: Point, radius, first: FiniteList):
        self.compact = compact
        self.centre = centre
        self.radius = radius
        self.base = exponent_at_most(radius)
        self.stages: List[FiniteList] = [first]
        self.nets = [compact.net(self.precision(1))]
        self._locker = threading.Lock()

    def precision(self, k: int) -> int:
        return self.base + k + 4

    def stage(self, k: int) -> FiniteList:
        with self._locker:
            while len(self.stages) < k:
                self._advance()
            return self.stages[k - 1]

    def _advance(self):
        k = len(self.stages)
        kept, net = self.stages[-1], self.nets[-1]
        following = self.compact.net(self.precision(k + 1))
        self.nets.append(following)
        if following is net:
            self.stages.append(kept)
            return
        space = self.compact.space
        bound = pow2(self.precision(k)) + pow2(self.precision(k + 1))
        step = self.radius * pow2(k + 2)
        scaled = following.scaled()
        rows = [p.rational() for p in kept]
        if scaled is not None and all(row is not None for row in rows):
            reach = (bound + step) / 2
            indices = set()
            for row in rows:
                indices.update(scaled.within(row, reach))
            self.stages.append(FiniteList.of_checked(space, [following[i] for i in sorted(indices)]))
            return
        survivors = [
            q
            for q in following
            if any(approx_compare(space.dist(p, q), bound, step) == Verdict.less_than_b for p in kept)
        ]
        self.stages.append(FiniteList(space, survivors))

    def net_oracle(self, n: int) -> FiniteList:
        k = 1
        while self.radius * pow2(k) > pow2(n):
            k += 1
        return self.stage(k)


def _staged_piece(compact: Compact, stages: "_StageLists") -> Compact:
    return Compact(compact.space, stages.net_oracle, finite=compact.finite, label="piece", inner=compact.inner)


def _split_parts(compact: Compact, centre: Point, radius) -> SplitResult:
    pieces = []
    for part in compact.parts:
        try:
            result = ball_split(part, centre, radius)
        except EmptyPiece:
            continue
        if result.tag == SplitTag.piece:
            pieces.append(result.piece)
    if not pieces:
        return SplitResult(SplitTag.miss)
    return SplitResult(SplitTag.piece, compact_union_all(pieces))


def _split_box(compact: Compact, row, radius) -> SplitResult:
    if box_gap(compact.box, row) > radius * 5 / 4:
        return SplitResult(SplitTag.miss)
    piece = box_compact(compact.space, clip_box(compact.box, row, radius * 3 / 2))
    return SplitResult(SplitTag.piece, piece)


def ball_split(compact: Compact, centre: Point, radius) -> SplitResult:
    """
    Miss when no member of ``compact`` lies within ``radius`` of ``centre``, otherwise the
    piece of members near the ball: it holds every member inside the ball and every point of
    its nets lies within 2*radius of the centre.

    EmptyPiece is raised when the inhabited branch is chosen but the first filter keeps
    nothing; every net point is then further than 5/4 radius away, so it reads as a miss.
    Unions split part by part, and boxes around a rational centre are cut exactly.
    """
    radius = parse_rat(radius)
    if radius <= 0:
        raise PreconditionViolation(_("Split radius must be positive, got {}").format(radius))
    space = compact.space
    space.check(centre)
    if compact.parts:
        return _split_parts(compact, centre, radius)
    row = centre.rational()
    if compact.box is not None and row is not None:
        return _split_box(compact, row, radius)

    net = compact.net(exponent_at_most(radius) + 5)
    scaled = net.scaled() if row is not None else None
    if scaled is not None:
        # the same verdicts as below, read off exact distances
        if not scaled.within(row, radius * 11 / 8):
            return SplitResult(SplitTag.miss)
        kept = [net[k] for k in scaled.within(row, radius * 3 / 2)]
    else:
        distances = [space.dist(centre, q) for q in net]
        if approx_compare(creal_min(*distances), radius * 5 / 4, radius * 3 / 2) == Verdict.greater_than_a:
            return SplitResult(SplitTag.miss)
        kept = [
            q
            for q, d in zip(net, distances)
            if approx_compare(d, radius * 5 / 4, radius * 7 / 4) == Verdict.less_than_b
        ]
    if not kept:
        logger.warning(f"ball split of radius {radius} kept no net point")
        raise EmptyPiece(radius)
    first = FiniteList.of_checked(space, kept)
    if compact.finite:
        return SplitResult(SplitTag.piece, compact_of_list(first, label="piece"))
    stages = _StageLists(compact, centre, radius, first)
    return SplitResult(SplitTag.piece, _staged_piece(compact, stages))
