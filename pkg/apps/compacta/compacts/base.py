#!/usr/bin/env python
# -*- coding:utf-8 -*-
# project : compacta
# filename : base
# author : ly_13
# date : 3/4/2025

from typing import Callable, Sequence

from django.utils.translation import gettext_lazy as _

from apps.common.base.magic import MagicCacheData
from apps.common.utils import get_logger
from apps.compacta.arith import CReal, ZERO, pow2
from apps.compacta.exceptions import PreconditionViolation, SpaceMismatch
from apps.compacta.hausdorff import FiniteList, list_hausdorff
from apps.compacta.metric.nets import grid_net, merge_boxes, normalize_box
from apps.compacta.metric.spaces import MetricSpace, RealSpace

logger = get_logger(__name__)

__all__ = [
    "Compact",
    "compact_of_list",
    "compact_dist",
    "compact_union",
    "compact_union_all",
    "compact_simplify",
    "net_of_box",
    "box_compact",
]


class Compact(object):
    """
    A nonempty compact: a net oracle n -> FiniteList with h(net(n), net(m)) <= 2^-n + 2^-m.

    ``finite`` compacts answer every precision with one and the same list, which then is the
    member set itself. ``inner`` compacts only put members into their nets; finite ones always
    do. ``box`` is set on full boxes of R^d and ``parts`` on unions kept apart by kind, so
    splitting and selection can take the exact route. Nets are memoized per precision.
    """

    def __init__(
        self,
        space: MetricSpace,
        net: Callable[[int], FiniteList],
        finite: bool = False,
        label: str = "",
        inner: bool = False,
        box=None,
        parts=None,
    ):
        self.space = space
        self._net_oracle = net
        self.finite = finite
        self.label = label
        self.inner = inner or finite
        self.box = box
        self.parts = tuple(parts) if parts else None

    def __repr__(self):
        kind = "finite" if self.finite else "box" if self.box is not None else "oracle"
        label = f" {self.label}" if self.label else ""
        return f"<Compact {self.space.name} {kind}{label}>"

    def net(self, n: int) -> FiniteList:
        if self.finite:
            n = 0
        return self._net(int(n))

    @MagicCacheData.make_cache()
    def _net(self, n: int) -> FiniteList:
        value = self._net_oracle(n)
        if not isinstance(value, FiniteList):
            raise PreconditionViolation(_("Net oracle of {} returned {!r}").format(self, value))
        if value.space.name != self.space.name:
            raise SpaceMismatch(self.space.name, value.space.name)
        return value


def _check_same_space(left: Compact, right: Compact):
    if left.space.name != right.space.name:
        raise SpaceMismatch(left.space.name, right.space.name)


def compact_of_list(zeta: FiniteList, label: str = "list") -> Compact:
    return Compact(zeta.space, lambda n: zeta, finite=True, label=label)


def compact_dist(left: Compact, right: Compact) -> CReal:
    _check_same_space(left, right)
    if left is right:
        return ZERO
    if left.finite and right.finite:
        return list_hausdorff(left.net(0), right.net(0))
    return CReal(lambda n: list_hausdorff(left.net(n + 2), right.net(n + 2)).approx(n + 1), label="compact_dist")


def compact_union(left: Compact, right: Compact) -> Compact:
    return compact_union_all([left, right])


def _joined(space: MetricSpace, parts: Sequence[Compact], label: str) -> Compact:
    def net(n):
        return FiniteList.of_checked(space, [point for part in parts for point in part.net(n)])

    return Compact(space, net, label=label, inner=all(part.inner for part in parts), parts=parts)


def compact_union_all(compacts: Sequence[Compact]) -> Compact:
    """
    Union of the compacts, nets concatenated in order.

    Nested unions are flattened, finite members join into one list and boxes are merged, so a
    long chain of unions stays a short list of parts.
    """
    if not compacts:
        raise PreconditionViolation(_("Union of no compacts"))
    space = compacts[0].space
    flat = []
    for compact in compacts:
        _check_same_space(compacts[0], compact)
        flat.extend(compact.parts or (compact,))
    finite = [compact for compact in flat if compact.finite]
    boxes = [compact for compact in flat if compact.box is not None]

    parts = []
    for compact in flat:
        if compact.finite:
            if compact is finite[0]:
                if len(finite) == 1:
                    parts.append(compact)
                else:
                    points = [point for member in finite for point in member.net(0)]
                    parts.append(compact_of_list(FiniteList.of_checked(space, points), label="union"))
        elif compact.box is not None:
            if compact is boxes[0]:
                by_box = {member.box: member for member in boxes}
                parts.extend(by_box.get(box) or box_compact(space, box) for box in merge_boxes(list(by_box)))
        else:
            parts.append(compact)
    if len(parts) == 1:
        return parts[0]
    return _joined(space, parts, "union")


def compact_simplify(compact: Compact) -> Compact:
    """Same compact with duplicate points removed from every net."""
    if compact.finite:
        zeta = compact.net(0)
        simplified = zeta.deduplicated()
        if simplified is zeta:
            return compact
        return compact_of_list(simplified, label=compact.label)
    if compact.box is not None:
        return compact
    if compact.parts:
        compact = compact_union_all([compact_simplify(part) for part in compact.parts])
        if compact.parts is None:
            return compact
    return Compact(
        compact.space,
        lambda n: compact.net(n).deduplicated(),
        label=compact.label,
        inner=compact.inner,
        parts=compact.parts,
    )


def net_of_box(space: RealSpace, box, spacing) -> Compact:
    return compact_of_list(grid_net(space, box, spacing), label="net_of_box")


def box_compact(space: RealSpace, box) -> Compact:
    """The full box, net(n) being the grid at spacing 2^-n."""
    # fail on a malformed box now rather than on the first query
    grid_net(space, box, 1)
    box = normalize_box(box)
    return Compact(space, lambda n: grid_net(space, box, pow2(n)), label="box", inner=True, box=box)
