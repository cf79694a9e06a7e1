#!/usr/bin/env python
# -*- coding:utf-8 -*-
# project : compacta
# filename : extrema
# author : ly_13
# date : 3/5/2025

from typing import Tuple

from django.utils.translation import gettext_lazy as _

from apps.compacta.arith import CReal, creal_max, creal_min
from apps.compacta.compacts.base import Compact
from apps.compacta.exceptions import PreconditionViolation


def sup_inf(compact: Compact) -> Tuple[CReal, CReal]:
    """sup and inf of a compact of the real line, read off the net one bit deeper."""
    if getattr(compact.space, "dimension", None) != 1:
        raise PreconditionViolation(_("sup and inf need a compact of the real line, got {}").format(compact.space.name))
    if compact.finite:
        values = [p.coords[0] for p in compact.net(0)]
        return creal_max(*values), creal_min(*values)

    def upper(n):
        return max(p.coords[0].approx(n + 1) for p in compact.net(n + 1))

    def lower(n):
        return min(p.coords[0].approx(n + 1) for p in compact.net(n + 1))

    return CReal(upper, label="sup"), CReal(lower, label="inf")
