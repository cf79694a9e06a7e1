#!/usr/bin/env python
# -*- coding:utf-8 -*-
# project : compacta
# filename : trace
# author : ly_13
# date : 3/8/2025

import threading
from fractions import Fraction

from apps.compacta.arith import format_rat


def _plain(value):
    if isinstance(value, Fraction):
        return format_rat(value)
    return value


class ModulusTrace(object):
    """Events of one extraction, in the order they happened."""

    def __init__(self):
        self.events = []
        self._locker = threading.Lock()

    def record(self, kind: str, **fields):
        event = {"event": kind}
        event.update({key: _plain(value) for key, value in fields.items()})
        with self._locker:
            self.events.append(event)

    def peak(self, epsilon, branch, delta, m=None, rounds=None):
        self.record("peak", epsilon=epsilon, branch=branch, m=m, rounds=rounds, delta=delta)

    def recursion(self, depth, level, delta, kappa=None, pieces=0, gamma=0, gamma_prime=0):
        self.record(
            "recursion",
            depth=depth,
            level=level,
            kappa=kappa,
            pieces=pieces,
            gamma=gamma,
            gamma_prime=gamma_prime,
            delta=delta,
        )

    def as_list(self):
        with self._locker:
            return list(self.events)

    def __len__(self):
        return len(self.events)
