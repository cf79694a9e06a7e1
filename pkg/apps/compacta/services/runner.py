#!/usr/bin/env python
# -*- coding:utf-8 -*-
# project : compacta
# filename : runner
# author : ly_13
# date : 3/13/2025

import time

from django.conf import settings

from apps.common.utils import get_logger
from apps.compacta.arith import format_rat, render_decimal
from apps.compacta.budget import SearchBudget
from apps.compacta.compacts import (
    Compact,
    SplitTag,
    ball_split,
    compact_dist,
    compact_union,
    is_member,
    sup_inf,
)
from apps.compacta.exceptions import EmptyPiece
from apps.compacta.maps import find_point_near_value
from apps.compacta.maps.expressions import compile_expression
from apps.compacta.modulus import ModulusTrace, uniform_modulus
from apps.compacta.services.actions import Action
from apps.compacta.services.reference import reference_image_oracle
from apps.compacta.services.report import render_list, render_point, render_value
from apps.compacta.services.sampling import check_soundness

logger = get_logger(__name__)

# nets of oracle compacts are reported at this precision, finite compacts in full; reals read
# off oracle compacts are rendered no finer
NET_LEVEL = 6


class ProblemRunner(object):
    """
    Runs one validated problem and builds its report.

    Command line flags win over the problem's params, which win over the settings.
    """

    def __init__(
        self,
        problem: dict,
        precision: int = None,
        budget: int = None,
        samples: int = None,
        seed: int = None,
        trace: bool = False,
        timing: bool = False,
    ):
        params = problem.get("params") or {}
        self.problem = problem
        self.params = params
        self.action = Action(problem["command"])
        self.space = problem["space"]
        self.compacts = problem["compacts"]
        self.precision = precision if precision is not None else settings.COMPACTA_OUTPUT_PRECISION
        self.budget = SearchBudget(budget or params.get("budget") or settings.COMPACTA_SEARCH_BUDGET)
        self.samples = samples or params.get("samples")
        self.seed = seed if seed is not None else params.get("seed", settings.COMPACTA_SEED)
        self.trace = ModulusTrace() if trace else None
        self.timing = timing

    @property
    def compact(self) -> Compact:
        return self.compacts[0]

    def run(self) -> dict:
        started = time.perf_counter()
        logger.info(f"running {self.action.value} on {self.space.name}")
        result = getattr(self, f"_run_{self.action.value}")()
        report = {
            "command": self.action.value,
            "precision": self.precision,
            "result": result,
            "budget": self.budget.as_dict(),
        }
        if self.timing:
            report["timing"] = {"seconds": round(time.perf_counter() - started, 3)}
        return report

    def _function(self):
        expression = self.problem["function"]
        f = compile_expression(expression, self.space)
        return f, reference_image_oracle(f, expression)

    def _precision_for(self, *compacts: Compact) -> int:
        if all(compact.finite for compact in compacts):
            return self.precision
        return min(self.precision, NET_LEVEL)

    def _render_compact(self, compact: Compact) -> dict:
        level = 0 if compact.finite else NET_LEVEL
        precision = self._precision_for(compact)
        data = {"finite": compact.finite, "net_level": level, "net": render_list(compact.net(level), precision)}
        if getattr(compact.space, "dimension", None) == 1:
            top, bottom = sup_inf(compact)
            data["sup"] = render_value(top, precision)
            data["inf"] = render_value(bottom, precision)
        return data

    def _run_dist(self):
        return {"distance": render_value(compact_dist(*self.compacts), self._precision_for(*self.compacts))}

    def _run_sup(self):
        return {"sup": render_value(sup_inf(self.compact)[0], self._precision_for(self.compact))}

    def _run_inf(self):
        return {"inf": render_value(sup_inf(self.compact)[1], self._precision_for(self.compact))}

    def _run_union(self):
        return self._render_compact(compact_union(*self.compacts))

    def _run_member(self):
        verdict = is_member(self.params["x"], self.compact, self.params["tol"])
        return {"verdict": verdict.value, "tol": format_rat(self.params["tol"])}

    def _run_split(self):
        try:
            split = ball_split(self.compact, self.params["x"], self.params["epsilon"])
        except EmptyPiece:
            # the first filter kept nothing, which certifies the miss
            return {"tag": SplitTag.miss.value, "empty_piece": True}
        if split.tag == SplitTag.miss:
            return {"tag": split.tag.value}
        return {"tag": split.tag.value, "piece": self._render_compact(split.piece)}

    def _run_image(self):
        f, oracle = self._function()
        result = self._render_compact(oracle.pi(self.compact))
        if "y" in self.params and "epsilon" in self.params:
            target = f.codomain.point(*self.params["y"])
            x = find_point_near_value(f, self.compact, target, self.params["epsilon"], self.budget)
            result["near"] = render_point(x, self._precision_for(self.compact))
        return result

    def _modulus(self):
        f, oracle = self._function()
        epsilon = self.params["epsilon"]
        delta = uniform_modulus(
            f, oracle, self.compact, epsilon, self.budget, trace=self.trace, reduce=self.params.get("reduce", False)
        )
        result = {
            "epsilon": format_rat(epsilon),
            "delta": format_rat(delta),
            "delta_decimal": render_decimal(delta, 12),
        }
        if self.trace is not None:
            result["trace"] = self.trace.as_list()
        return f, delta, result

    def _soundness(self, f, delta) -> dict:
        samples = self.samples or settings.COMPACTA_SOUNDNESS_SAMPLES
        return check_soundness(f, self.compact, delta, self.params["epsilon"], samples, self.seed, self.budget)

    def _run_modulus(self):
        f, delta, result = self._modulus()
        if self.samples:
            result["soundness"] = self._soundness(f, delta)
        return result

    def _run_check(self):
        f, delta, result = self._modulus()
        result["soundness"] = self._soundness(f, delta)
        return result
