#!/usr/bin/env python
# -*- coding:utf-8 -*-
# project : compacta
# filename : exceptions
# author : ly_13
# date : 3/2/2025

from django.utils.translation import gettext_lazy as _


class CompactaException(Exception):
    """Base error, carries a stable code and the process exit code used by the CLI."""

    default_code = "error"
    default_detail = _("Computation failed")
    exit_code = 1

    def __init__(self, detail=None, code=None):
        self.detail = detail if detail is not None else self.default_detail
        self.code = code or self.default_code
        super().__init__(str(self.detail))

    def as_dict(self):
        return {"code": self.code, "detail": str(self.detail)}


class PreconditionViolation(CompactaException):
    default_code = "precondition"
    default_detail = _("A precondition of the operation does not hold")
    exit_code = 3


class ArityMismatch(PreconditionViolation):
    default_code = "arity_mismatch"
    default_detail = _("Operation {} expects {} arguments, got {}")

    def __init__(self, op, expected, got):
        super().__init__(detail=self.default_detail.format(op, expected, got))


class SpaceMismatch(CompactaException):
    default_code = "space_mismatch"
    default_detail = _("Objects from different metric spaces were combined: {} and {}")
    exit_code = 3

    def __init__(self, left, right):
        super().__init__(detail=self.default_detail.format(left, right))


class InvalidModulus(CompactaException):
    default_code = "invalid_modulus"
    default_detail = _("The continuity modulus returned a non-positive value {}")
    exit_code = 3

    def __init__(self, value):
        super().__init__(detail=self.default_detail.format(value))


class BudgetExceeded(CompactaException):
    default_code = "budget_exceeded"
    default_detail = _("Search '{}' found nothing within {} rounds")
    exit_code = 2

    def __init__(self, label, rounds):
        self.label = label
        self.rounds = rounds
        super().__init__(detail=self.default_detail.format(label, rounds))


class EmptyPiece(CompactaException):
    """The inhabited branch of a ball split was chosen but no net point survived the first filter."""

    default_code = "empty_piece"
    default_detail = _("Ball of radius {} around the point holds no net point after filtering")
    exit_code = 2

    def __init__(self, radius):
        self.radius = radius
        super().__init__(detail=self.default_detail.format(radius))


class ClassViolation(CompactaException):
    default_code = "class_violation"
    default_detail = _("A refinement invariant was refuted, the image oracle is unsound: {}")
    exit_code = 2

    def __init__(self, reason):
        super().__init__(detail=self.default_detail.format(reason))
