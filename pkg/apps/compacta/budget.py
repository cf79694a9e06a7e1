#!/usr/bin/env python
# -*- coding:utf-8 -*-
# project : compacta
# filename : budget
# author : ly_13
# date : 3/2/2025

import threading

from django.utils.translation import gettext_lazy as _

from apps.common.utils import get_logger
from apps.compacta.exceptions import BudgetExceeded, PreconditionViolation

logger = get_logger(__name__)


class SearchBudget(object):
    """
    Bounds every unbounded search with the same round limit and keeps count of what was spent.

    A search iterates ``rounds(label)``; running off the end raises BudgetExceeded, so exhaustion
    is always an error and never a silent answer. Choices inside a search never depend on the
    limit itself, which is what makes a larger budget reproduce every successful result.
    """

    def __init__(self, limit: int):
        if isinstance(limit, bool) or not isinstance(limit, int) or limit < 1:
            raise PreconditionViolation(_("Search budget must be a positive integer, got {}").format(limit))
        self.limit = limit
        self.spent = 0
        self.deepest = 0
        self.searches = 0
        self._locker = threading.Lock()

    @classmethod
    def coerce(cls, budget) -> "SearchBudget":
        if isinstance(budget, SearchBudget):
            return budget
        return cls(budget)

    def rounds(self, label: str):
        with self._locker:
            self.searches += 1
        for i in range(1, self.limit + 1):
            with self._locker:
                self.spent += 1
                self.deepest = max(self.deepest, i)
            yield i
        logger.warning(f"search {label} exhausted its budget of {self.limit} rounds")
        raise BudgetExceeded(label, self.limit)

    def as_dict(self):
        return {"limit": self.limit, "spent": self.spent, "deepest": self.deepest, "searches": self.searches}

    def __repr__(self):
        return f"<SearchBudget {self.spent}/{self.limit}>"
