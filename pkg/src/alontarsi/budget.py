"""Enumeration budgets.

Every exponential routine in the package takes a ``budget`` argument (a step
count).  Exceeding it raises :class:`BudgetExceeded` instead of truncating.
"""

from __future__ import annotations

import os

DEFAULT_BUDGET = 2**26
BUDGET_ENV = "ALONTARSI_BUDGET"


class BudgetExceeded(RuntimeError):
    """Raised when an operation would need more steps than allowed."""

    def __init__(self, what: str, needed: int | None, budget: int):
        self.what = what
        self.needed = needed
        self.budget = budget
        if needed is None:
            msg = f"{what}: budget of {budget} steps exhausted"
        else:
            msg = f"{what}: needs {needed} steps, budget is {budget}"
        super().__init__(msg)


def default_budget() -> int:
    """The default step budget, honouring the ``ALONTARSI_BUDGET`` override."""
    raw = os.environ.get(BUDGET_ENV)
    if raw:
        return int(raw)
    return DEFAULT_BUDGET


def resolve(budget: int | None) -> int:
    return default_budget() if budget is None else budget


def require(what: str, needed: int, budget: int | None) -> None:
    """Up-front check for enumerations whose size is known in advance."""
    budget = resolve(budget)
    if needed > budget:
        raise BudgetExceeded(what, needed, budget)


class Counter:
    """Running step counter for searches whose size is not known up front."""

    __slots__ = ("what", "budget", "used")

    def __init__(self, what: str, budget: int | None):
        self.what = what
        self.budget = resolve(budget)
        self.used = 0

    def spend(self, steps: int = 1) -> None:
        self.used += steps
        if self.used > self.budget:
            raise BudgetExceeded(self.what, None, self.budget)
