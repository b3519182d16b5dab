"""Coefficient extraction from box evaluations (Scheim's lemma)."""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Callable, Sequence

from .. import budget as _budget


def box_points(bounds: Sequence[int]):
    """All integer points ``x`` with ``0 <= x_i <= bounds[i]``, last coordinate fastest."""
    return itertools.product(*(range(b + 1) for b in bounds))


def scheim_sum(p: Callable[[Sequence[int]], object], s: Sequence[int], budget: int | None = None):
    """``sum_x (-1)^{sum(s_i + x_i)} prod binom(s_i, x_i) p(x)`` over the box ``0..s_i``.

    For ``deg p <= sum(s)`` this is the mixed partial derivative
    ``d^{s_1}/dx_1^{s_1} ... p``, i.e. the coefficient of ``prod x_i^{s_i}``
    times ``prod s_i!``.
    """
    s = tuple(s)
    _budget.require("Scheim box evaluation", math.prod(b + 1 for b in s), budget)
    binoms = [[math.comb(b, x) for x in range(b + 1)] for b in s]
    total = 0
    for x in box_points(s):
        val = p(x)
        if not val:
            continue
        w = 1
        for i, xi in enumerate(x):
            w *= binoms[i][xi]
        if (sum(s) + sum(x)) & 1:
            w = -w
        total = total + w * val
    return total


def scheim_coefficient(
    p: Callable[[Sequence[int]], object],
    s: Sequence[int],
    budget: int | None = None,
    expect_integer: bool = False,
) -> Fraction:
    """Coefficient of ``prod x_i^{s_i}`` in ``p`` from its values on the box.

    ``p`` is any exact evaluator; if it exposes ``degree`` (as
    :class:`SparsePolynomial` and :class:`LinearProduct` do) the precondition
    ``deg p <= sum(s)`` is checked.  With ``expect_integer`` the division by
    ``prod s_i!`` must be exact.
    """
    deg = getattr(p, "degree", None)
    if deg is not None and deg > sum(s):
        raise ValueError(f"degree {deg} exceeds sum of target exponents {sum(s)}")
    total = scheim_sum(p, s, budget)
    result = Fraction(total, math.prod(math.factorial(b) for b in s))
    if expect_integer and result.denominator != 1:
        raise ArithmeticError(f"coefficient {result} is not an integer")
    return result
