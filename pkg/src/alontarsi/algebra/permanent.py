"""Matrices over exact rings and their permanents."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .. import budget as _budget


@dataclass(frozen=True)
class RingMatrix:
    """Rectangular matrix of exact ring elements, stored row-major."""

    rows: tuple[tuple, ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> RingMatrix:
        rows = tuple(tuple(r) for r in rows)
        if rows and len({len(r) for r in rows}) != 1:
            raise ValueError("ragged matrix")
        return cls(rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def transpose(self) -> RingMatrix:
        return RingMatrix(tuple(zip(*self.rows)))

    def __getitem__(self, ij: tuple[int, int]):
        i, j = ij
        return self.rows[i][j]


def _square(m: RingMatrix | Sequence[Sequence]) -> tuple[tuple, ...]:
    rows = m.rows if isinstance(m, RingMatrix) else RingMatrix.from_rows(m).rows
    if any(len(r) != len(rows) for r in rows):
        raise ValueError("permanent needs a square matrix")
    return rows


def ryser_permanent(m: RingMatrix | Sequence[Sequence], budget: int | None = None):
    """Permanent by Ryser's inclusion-exclusion over column subsets.

    Computes ``(-1)^s sum_S (-1)^|S| prod_i sum_{j in S} m[i][j]``.  Subsets are
    visited in Gray-code order, so each step adds or removes one column from
    the ``s`` running row sums.
    """
    rows = _square(m)
    s = len(rows)
    if s == 0:
        return 1
    _budget.require("Ryser permanent", 2**s, budget)
    cols = [[rows[i][j] for i in range(s)] for j in range(s)]
    sums = [0] * s
    in_set = [False] * s
    total = 0
    size = 0
    for k in range(1, 2**s):
        j = (k & -k).bit_length() - 1
        col = cols[j]
        if in_set[j]:
            in_set[j] = False
            size -= 1
            for i in range(s):
                if col[i]:
                    sums[i] = sums[i] - col[i]
        else:
            in_set[j] = True
            size += 1
            for i in range(s):
                if col[i]:
                    sums[i] = sums[i] + col[i]
        prod = 1
        for x in sums:
            if not x:
                prod = 0
                break
            prod = x * prod
        if prod:
            total = total - prod if size & 1 else total + prod
    return -total if s & 1 else total


def naive_permanent(m: RingMatrix | Sequence[Sequence]):
    """Permanent straight from the definition: sum over all permutations."""
    rows = _square(m)
    total = 0
    for perm in itertools.permutations(range(len(rows))):
        prod = 1
        for i, j in enumerate(perm):
            prod = rows[i][j] * prod
            if not prod:
                break
        total = total + prod
    return total
