"""T-list colouring of even cycles via a shifted-difference polynomial."""

from __future__ import annotations

from dataclasses import dataclass

from ..algebra import LinearForm, LinearProduct, scheim_coefficient
from ..certifiers import PreconditionError, nz_scan


def cyclic_arcs(length: int) -> list[tuple[int, int]]:
    """Arcs ``1->2->...->length->1`` of the directed cycle."""
    return [(i, i % length + 1) for i in range(1, length + 1)]


def shifted_cycle_product(length: int, top: int) -> LinearProduct:
    """``prod_{arcs (i,j)} prod_{s=1..top} (x_i - x_j - s)`` on the directed cycle.

    With the cyclic direction the only non-zeros in ``{0..top}^length`` are
    the constant tuples: a nonzero value forces ``x_i <= x_j`` along every arc.
    """
    return LinearProduct(
        length,
        [LinearForm.difference(length, i, j, s) for i, j in cyclic_arcs(length) for s in range(1, top + 1)],
    )


def t_cycle_product(length: int, forbidden: frozenset[int]) -> LinearProduct:
    """``prod_{edges i<j} (x_i - x_j) prod_{t in T, t>0} (x_i - x_j - t)(x_i - x_j + t)``."""
    edges = [(i, i + 1) for i in range(1, length)] + [(1, length)]
    forms = []
    for i, j in edges:
        forms.append(LinearForm.difference(length, i, j))
        for t in sorted(forbidden - {0}):
            forms.append(LinearForm.difference(length, i, j, t))
            forms.append(LinearForm.difference(length, i, j, -t))
    return LinearProduct(length, forms)


@dataclass(frozen=True)
class TListReport:
    length: int
    forbidden: tuple[int, ...]
    list_size: int
    total: int
    nonzeros: tuple[tuple[int, ...], ...]
    nonzeros_are_constant: bool
    q_coefficient: int | None
    p_coefficient: int | None

    @property
    def choosable(self) -> bool:
        return self.total != 0 and self.nonzeros_are_constant


def t_list_cycle_check(
    length: int, forbidden, budget: int | None = None, coefficients: bool = True
) -> TListReport:
    """Certify that the even cycle of the given length is T-(2|T|)-choosable.

    Scans the box ``{0..2l-1}^length`` (``l = |T|``) for the non-zeros of the
    shifted product, checks they are exactly the constant tuples, and forms
    the signed non-zero sum.  With ``coefficients`` the top coefficient
    ``prod x_i^{2l-1}`` of both the shifted product and the T-colouring
    polynomial is also extracted from box values; the two agree up to sign.
    """
    T = frozenset(forbidden)
    if 0 not in T:
        raise PreconditionError("T must contain 0")
    if any(t < 0 for t in T):
        raise PreconditionError("T must hold non-negative integers")
    if length < 4 or length % 2:
        raise PreconditionError(f"cycle length must be even and at least 4, got {length}")
    ell = len(T)
    top = 2 * ell - 1
    p = shifted_cycle_product(length, top)
    scan = nz_scan(p, [top + 1] * length, budget)
    constants = tuple((a,) * length for a in range(top + 1))
    q_coeff = p_coeff = None
    if coefficients:
        s = [top] * length
        p_coeff = int(scheim_coefficient(p, s, budget, expect_integer=True))
        q_coeff = int(scheim_coefficient(t_cycle_product(length, T), s, budget, expect_integer=True))
    return TListReport(
        length=length,
        forbidden=tuple(sorted(T)),
        list_size=2 * ell,
        total=scan.total,
        nonzeros=scan.points,
        nonzeros_are_constant=scan.points == constants,
        q_coefficient=q_coeff,
        p_coefficient=p_coeff,
    )
