"""Alon-Tarsi decisions, AT numbers, certificates and cheap bounds."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import budget as _budget
from .algebra import RingMatrix, ryser_permanent
from .certifiers import (
    EulerCount,
    PreconditionError,
    check_list_sizes,
    euler_diff,
    graph_polynomial,
)
from .coloring import chromatic_number, is_list_colorable
from .graphs import (
    MultiGraph,
    Orientation,
    coloring_number_col,
    enumerate_orientations,
    max_density,
)


@dataclass(frozen=True)
class ATCertificate:
    """Evidence that ``G`` is f-AT for some ``f`` with every ``f(i) <= bound``.

    ``kind`` is ``"monomial"`` (``exponent``/``coefficient`` set) or
    ``"orientation"`` (``flags``/``euler`` set, flags relative to the
    canonical low-to-high direction of each edge).
    """

    kind: str
    bound: int
    exponent: tuple[int, ...] | None = None
    coefficient: int | None = None
    flags: tuple[int, ...] | None = None
    euler: EulerCount | None = None

    def as_dict(self) -> dict:
        out: dict = {"kind": self.kind, "bound": self.bound}
        if self.exponent is not None:
            out["exponent"] = list(self.exponent)
            out["coefficient"] = str(self.coefficient)
        if self.flags is not None:
            out["flags"] = "".join(map(str, self.flags))
            out["euler_even"] = str(self.euler.even)
            out["euler_odd"] = str(self.euler.odd)
        return out

    @classmethod
    def from_dict(cls, data: dict) -> ATCertificate:
        if data["kind"] == "monomial":
            return cls("monomial", int(data["bound"]), tuple(data["exponent"]), int(data["coefficient"]))
        if data["kind"] == "orientation":
            return cls(
                "orientation",
                int(data["bound"]),
                flags=tuple(int(ch) for ch in data["flags"]),
                euler=EulerCount(int(data["euler_even"]), int(data["euler_odd"])),
            )
        raise ValueError(f"unknown certificate kind {data['kind']!r}")

    def verify(self, g: MultiGraph, f: Sequence[int] | None = None, budget: int | None = None) -> bool:
        """Re-check the certificate without repeating the search.

        A monomial is re-derived through the permanent of the repeated-column
        incidence matrix, independently of the expansion that found it.
        """
        f = tuple(f) if f is not None else (self.bound,) * g.n
        if self.kind == "monomial":
            t = self.exponent
            if len(t) != g.n or any(ti > fi - 1 for ti, fi in zip(t, f)) or sum(t) != g.m:
                return False
            return self.coefficient != 0 and monomial_coefficient(g, t, budget) == self.coefficient
        if self.kind == "orientation":
            d = Orientation.from_flags(g, self.flags)
            if any(di > fi - 1 for di, fi in zip(d.out_degrees, f)):
                return False
            return self.euler.diff != 0 and euler_diff(d, budget) == self.euler
        return False


def monomial_coefficient(g: MultiGraph, t: Sequence[int], budget: int | None = None) -> int:
    """Coefficient of ``prod x_i^{t_i}`` in ``P_G`` via a single permanent."""
    if sum(t) != g.m:
        return 0
    rows = []
    for i, j in g.edges:
        row = []
        for v in g.vertices:
            entry = 1 if v == i else -1 if v == j else 0
            row.extend([entry] * t[v - 1])
        rows.append(row)
    per = ryser_permanent(RingMatrix.from_rows(rows), budget)
    return per // math.prod(math.factorial(x) for x in t)


@dataclass(frozen=True)
class ATDecision:
    decision: bool
    certificate: ATCertificate | None = None

    def __bool__(self) -> bool:
        return self.decision


def is_f_AT(g: MultiGraph, f: Sequence[int], budget: int | None = None) -> ATDecision:
    """Is there a nonzero monomial of ``P_G`` with exponents ``t_i <= f(i) - 1``?"""
    f = check_list_sizes(g, f)
    p = graph_polynomial(g, budget)
    fits = [e for e in p.terms if all(ti <= fi - 1 for ti, fi in zip(e, f))]
    if not fits:
        return ATDecision(False)
    e = min(fits)
    return ATDecision(True, ATCertificate("monomial", max(f), e, p.terms[e]))


@dataclass(frozen=True)
class ATNumber:
    value: int
    certificate: ATCertificate

    def __int__(self) -> int:
        return self.value


def at_number(g: MultiGraph, budget: int | None = None) -> ATNumber:
    """``AT(G)``: one plus the least max-exponent over surviving monomials of ``P_G``."""
    p = graph_polynomial(g, budget)
    e = min(p.terms, key=lambda t: (max(t, default=0), t))
    value = 1 + max(e, default=0)
    return ATNumber(value, ATCertificate("monomial", value, e, p.terms[e]))


def at_via_orientation_search(g: MultiGraph, k: int, budget: int | None = None) -> ATDecision:
    """k-AT via orientations with out-degrees below ``k`` and unequal eulerian parity counts.

    Returns the first witness in orientation-enumeration order.
    """
    _budget.require("orientation search", 4**g.m, budget)
    for d in enumerate_orientations(g, k - 1, budget):
        count = euler_diff(d, budget)
        if count.diff:
            return ATDecision(True, ATCertificate("orientation", k, flags=d.flags, euler=count))
    return ATDecision(False)


# -- bounds --------------------------------------------------------------------

@dataclass
class ComponentBounds:
    vertices: list[int]
    m: int
    chromatic: int
    density: Fraction
    col: int
    at: int | None = None

    @property
    def lower(self) -> int:
        return max(self.chromatic, 1 + math.ceil(self.density))

    @property
    def upper(self) -> int:
        return self.col + 1


@dataclass
class BoundsReport:
    components: list[ComponentBounds] = field(default_factory=list)

    @property
    def lower(self) -> int:
        return max((c.lower for c in self.components), default=1)

    @property
    def upper(self) -> int:
        return max((c.upper for c in self.components), default=1)

    @property
    def at(self) -> int | None:
        vals = [c.at for c in self.components]
        if any(v is None for v in vals):
            return None
        return max(vals, default=1)


def bounds_report(g: MultiGraph, exact: bool = True, budget: int | None = None) -> BoundsReport:
    """Lower bound ``max(chi, 1 + ceil(max density))`` and upper bound ``col + 1``, per component.

    With ``exact`` the AT number of each component is also computed when the
    budget allows; ``AT(G)`` is the maximum over components.
    """
    report = BoundsReport()
    for comp in g.components():
        h = g.induced(comp)
        cb = ComponentBounds(
            vertices=comp,
            m=h.m,
            chromatic=chromatic_number(h, budget),
            density=max_density(h, budget),
            col=coloring_number_col(h),
        )
        if exact:
            try:
                cb.at = at_number(h, budget).value
            except _budget.BudgetExceeded:
                cb.at = None
        report.components.append(cb)
    return report


# -- choosability oracle -------------------------------------------------------

def is_choosable_exhaustive(g: MultiGraph, k: int, colours: int = 6) -> bool:
    """Whether ``G`` is colourable from every assignment of k-subsets of ``{0..colours-1}``.

    Assignments are taken up to permutations of the colour universe: vertex 1
    gets ``{0..k-1}`` and vertex 2 one representative per overlap size with it.
    """
    if g.n == 0:
        return True
    if k > colours:
        raise ValueError("list size exceeds the colour universe")
    subsets = [tuple(s) for s in itertools.combinations(range(colours), k)]
    first = tuple(range(k))
    seconds = []
    for overlap in range(max(0, 2 * k - colours), k + 1):
        seconds.append(tuple(range(overlap)) + tuple(range(k, k + (k - overlap))))
    if g.n == 1:
        return True
    for second in seconds:
        for rest in itertools.product(subsets, repeat=g.n - 2):
            if not is_list_colorable(g, (first, second) + rest):
                return False
    return True


__all__ = [
    "ATCertificate",
    "ATDecision",
    "ATNumber",
    "BoundsReport",
    "ComponentBounds",
    "PreconditionError",
    "at_number",
    "at_via_orientation_search",
    "bounds_report",
    "is_choosable_exhaustive",
    "is_f_AT",
    "monomial_coefficient",
]
