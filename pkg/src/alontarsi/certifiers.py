"""Equivalent certificates that a monomial of the graph polynomial survives.

Four independent routes compute (a multiple of) the coefficient of
``prod x_i^{t_i}`` in ``P_G``:

* direct expansion of ``P_G`` (:func:`graph_polynomial`);
* the permanent of the incidence matrix with repeated columns
  (:func:`coefficient_via_permanent`);
* sums over arc subsets of an orientation (:func:`euler_diff`,
  :func:`weighted_subgraph_sum`);
* signed sums over proper colourings in a box (:func:`signed_coloring_sum`,
  :func:`signed_sum_regular`, :func:`nz_signed_sum`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from . import budget as _budget
from .algebra import (
    LinearForm,
    LinearProduct,
    RingMatrix,
    SparsePolynomial,
    box_points,
    ryser_permanent,
)
from .coloring import graph_value, iter_box_colorings, iter_list_colorings
from .graphs import GraphError, MultiGraph, Orientation, canonical_orientation, line_graph


class PreconditionError(ValueError):
    """An operation's documented precondition does not hold for the input."""


# -- graph polynomial --------------------------------------------------------

def graph_product(g: MultiGraph) -> LinearProduct:
    """``P_G`` in factored form: one ``x_i - x_j`` per edge ``(i, j)``, ``i < j``."""
    return LinearProduct(g.n, [LinearForm.difference(g.n, i, j) for i, j in g.edges])


def graph_polynomial(g: MultiGraph, budget: int | None = None) -> SparsePolynomial:
    return graph_product(g).expand(budget)


def check_list_sizes(g: MultiGraph, f: Sequence[int]) -> tuple[int, ...]:
    f = tuple(f)
    if len(f) != g.n:
        raise PreconditionError(f"list-size vector has {len(f)} entries, graph has {g.n} vertices")
    if any(x < 1 for x in f):
        raise PreconditionError("list sizes must be positive")
    return f


def _require_balanced(g: MultiGraph, f: Sequence[int]) -> None:
    if sum(f) != g.m + g.n:
        raise PreconditionError(f"sum of list sizes is {sum(f)}, need m + n = {g.m + g.n}")


# -- permanent route ----------------------------------------------------------

def build_permanent_matrix(d: Orientation, f: Sequence[int]) -> RingMatrix:
    """Oriented incidence matrix with vertex ``j``'s column repeated ``f[j-1] - 1`` times."""
    g = d.base
    f = check_list_sizes(g, f)
    if sum(x - 1 for x in f) != g.m:
        raise PreconditionError(f"column multiplicities sum to {sum(x - 1 for x in f)}, need m = {g.m}")
    rows = []
    for tail, head in d.arcs:
        row = []
        for v in g.vertices:
            entry = 1 if v == tail else -1 if v == head else 0
            row.extend([entry] * (f[v - 1] - 1))
        rows.append(row)
    return RingMatrix.from_rows(rows)


def coefficient_via_permanent(
    g: MultiGraph, f: Sequence[int], budget: int | None = None
) -> int:
    """Coefficient of ``prod x_i^{f(i)-1}`` in ``P_G`` as ``Per(B) / prod (f(i)-1)!``.

    ``B`` is built on the canonical orientation, whose row product is exactly
    ``P_G``.
    """
    b = build_permanent_matrix(canonical_orientation(g), f)
    per = ryser_permanent(b, budget)
    q, r = divmod(per, math.prod(math.factorial(x - 1) for x in f))
    if r:
        raise ArithmeticError(f"permanent {per} is not divisible by the factorial product")
    return q


# -- arc-subset routes --------------------------------------------------------

@dataclass(frozen=True)
class EulerCount:
    even: int
    odd: int

    @property
    def diff(self) -> int:
        return self.even - self.odd


def _gray_toggles(m: int):
    """Yield ``(k, index)`` for Gray-code step ``k`` toggling arc ``index``."""
    for k in range(1, 2**m):
        yield k, (k & -k).bit_length() - 1


def euler_diff(d: Orientation, budget: int | None = None) -> EulerCount:
    """Count eulerian arc subsets of ``d`` by parity of their size.

    The empty subset is counted as even.
    """
    m = d.base.m
    _budget.require("eulerian subdigraph enumeration", 2**m, budget)
    imbalance = [0] * (d.base.n + 1)
    chosen = [False] * m
    unbalanced = 0
    size = 0
    even, odd = 1, 0
    for _, a in _gray_toggles(m):
        t, h = d.arcs[a]
        step = -1 if chosen[a] else 1
        chosen[a] = not chosen[a]
        size += step
        for v, delta in ((t, step), (h, -step)):
            before = imbalance[v]
            imbalance[v] = before + delta
            unbalanced += (imbalance[v] != 0) - (before != 0)
        if not unbalanced:
            if size & 1:
                odd += 1
            else:
                even += 1
    return EulerCount(even, odd)


def default_weights(d: Orientation) -> list[list[int]]:
    """``u^i_j = j``, the weights that reduce the weighted sum to the eulerian count."""
    return [list(range(1, di + 1)) for di in d.out_degrees]


def weighted_subgraph_sum(
    d: Orientation, weights: Sequence[Sequence[Fraction | int]] | None = None, budget: int | None = None
) -> Fraction | int:
    """``sum_A (-1)^|A| prod_i prod_j ((d+_A(v_i) - d-_A(v_i)) - u^i_j)`` exactly.

    ``weights[i-1]`` holds ``u^i_1 .. u^i_{d_i}``; defaults to ``u^i_j = j``.
    """
    g = d.base
    if weights is None:
        weights = default_weights(d)
    if len(weights) != g.n or any(len(w) != di for w, di in zip(weights, d.out_degrees)):
        raise PreconditionError("weight vector lengths must match the out-degrees")
    _budget.require("weighted subgraph sum", 2**g.m, budget)
    weights = [[Fraction(u) for u in w] for w in weights]
    scale = math.lcm(1, *(u.denominator for w in weights for u in w))
    deg = g.degrees()
    # table[v][b + deg[v]] = prod_j (scale*b - scale*u^v_j), all integers
    table = [[1]]
    for v in g.vertices:
        us = [int(u * scale) for u in weights[v - 1]]
        row = []
        for b in range(-deg[v], deg[v] + 1):
            row.append(math.prod(scale * b - u for u in us))
        table.append(row)
    active = [v for v in g.vertices if weights[v - 1]]

    imbalance = [0] * (g.n + 1)
    chosen = [False] * g.m
    size = 0

    def term() -> int:
        prod = 1
        for v in active:
            x = table[v][imbalance[v] + deg[v]]
            if not x:
                return 0
            prod *= x
        return -prod if size & 1 else prod

    total = term()
    for _, a in _gray_toggles(g.m):
        t, h = d.arcs[a]
        step = -1 if chosen[a] else 1
        chosen[a] = not chosen[a]
        size += step
        imbalance[t] += step
        imbalance[h] -= step
        total += term()
    result = Fraction(total, scale ** sum(d.out_degrees))
    return int(result) if result.denominator == 1 else result


# -- colouring routes -----------------------------------------------------------

def _box_weight(f: Sequence[int], c: Sequence[int]) -> int:
    w = 1
    for fi, ci in zip(f, c):
        w *= math.comb(fi - 1, ci)
    return -w if sum(c) & 1 else w


def signed_coloring_sum(g: MultiGraph, f: Sequence[int], budget: int | None = None) -> int:
    """``sum_c (-1)^{sum c} prod binom(f(i)-1, c(i)) P_G(c)`` over proper box colourings.

    Requires ``sum f = m + n``; the result is nonzero iff ``G`` is f-AT.
    """
    f = check_list_sizes(g, f)
    _require_balanced(g, f)
    total = 0
    for c in iter_box_colorings(g, f, budget):
        total += _box_weight(f, c) * graph_value(g, c)
    return total


def _is_edge_colorable(h: MultiGraph, d: int, budget: int | None) -> bool:
    return any(True for _ in iter_list_colorings(line_graph(h), [range(d)] * h.m, budget))


def signed_sum_regular(
    g: MultiGraph, d: int, preimage: MultiGraph | None = None, budget: int | None = None
) -> int:
    """Sum of ``sign(c)`` over proper colourings ``c`` of ``G`` with colours ``0..d-1``.

    ``sign(c)`` is +1 when ``P_G(c) > 0`` and -1 otherwise.  ``G`` must be the
    line graph of a d-regular d-edge-colourable graph.  If ``preimage`` is
    given it is checked in full (simple, d-regular, d-edge-colourable, and
    ``line_graph(preimage) == G``); otherwise the necessary conditions on
    ``G`` itself are checked: ``2(d-1)``-regular and properly d-colourable.
    """
    if d < 1:
        raise PreconditionError("d must be positive")
    if preimage is not None:
        if not preimage.is_simple():
            raise PreconditionError("pre-image has parallel edges; its line graph is ambiguous")
        if any(x != d for x in preimage.degrees()[1:]):
            raise PreconditionError(f"pre-image is not {d}-regular")
        if sorted(line_graph(preimage).edges) != sorted(g.edges) or preimage.m != g.n:
            raise PreconditionError("graph is not the line graph of the supplied pre-image")
        if not _is_edge_colorable(preimage, d, budget):
            raise PreconditionError(f"pre-image is not {d}-edge-colourable")
    else:
        if any(x != 2 * (d - 1) for x in g.degrees()[1:]):
            raise PreconditionError(f"graph is not {2 * (d - 1)}-regular, so not such a line graph")
    total = 0
    found = False
    for c in iter_box_colorings(g, [d] * g.n, budget):
        found = True
        total += 1 if graph_value(g, c) > 0 else -1
    if not found:
        raise PreconditionError(f"graph has no proper {d}-colouring, so it is not such a line graph")
    return total


@dataclass(frozen=True)
class NonzeroScan:
    """Box points where a polynomial is nonzero, with values and the signed total."""

    points: tuple[tuple[int, ...], ...]
    values: tuple
    total: object


def nz_scan(
    p: Callable[[Sequence[int]], object],
    f: Sequence[int],
    budget: int | None = None,
    check_point: Callable[[tuple[int, ...]], bool] | None = None,
) -> NonzeroScan:
    """Evaluate ``p`` on the box ``prod {0..f(i)-1}``; sum the signed nonzero terms.

    ``check_point`` (if given) must hold at every nonzero point, otherwise
    :class:`PreconditionError` is raised.
    """
    _budget.require("box scan", math.prod(f), budget)
    points, values, total = [], [], 0
    for z in box_points([x - 1 for x in f]):
        val = p(z)
        if not val:
            continue
        if check_point is not None and not check_point(z):
            raise PreconditionError(f"polynomial is nonzero at {z}, which fails the required property")
        points.append(z)
        values.append(val)
        total = total + _box_weight(f, z) * val
    return NonzeroScan(tuple(points), tuple(values), total)


def nz_signed_sum(
    p: Callable[[Sequence[int]], object], f: Sequence[int], budget: int | None = None
):
    """Signed sum over the non-zeros of ``p`` in the box of list sizes ``f``.

    ``p`` must expose ``degree`` equal to ``sum f - len(f)``.  A nonzero result
    means ``p`` has a non-zero in every product of sets of sizes ``f``.
    """
    f = tuple(f)
    if any(x < 1 for x in f):
        raise PreconditionError("list sizes must be positive")
    deg = getattr(p, "degree", None)
    if deg is None:
        raise PreconditionError("evaluator must expose its degree")
    if deg != sum(f) - len(f):
        raise PreconditionError(f"degree {deg} != sum f - n = {sum(f) - len(f)}")
    return nz_scan(p, f, budget).total


__all__ = [
    "EulerCount",
    "GraphError",
    "NonzeroScan",
    "PreconditionError",
    "build_permanent_matrix",
    "coefficient_via_permanent",
    "default_weights",
    "euler_diff",
    "graph_polynomial",
    "graph_product",
    "nz_scan",
    "nz_signed_sum",
    "signed_coloring_sum",
    "signed_sum_regular",
    "weighted_subgraph_sum",
]
