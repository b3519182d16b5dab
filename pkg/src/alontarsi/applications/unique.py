"""AT certificates for uniquely colourable graphs."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from ..certifiers import PreconditionError, signed_coloring_sum
from ..coloring import graph_value, iter_list_colorings, iter_partitions
from ..graphs import MultiGraph


@dataclass(frozen=True)
class UniquePartition:
    """Colour classes of a unique k-colouring, ordered by their smallest vertex."""

    k: int
    classes: tuple[tuple[int, ...], ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    def colour_of(self) -> dict[int, int]:
        return {v: i for i, cls in enumerate(self.classes) for v in cls}

    def edge_counts(self, g: MultiGraph) -> dict[tuple[int, int], int]:
        """``e(A_i, A_j)`` for ``i < j`` (0-based class indices)."""
        where = self.colour_of()
        counts = {pair: 0 for pair in itertools.combinations(range(self.k), 2)}
        for u, v in g.edges:
            a, b = sorted((where[u], where[v]))
            counts[(a, b)] += 1
        return counts


@dataclass(frozen=True)
class UniqueColoring:
    """Outcome of :func:`unique_coloring`: ``status`` is unique, not-unique or none."""

    status: str
    partition: UniquePartition | None = None


def unique_coloring(g: MultiGraph, k: int, budget: int | None = None) -> UniqueColoring:
    """Decide whether ``G`` has exactly one proper k-colouring up to renaming colours.

    Colourings are enumerated as partitions into at most ``k`` independent
    sets.  ``G`` is uniquely k-colourable when there is exactly one such
    partition and it has exactly ``k`` classes.
    """
    found = []
    for c in iter_partitions(g, k, budget):
        found.append(c)
        if len(found) > 1:
            return UniqueColoring("not-unique")
    if not found:
        return UniqueColoring("none")
    c = found[0]
    if len(set(c)) != k:
        return UniqueColoring("not-unique")
    classes = tuple(tuple(v for v in g.vertices if c[v - 1] == i) for i in range(k))
    return UniqueColoring("unique", UniquePartition(k, classes))


@dataclass
class CertificateReport:
    applicable: bool
    at: int | None
    details: dict = field(default_factory=dict)


def _require_unique(g: MultiGraph, k: int, budget: int | None) -> UniquePartition:
    res = unique_coloring(g, k, budget)
    if res.status != "unique":
        raise PreconditionError(f"graph is not uniquely {k}-colourable ({res.status})")
    return res.partition


def min_edge_unique_certificate(g: MultiGraph, k: int, budget: int | None = None) -> CertificateReport:
    """AT(G) = k for uniquely k-colourable G with exactly ``(k-1)n - C(k,2)`` edges.

    Rebuilds the list assignment from the argument (class ``i``'s smallest
    vertex gets ``{0..i}``, every other vertex ``{0..k-1}``), checks the list
    sizes sum to ``m + n`` and that exactly one list colouring exists, and
    evaluates the signed colouring sum for those list sizes.
    """
    part = _require_unique(g, k, budget)
    target = (k - 1) * g.n - math.comb(k, 2)
    details: dict = {"required_edges": target, "m": g.m, "classes": [list(c) for c in part.classes]}
    if g.m != target:
        return CertificateReport(False, None, details)
    lists = [tuple(range(k))] * g.n
    for i, cls in enumerate(part.classes):
        lists[cls[0] - 1] = tuple(range(i + 1))
    sizes = [len(lst) for lst in lists]
    colourings = list(itertools.islice(iter_list_colorings(g, lists, budget), 2))
    total = signed_coloring_sum(g, sizes, budget)
    details.update(
        list_sizes=sizes,
        list_colourings=len(colourings),
        signed_sum=total,
    )
    ok = sum(sizes) == g.m + g.n and len(colourings) == 1 and total != 0
    return CertificateReport(ok, k if ok else None, details)


@dataclass(frozen=True)
class ParityCounts:
    r_odd: int
    r_even: int
    p_odd: int
    p_even: int
    bound_odd_first: int
    bound_even_first: int


def parity_counts(g: MultiGraph, part: UniquePartition) -> ParityCounts:
    k, n = part.k, g.n
    sizes = part.sizes
    counts = part.edge_counts(g)
    r_o = sum(1 for s in sizes if s % 2)
    r_e = k - r_o
    p_o = sum(1 for (i, j), e in counts.items() if sizes[i] % 2 and sizes[j] % 2 and e % 2)
    p_e = sum(1 for (i, j), e in counts.items() if not sizes[i] % 2 and not sizes[j] % 2 and e % 2)
    b1 = (n - r_o) * (k - 1) + math.comb(r_o, 2) - p_e
    b2 = (n - r_e) * (k - 1) + math.comb(r_e, 2) - p_o
    return ParityCounts(r_o, r_e, p_o, p_e, b1, b2)


def parity_unique_certificate(g: MultiGraph, k: int, budget: int | None = None) -> CertificateReport:
    """AT(G) = k for uniquely k-colourable G under the class-parity edge bound.

    On success the report carries the augmented multigraphs ``G'`` (odd
    cross-class counts between non-special classes patched by one edge) and
    ``G''`` (padded with parallel edges between the first two classes until
    the list sizes sum to ``e(G'') + n``), the list sizes, the signed colouring
    sum of ``G''`` and whether every list colouring of ``G''`` has the same
    signed weight.
    """
    part = _require_unique(g, k, budget)
    pc = parity_counts(g, part)
    holds = {"odd": g.m <= pc.bound_odd_first, "even": g.m <= pc.bound_even_first}
    details: dict = {
        "r_odd": pc.r_odd,
        "r_even": pc.r_even,
        "p_odd": pc.p_odd,
        "p_even": pc.p_even,
        "bound_odd_first": pc.bound_odd_first,
        "bound_even_first": pc.bound_even_first,
        "m": g.m,
        "branches": [b for b, ok in holds.items() if ok],
    }
    if not any(holds.values()) or k < 2:
        # the padding step needs two colour classes to join
        return CertificateReport(False, None, details)

    # the argument treats the larger bound; special classes get shortened lists
    special_odd = pc.bound_odd_first >= pc.bound_even_first
    sizes = part.sizes
    special = [i for i in range(k) if (sizes[i] % 2 == 1) == special_odd]
    others = [i for i in range(k) if i not in special]
    order = special + others
    classes = [part.classes[i] for i in order]
    r = len(special)

    where = {v: idx for idx, cls in enumerate(classes) for v in cls}
    cross: dict[tuple[int, int], int] = {}
    for u, v in g.edges:
        a, b = sorted((where[u], where[v]))
        cross[(a, b)] = cross.get((a, b), 0) + 1
    patch = [
        (classes[i][0], classes[j][0])
        for i, j in itertools.combinations(range(r, k), 2)
        if cross.get((i, j), 0) % 2
    ]
    g1 = g.with_edges(patch)

    lists = [tuple(range(k))] * g.n
    for i in range(r):
        lists[classes[i][0] - 1] = tuple(range(i + 1))
    f = [len(lst) for lst in lists]
    s = sum(f) - (g1.m + g.n)
    if s < 0:
        raise ArithmeticError("list sizes fall short of m' + n despite the bound")
    g2 = g1.with_edges([(classes[0][0], classes[1][0])] * s)

    signs = set()
    for c in iter_list_colorings(g2, lists, budget):
        val = graph_value(g2, c)
        signs.add((-1) ** sum(c) * (1 if val > 0 else -1))
    total = signed_coloring_sum(g2, f, budget)
    details.update(
        branch="odd" if special_odd else "even",
        class_order=[list(c) for c in classes],
        patched_edges=[list(e) for e in patch],
        padding_edges=s,
        list_sizes=f,
        g_prime=g1,
        g_double_prime=g2,
        signed_sum=total,
        sign_preserving=len(signs) == 1,
    )
    ok = total != 0
    return CertificateReport(ok, k if ok else None, details)
