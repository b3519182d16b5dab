"""Backtracking over proper (list) colourings."""

from __future__ import annotations

from typing import Iterator, Sequence

from . import budget as _budget
from .graphs import MultiGraph


def iter_list_colorings(
    g: MultiGraph, lists: Sequence[Sequence[int]], budget: int | None = None
) -> Iterator[tuple[int, ...]]:
    """Proper colourings ``c`` with ``c[v-1] in lists[v-1]``.

    Vertices are coloured in label order and colours tried in the order given,
    so the output order is deterministic.
    """
    if len(lists) != g.n:
        raise ValueError(f"need {g.n} lists, got {len(lists)}")
    counter = _budget.Counter("colouring enumeration", budget)
    earlier = [[] for _ in range(g.n + 1)]
    for i, j in g.edges:
        earlier[j].append(i)
    colour = [0] * (g.n + 1)

    def extend(v: int):
        if v > g.n:
            yield tuple(colour[1:])
            return
        for c in lists[v - 1]:
            counter.spend()
            if all(colour[u] != c for u in earlier[v]):
                colour[v] = c
                yield from extend(v + 1)

    yield from extend(1)


def iter_box_colorings(
    g: MultiGraph, sizes: Sequence[int], budget: int | None = None
) -> Iterator[tuple[int, ...]]:
    """Proper colourings with ``0 <= c[v-1] < sizes[v-1]``."""
    return iter_list_colorings(g, [range(s) for s in sizes], budget)


def graph_value(g: MultiGraph, colouring: Sequence[int]) -> int:
    """``P_G`` at ``colouring``: product of ``c_i - c_j`` over edges ``i < j``."""
    value = 1
    for i, j in g.edges:
        value *= colouring[i - 1] - colouring[j - 1]
        if not value:
            return 0
    return value


def is_proper(g: MultiGraph, colouring: Sequence[int]) -> bool:
    return all(colouring[i - 1] != colouring[j - 1] for i, j in g.edges)


def is_list_colorable(g: MultiGraph, lists: Sequence[Sequence[int]]) -> bool:
    """Whether some proper colouring picks every vertex's colour from its list."""
    for _ in iter_list_colorings(g, lists):
        return True
    return False


def iter_partitions(g: MultiGraph, k: int, budget: int | None = None) -> Iterator[tuple[int, ...]]:
    """Proper colourings with at most ``k`` colours, one per colour-class partition.

    A colouring is emitted only in its canonical form: colours appear in order
    of first use along the vertex labels.
    """
    counter = _budget.Counter("partition enumeration", budget)
    earlier = [[] for _ in range(g.n + 1)]
    for i, j in g.edges:
        earlier[j].append(i)
    colour = [0] * (g.n + 1)

    def extend(v: int, used: int):
        if v > g.n:
            yield tuple(colour[1:])
            return
        for c in range(min(used + 1, k)):
            counter.spend()
            if all(colour[u] != c for u in earlier[v]):
                colour[v] = c
                yield from extend(v + 1, max(used, c + 1))

    yield from extend(1, 0)


def chromatic_number(g: MultiGraph, budget: int | None = None) -> int:
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        for _ in iter_partitions(g, k, budget):
            return k
    return g.n
