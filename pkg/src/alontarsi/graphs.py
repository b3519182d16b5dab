"""Multigraphs, hypergraphs and orientations.

Vertices are labelled ``1..n``.  Edge order is part of a graph's identity: it
fixes the row order of incidence matrices, so the same input always produces
the same matrices, expansions and reports.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from . import budget as _budget


class GraphError(ValueError):
    """Malformed graph input or an invalid graph construction."""


@dataclass(frozen=True)
class MultiGraph:
    """Undirected loopless multigraph on vertices ``1..n``.

    ``edges`` is an ordered tuple of pairs ``(i, j)`` with ``i < j``; repeated
    pairs are parallel edges.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"vertex count must be non-negative, got {self.n}")
        normalized = []
        for e in self.edges:
            i, j = e
            if i == j:
                raise GraphError(f"loop at vertex {i}")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise GraphError(f"edge {e} has an endpoint outside 1..{self.n}")
            normalized.append((i, j) if i < j else (j, i))
        object.__setattr__(self, "edges", tuple(normalized))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def degrees(self) -> list[int]:
        """Degree of every vertex, index 0 unused; parallel edges count."""
        deg = [0] * (self.n + 1)
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg

    def neighbours(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n + 1)]
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def is_simple(self) -> bool:
        return len(set(self.edges)) == len(self.edges)

    def components(self) -> list[list[int]]:
        """Vertex sets of the connected components, each sorted, ordered by minimum."""
        adj = self.neighbours()
        seen = [False] * (self.n + 1)
        comps = []
        for v in self.vertices:
            if seen[v]:
                continue
            stack, comp = [v], []
            seen[v] = True
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def induced(self, vertices: Sequence[int]) -> MultiGraph:
        """Induced subgraph relabelled to ``1..len(vertices)`` in the given order."""
        index = {v: k + 1 for k, v in enumerate(vertices)}
        edges = [(index[i], index[j]) for i, j in self.edges if i in index and j in index]
        return MultiGraph(len(vertices), tuple(edges))

    def without_edge(self, k: int) -> MultiGraph:
        """Drop the edge at 0-based position ``k``."""
        return MultiGraph(self.n, self.edges[:k] + self.edges[k + 1:])

    def with_edges(self, extra: Sequence[tuple[int, int]]) -> MultiGraph:
        return MultiGraph(self.n, self.edges + tuple(extra))

    def disjoint_union(self, other: MultiGraph) -> MultiGraph:
        shifted = tuple((i + self.n, j + self.n) for i, j in other.edges)
        return MultiGraph(self.n + other.n, self.edges + shifted)

    def to_text(self) -> str:
        lines = [f"{self.n} {self.m}"]
        lines.extend(f"{i} {j}" for i, j in self.edges)
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Hypergraph:
    """Hypergraph on ``1..n``; every edge is a sorted tuple of at least 2 distinct vertices."""

    n: int
    edges: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        normalized = []
        for e in self.edges:
            s = tuple(sorted(e))
            if len(s) < 2:
                raise GraphError(f"hyperedge {e} has fewer than 2 vertices")
            if len(set(s)) != len(s):
                raise GraphError(f"hyperedge {e} repeats a vertex")
            if s[0] < 1 or s[-1] > self.n:
                raise GraphError(f"hyperedge {e} has a vertex outside 1..{self.n}")
            normalized.append(s)
        object.__setattr__(self, "edges", tuple(normalized))

    @property
    def m(self) -> int:
        return len(self.edges)

    def is_proper(self, colouring: Sequence[int]) -> bool:
        """True iff no edge is monochromatic; ``colouring`` is 0-indexed by vertex - 1."""
        return all(len({colouring[v - 1] for v in e}) > 1 for e in self.edges)

    def to_text(self) -> str:
        lines = [f"{self.n} {self.m}"]
        lines.extend(" ".join(map(str, (len(e),) + e)) for e in self.edges)
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Orientation:
    """An orientation of ``base``: ``arcs[k]`` is ``(tail, head)`` for edge ``k``."""

    base: MultiGraph
    arcs: tuple[tuple[int, int], ...]
    out_degrees: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.arcs) != self.base.m:
            raise GraphError("orientation must direct every edge exactly once")
        d = [0] * self.base.n
        for (i, j), (t, h) in zip(self.base.edges, self.arcs):
            if {t, h} != {i, j}:
                raise GraphError(f"arc {(t, h)} does not match edge {(i, j)}")
            d[t - 1] += 1
        object.__setattr__(self, "out_degrees", tuple(d))

    @classmethod
    def from_flags(cls, base: MultiGraph, flags: Sequence[int]) -> Orientation:
        """Flag 0 keeps edge ``(i, j)`` as ``i -> j``; flag 1 reverses it."""
        arcs = tuple((j, i) if f else (i, j) for (i, j), f in zip(base.edges, flags))
        return cls(base, arcs)

    @property
    def flags(self) -> tuple[int, ...]:
        return tuple(int(t > h) for t, h in self.arcs)

    @property
    def decreasing(self) -> int:
        """Number of arcs whose tail has the larger label."""
        return sum(t > h for t, h in self.arcs)


def parse_multigraph(text: str) -> MultiGraph:
    """Parse ``n m`` followed by ``m`` lines ``i j``; ``#`` lines are comments."""
    rows = _data_rows(text)
    if not rows:
        raise GraphError("empty graph file")
    n, m = _header(rows[0])
    body = rows[1:]
    if len(body) != m:
        raise GraphError(f"header declares {m} edges, found {len(body)}")
    edges = []
    for lineno, row in body:
        if len(row) != 2:
            raise GraphError(f"line {lineno}: expected 'i j', got {' '.join(row)!r}")
        edges.append(tuple(_int(tok, lineno) for tok in row))
    return MultiGraph(n, tuple(edges))


def parse_hypergraph(text: str) -> Hypergraph:
    """Parse ``n m`` followed by ``m`` lines ``k v1 ... vk``."""
    rows = _data_rows(text)
    if not rows:
        raise GraphError("empty hypergraph file")
    n, m = _header(rows[0])
    body = rows[1:]
    if len(body) != m:
        raise GraphError(f"header declares {m} edges, found {len(body)}")
    edges = []
    for lineno, row in body:
        nums = [_int(tok, lineno) for tok in row]
        if not nums or nums[0] != len(nums) - 1:
            raise GraphError(f"line {lineno}: size prefix does not match vertex count")
        edges.append(tuple(nums[1:]))
    return Hypergraph(n, tuple(edges))


def _data_rows(text: str) -> list[tuple[int, list[str]]]:
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        rows.append((lineno, stripped.split()))
    return rows


def _header(row: tuple[int, list[str]]) -> tuple[int, int]:
    lineno, toks = row
    if len(toks) != 2:
        raise GraphError(f"line {lineno}: header must be 'n m'")
    n, m = (_int(t, lineno) for t in toks)
    if n < 0 or m < 0:
        raise GraphError(f"line {lineno}: negative size in header")
    return n, m


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphError(f"line {lineno}: {token!r} is not an integer") from None


# -- families ----------------------------------------------------------------

FANO_EDGES = ((1, 2, 4), (1, 3, 6), (1, 5, 7), (2, 3, 5), (3, 4, 7), (2, 6, 7), (4, 5, 6))

FAMILIES = (
    "complete",
    "complete_bipartite",
    "balanced_multipartite_2",
    "cycle",
    "cycle_power",
    "path",
    "edgeless",
    "fano",
)


def complete(n: int) -> MultiGraph:
    return MultiGraph(n, tuple(itertools.combinations(range(1, n + 1), 2)))


def complete_bipartite(a: int, b: int) -> MultiGraph:
    edges = tuple((i, a + j) for i in range(1, a + 1) for j in range(1, b + 1))
    return MultiGraph(a + b, edges)


def balanced_multipartite_2(parts: int) -> MultiGraph:
    """K_{2*n}: parts ``{2i-1, 2i}``, every cross-part pair joined."""
    n = 2 * parts
    edges = tuple(
        (i, j) for i, j in itertools.combinations(range(1, n + 1), 2) if (i - 1) // 2 != (j - 1) // 2
    )
    return MultiGraph(n, edges)


def cycle(n: int) -> MultiGraph:
    if n < 3:
        raise GraphError("a simple cycle needs at least 3 vertices")
    return MultiGraph(n, tuple((i, i + 1) for i in range(1, n)) + ((1, n),))


def cycle_power(n: int, p: int) -> MultiGraph:
    """p-th power of the n-cycle; vertex ``i+1`` stands for ``i`` in Z_n."""
    if n < 3 or p < 1:
        raise GraphError("cycle_power needs n >= 3 and p >= 1")
    pairs = set()
    for i in range(n):
        for step in range(1, p + 1):
            j = (i + step) % n
            if i != j:
                pairs.add((min(i, j) + 1, max(i, j) + 1))
    return MultiGraph(n, tuple(sorted(pairs)))


def path(n: int) -> MultiGraph:
    if n < 1:
        raise GraphError("a path needs at least one vertex")
    return MultiGraph(n, tuple((i, i + 1) for i in range(1, n)))


def edgeless(n: int) -> MultiGraph:
    return MultiGraph(n, ())


def fano() -> Hypergraph:
    return Hypergraph(7, FANO_EDGES)


def generate_family(family: str, *params: int) -> MultiGraph | Hypergraph:
    """Build a named family member, e.g. ``generate_family("cycle_power", 6, 2)``."""
    arity = {
        "complete": 1,
        "complete_bipartite": 2,
        "balanced_multipartite_2": 1,
        "cycle": 1,
        "cycle_power": 2,
        "path": 1,
        "edgeless": 1,
        "fano": 0,
    }
    if family not in arity:
        raise GraphError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    if len(params) != arity[family]:
        raise GraphError(f"{family} takes {arity[family]} parameter(s), got {len(params)}")
    if any(p < 0 for p in params):
        raise GraphError(f"{family}: parameters must be non-negative")
    builder = {
        "complete": complete,
        "complete_bipartite": complete_bipartite,
        "balanced_multipartite_2": balanced_multipartite_2,
        "cycle": cycle,
        "cycle_power": cycle_power,
        "path": path,
        "edgeless": edgeless,
        "fano": fano,
    }[family]
    return builder(*params)


def parse_family(spec: str) -> MultiGraph | Hypergraph:
    """``"complete:4"`` or ``"cycle_power:6,2"`` or ``"fano"``."""
    name, _, rest = spec.partition(":")
    try:
        params = [int(p) for p in rest.split(",")] if rest else []
    except ValueError:
        raise GraphError(f"bad family parameters in {spec!r}") from None
    return generate_family(name.strip(), *params)


# -- derived graphs and orientations -----------------------------------------

def line_graph(h: MultiGraph) -> MultiGraph:
    """Line graph of a simple graph; vertex ``k`` is edge ``k`` of ``h``."""
    if not h.is_simple():
        raise GraphError("line graph is only defined here for graphs without parallel edges")
    edges = []
    for a, b in itertools.combinations(range(h.m), 2):
        if set(h.edges[a]) & set(h.edges[b]):
            edges.append((a + 1, b + 1))
    return MultiGraph(h.m, tuple(edges))


def canonical_orientation(g: MultiGraph) -> Orientation:
    """Every edge ``(i, j)``, ``i < j``, directed ``i -> j``; no decreasing arcs."""
    return Orientation(g, g.edges)


def enumerate_orientations(
    g: MultiGraph, max_outdeg: int, budget: int | None = None
) -> Iterator[Orientation]:
    """All orientations with every out-degree at most ``max_outdeg``.

    Orientation number ``x`` reverses edge ``k`` iff bit ``k`` of ``x`` is set;
    orientations are produced in increasing ``x``.
    """
    _budget.require("orientation enumeration", 2**g.m, budget)
    m, n = g.m, g.n
    for x in range(2**m):
        d = [0] * (n + 1)
        ok = True
        for k, (i, j) in enumerate(g.edges):
            t = j if (x >> k) & 1 else i
            d[t] += 1
            if d[t] > max_outdeg:
                ok = False
                break
        if ok:
            yield Orientation.from_flags(g, [(x >> k) & 1 for k in range(m)])


# -- cheap structural bounds -------------------------------------------------

def max_density(g: MultiGraph, budget: int | None = None) -> Fraction:
    """max e(H)/v(H) over nonempty (induced) subgraphs, as an exact fraction."""
    if g.n == 0:
        raise GraphError("maximum density of the empty graph is undefined")
    _budget.require("max density subset search", 2**g.n, budget)
    masks = [(1 << (i - 1)) | (1 << (j - 1)) for i, j in g.edges]
    best = Fraction(0)
    for s in range(1, 2**g.n):
        e = sum(1 for em in masks if em & s == em)
        dens = Fraction(e, bin(s).count("1"))
        if dens > best:
            best = dens
    return best


def coloring_number_col(g: MultiGraph) -> int:
    """max over subgraphs of the minimum degree (the degeneracy)."""
    deg = g.degrees()
    adj: list[list[int]] = [[] for _ in range(g.n + 1)]
    for i, j in g.edges:
        adj[i].append(j)
        adj[j].append(i)
    alive = set(g.vertices)
    best = 0
    while alive:
        v = min(alive, key=lambda u: (deg[u], u))
        best = max(best, deg[v])
        alive.remove(v)
        for w in adj[v]:
            if w in alive:
                deg[w] -= 1
    return best


def core(g: MultiGraph) -> MultiGraph:
    """Remove vertices of degree at most 1 until none remain; relabelled induced remainder."""
    deg = g.degrees()
    alive = set(g.vertices)
    adj: list[list[int]] = [[] for _ in range(g.n + 1)]
    for i, j in g.edges:
        adj[i].append(j)
        adj[j].append(i)
    queue = [v for v in g.vertices if deg[v] <= 1]
    while queue:
        v = queue.pop()
        if v not in alive:
            continue
        alive.remove(v)
        for w in adj[v]:
            if w in alive:
                deg[w] -= 1
                if deg[w] <= 1:
                    queue.append(w)
    return g.induced(sorted(alive))


def structural_at_le_2(g: MultiGraph) -> bool:
    """AT(G) <= 2 for connected G: the core is empty, a single vertex or an even cycle.

    A doubled edge is a cycle of length 2 here, so it counts as even.
    """
    if not g.is_connected():
        raise GraphError("structural_at_le_2 requires a connected graph")
    c = core(g)
    if c.n <= 1:
        return True
    return c.is_connected() and all(d == 2 for d in c.degrees()[1:]) and c.n % 2 == 0
