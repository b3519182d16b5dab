"""Test corpora: all small graphs up to isomorphism, random multigraphs, random list sizes."""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

import networkx as nx
from networkx.generators.atlas import graph_atlas_g

from .graphs import MultiGraph

ATLAS_MAX_N = 7


def from_networkx(h: nx.Graph) -> MultiGraph:
    index = {v: k + 1 for k, v in enumerate(sorted(h.nodes))}
    edges = sorted((min(index[u], index[v]), max(index[u], index[v])) for u, v in h.edges)
    return MultiGraph(len(index), tuple(edges))


@lru_cache(maxsize=None)
def _atlas() -> tuple[nx.Graph, ...]:
    return tuple(graph_atlas_g())


def all_graphs(max_n: int) -> list[MultiGraph]:
    """Every simple graph on 1..max_n vertices (max_n <= 7), one per isomorphism class."""
    if max_n > ATLAS_MAX_N:
        raise ValueError(f"atlas only covers graphs on at most {ATLAS_MAX_N} vertices")
    return [from_networkx(h) for h in _atlas() if 1 <= h.number_of_nodes() <= max_n]


def _dedupe(graphs: list[nx.Graph]) -> list[nx.Graph]:
    buckets: dict[str, list[nx.Graph]] = {}
    for h in graphs:
        key = nx.weisfeiler_lehman_graph_hash(h)
        bucket = buckets.setdefault(key, [])
        if not any(nx.is_isomorphic(h, other) for other in bucket):
            bucket.append(h)
    return [h for b in buckets.values() for h in b]


@lru_cache(maxsize=None)
def _connected_large(n: int, m: int) -> tuple[MultiGraph, ...]:
    """Connected graphs with ``n > 7`` vertices and ``m`` edges, grown from trees."""
    layer = list(nx.nonisomorphic_trees(n))
    for _ in range(m - (n - 1)):
        grown = []
        for h in layer:
            for u, v in itertools.combinations(range(n), 2):
                if not h.has_edge(u, v):
                    h2 = h.copy()
                    h2.add_edge(u, v)
                    grown.append(h2)
        layer = _dedupe(grown)
    return tuple(from_networkx(h) for h in layer)


def connected_graphs(max_m: int, min_m: int = 1) -> list[MultiGraph]:
    """Every connected simple graph with ``min_m <= m <= max_m`` edges, up to isomorphism."""
    out = [
        from_networkx(h)
        for h in _atlas()
        if h.number_of_nodes() >= 1
        and min_m <= h.number_of_edges() <= max_m
        and nx.is_connected(h)
    ]
    for n in range(ATLAS_MAX_N + 1, max_m + 2):
        for m in range(max(n - 1, min_m), max_m + 1):
            out.extend(_connected_large(n, m))
    return out


def random_multigraph(rng: random.Random, max_n: int = 6, max_m: int = 10, min_n: int = 2) -> MultiGraph:
    n = rng.randint(min_n, max_n)
    m = rng.randint(0, max_m)
    edges = []
    for _ in range(m):
        i, j = rng.sample(range(1, n + 1), 2)
        edges.append((i, j))
    return MultiGraph(n, tuple(edges))


def random_balanced_f(rng: random.Random, g: MultiGraph) -> tuple[int, ...]:
    """Random positive list sizes with ``sum f = m + n``."""
    f = [1] * g.n
    for _ in range(g.m):
        f[rng.randrange(g.n)] += 1
    return tuple(f)


def double_edges(g: MultiGraph) -> list[MultiGraph]:
    """Every multigraph obtained by doubling a single edge of ``g``."""
    return [g.with_edges([e]) for e in g.edges]
