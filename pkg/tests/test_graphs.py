from __future__ import annotations

import random
from fractions import Fraction

import networkx as nx
import pytest

from alontarsi.budget import BudgetExceeded
from alontarsi.corpus import all_graphs, connected_graphs, random_multigraph
from alontarsi.graphs import (
    GraphError,
    Hypergraph,
    MultiGraph,
    Orientation,
    canonical_orientation,
    coloring_number_col,
    complete,
    complete_bipartite,
    core,
    cycle,
    cycle_power,
    enumerate_orientations,
    fano,
    line_graph,
    max_density,
    parse_family,
    parse_hypergraph,
    parse_multigraph,
    path,
    structural_at_le_2,
)
from alontarsi.solver import at_number


def test_parse_round_trip_with_comments():
    text = "# triangle plus pendant\n4 4\n1 2\n2 3  # inner\n3 1\n3 4\n"
    g = parse_multigraph(text)
    assert g.n == 4 and g.m == 4
    assert g.edges == ((1, 2), (2, 3), (1, 3), (3, 4))
    assert parse_multigraph(g.to_text()) == g


@pytest.mark.parametrize(
    "text",
    [
        "3 1\n1 1\n",  # loop
        "3 1\n1 4\n",  # out of range
        "3 2\n1 2\n",  # too few edge lines
        "3 1\n1 2 3\n",  # malformed line
        "x 1\n1 2\n",
        "",
    ],
)
def test_parse_rejects_bad_input(text):
    with pytest.raises(GraphError):
        parse_multigraph(text)


def test_parallel_edges_kept():
    g = parse_multigraph("2 3\n1 2\n2 1\n1 2\n")
    assert g.m == 3 and not g.is_simple()
    assert g.degrees()[1:] == [3, 3]


def test_hypergraph_parse_and_fano():
    h = fano()
    assert h.n == 7 and h.m == 7
    assert all(len(e) == 3 for e in h.edges)
    # every pair of points lies on exactly one line
    pairs = [frozenset(p) for e in h.edges for p in ((e[0], e[1]), (e[0], e[2]), (e[1], e[2]))]
    assert len(pairs) == len(set(pairs)) == 21
    assert parse_hypergraph(h.to_text()) == h
    with pytest.raises(GraphError):
        parse_hypergraph("3 1\n2 1 1\n")
    assert h.is_proper((0, 0, 0, 1, 1, 1, 2)) in (True, False)
    assert not Hypergraph(3, ((1, 2, 3),)).is_proper((0, 0, 0))


def test_families_match_networkx():
    assert nx.is_isomorphic(_nx(complete(5)), nx.complete_graph(5))
    assert nx.is_isomorphic(_nx(complete_bipartite(2, 3)), nx.complete_bipartite_graph(2, 3))
    assert nx.is_isomorphic(_nx(cycle(7)), nx.cycle_graph(7))
    assert nx.is_isomorphic(_nx(path(4)), nx.path_graph(4))
    c62 = cycle_power(6, 2)
    assert c62.m == 12 and all(d == 4 for d in c62.degrees()[1:])
    assert parse_family("balanced_multipartite_2:3").m == 12
    with pytest.raises(GraphError):
        parse_family("cycle:2")


def _nx(g: MultiGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


def test_line_graph_of_k4_is_octahedron():
    lg = line_graph(complete(4))
    assert lg.n == 6 and lg.m == 12
    assert nx.is_isomorphic(_nx(lg), nx.line_graph(nx.complete_graph(4)))
    with pytest.raises(GraphError):
        line_graph(MultiGraph(2, ((1, 2), (1, 2))))


def test_orientation_flags_and_out_degrees():
    g = cycle(4)
    d = Orientation.from_flags(g, (0, 0, 0, 1))
    assert d.arcs == ((1, 2), (2, 3), (3, 4), (1, 4))[:3] + ((4, 1),)
    assert d.out_degrees == (1, 1, 1, 1)
    assert d.decreasing == 1 and d.flags == (0, 0, 0, 1)
    assert canonical_orientation(g).decreasing == 0


def test_enumerate_orientations_count_and_budget():
    g = complete(4)
    assert len(list(enumerate_orientations(g, 6))) == 64
    assert all(max(d.out_degrees) <= 2 for d in enumerate_orientations(g, max_outdeg=2))
    # score sequences of K4 tournaments: (0,1,2,3) x24, (1,1,1,3) x8, (0,2,2,2) x8, (1,1,2,2) x24
    assert len(list(enumerate_orientations(g, max_outdeg=2))) == 8 + 24
    with pytest.raises(BudgetExceeded):
        list(enumerate_orientations(g, 6, budget=10))


def test_max_density_and_col():
    assert max_density(complete(4)) == Fraction(3, 2)
    assert max_density(MultiGraph(4, ((1, 2), (3, 4), (3, 4)))) == 1
    assert coloring_number_col(complete(5)) == 4
    assert coloring_number_col(cycle(5)) == 2
    assert coloring_number_col(path(5)) == 1


def test_max_density_matches_networkx_oracle():
    # density max over subsets equals max over induced subgraphs, checked by brute force via networkx
    from itertools import combinations

    for g in all_graphs(5):
        h = _nx(g)
        best = max(
            Fraction(h.subgraph(s).number_of_edges(), len(s))
            for k in range(1, g.n + 1)
            for s in combinations(g.vertices, k)
        )
        assert max_density(g) == best


def test_core_and_structural_test():
    assert core(path(5)).n <= 1
    assert core(MultiGraph(5, ((1, 2), (2, 3), (3, 1), (3, 4), (4, 5)))).n == 3
    assert structural_at_le_2(cycle(6))
    assert not structural_at_le_2(cycle(5))
    assert structural_at_le_2(MultiGraph(3, ((1, 2), (1, 2), (2, 3))))
    assert not structural_at_le_2(MultiGraph(2, ((1, 2),) * 3))
    with pytest.raises(GraphError):
        structural_at_le_2(MultiGraph(4, ((1, 2), (3, 4))))


def test_structural_test_agrees_with_exact_at():
    rng = random.Random(7)
    seen = 0
    while seen < 200:
        g = random_multigraph(rng, max_n=5, max_m=7)
        if not g.is_connected():
            continue
        seen += 1
        assert structural_at_le_2(g) == (at_number(g).value <= 2), g.edges


def test_corpus_counts():
    # OEIS A001349 / A002905 style counts of connected graphs up to isomorphism
    assert len([g for g in all_graphs(5) if g.is_connected()]) == 31
    assert len(all_graphs(5)) == 52
    assert len(connected_graphs(7)) == 131
