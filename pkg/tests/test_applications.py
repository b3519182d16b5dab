from __future__ import annotations

import itertools

import pytest

from alontarsi.applications import (
    QSpec,
    fano_q,
    format_qspec,
    hypergraph_f_AT,
    hypergraph_product,
    min_edge_unique_certificate,
    parity_counts,
    parity_unique_certificate,
    parse_qspec,
    t_cycle_product,
    t_list_cycle_check,
    unique_coloring,
)
from alontarsi.algebra import CyclotomicInt, LinearForm
from alontarsi.certifiers import PreconditionError
from alontarsi.coloring import iter_list_colorings
from alontarsi.graphs import (
    GraphError,
    Hypergraph,
    MultiGraph,
    balanced_multipartite_2,
    complete,
    cycle,
    cycle_power,
    fano,
    path,
)
from alontarsi.solver import at_number

FANO_F = (3, 2, 1, 2, 2, 2, 2)


# -- unique colourings ------------------------------------------------------------------

def test_unique_coloring_status():
    assert unique_coloring(complete(3), 3).status == "unique"
    assert unique_coloring(cycle(6), 2).status == "unique"
    assert unique_coloring(cycle(5), 2).status == "none"
    assert unique_coloring(cycle(6), 3).status == "not-unique"
    # a single edge has one partition into at most 3 classes but only uses two
    assert unique_coloring(path(2), 3).status == "not-unique"
    part = unique_coloring(balanced_multipartite_2(3), 3).partition
    assert part.classes == ((1, 2), (3, 4), (5, 6)) and part.sizes == (2, 2, 2)


@pytest.mark.parametrize("k", range(1, 6))
def test_min_edge_certificate_on_complete_graphs(k):
    rep = min_edge_unique_certificate(complete(k), k)
    assert rep.applicable and rep.at == k == at_number(complete(k)).value
    assert rep.details["list_colourings"] == 1


def test_min_edge_certificate_rejects_extra_edges():
    rep = min_edge_unique_certificate(balanced_multipartite_2(3), 3)
    assert not rep.applicable and rep.details["required_edges"] == 9
    with pytest.raises(PreconditionError):
        min_edge_unique_certificate(cycle(6), 3)


def test_min_edge_lists_have_single_colouring():
    # a 2-tree: uniquely 3-colourable with 2n - 3 edges
    g = MultiGraph(5, ((1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)))
    rep = min_edge_unique_certificate(g, 3)
    assert rep.applicable and rep.at == 3 == at_number(g).value
    sizes = rep.details["list_sizes"]
    assert sum(sizes) == g.m + g.n


@pytest.mark.parametrize(
    "g, k",
    [(balanced_multipartite_2(3), 3), (cycle_power(6, 2), 3), (cycle(6), 2)],
)
def test_parity_certificate(g, k):
    rep = parity_unique_certificate(g, k)
    assert rep.applicable and rep.at == k == at_number(g).value
    assert rep.details["sign_preserving"]
    gp = rep.details["g_prime"]
    gpp = rep.details["g_double_prime"]
    # G' only adds edges; G'' adds parallel copies on top of G'
    assert set(g.edges) <= set(gp.edges) and gpp.m >= gp.m


def test_parity_certificate_values():
    rep = parity_unique_certificate(balanced_multipartite_2(3), 3)
    assert rep.details["branch"] == "odd"
    assert rep.details["bound_odd_first"] == 12
    assert rep.details["signed_sum"] == 384
    assert parity_unique_certificate(cycle_power(6, 2), 3).details["signed_sum"] == -384
    c6 = parity_unique_certificate(cycle(6), 2)
    assert c6.details["branch"] == "even" and c6.details["signed_sum"] == -2


def test_parity_certificate_single_class():
    rep = parity_unique_certificate(MultiGraph(3, ()), 1)
    assert not rep.applicable and rep.at is None


def test_parity_counts_k23():
    g = balanced_multipartite_2(3)
    pc = parity_counts(g, unique_coloring(g, 3).partition)
    assert (pc.r_odd, pc.r_even) == (0, 3)


# -- hypergraphs --------------------------------------------------------------------

def test_qspec_parse_and_format():
    q = parse_qspec("# demo\n1 -1 0 | 0\n0 1 1 | -2\n")
    assert isinstance(q, QSpec) and q.degree == 2
    assert q((3, 1, 0)) == 2 * (1 - 2)
    assert parse_qspec(format_qspec(q)).forms == q.forms
    with pytest.raises(GraphError):
        parse_qspec("1 2 | 0\n1 | 0\n")


def test_fano_bundled_polynomial():
    h, q = fano(), fano_q()
    assert q.nvars == 7 and q.degree == 7
    rep = hypergraph_f_AT(h, q, FANO_F)
    assert rep.decision
    assert rep.points == ((2, 0, 0, 1, 1, 0, 1),)
    assert rep.values == (16,)
    assert rep.total == -16
    assert h.is_proper(rep.points[0])


def test_fano_polynomial_vanishes_on_improper_points():
    h, q = fano(), fano_q()
    for z in itertools.product(range(3), repeat=7):
        if not h.is_proper(z):
            assert q(z) == 0


def test_fano_cyclotomic_route():
    rep = hypergraph_f_AT(fano(), 3, FANO_F)
    assert rep.decision and len(rep.points) == 9
    w = CyclotomicInt.root(3)
    assert rep.total == -4 + 2 * w


def test_cyclotomic_product_vanishes_exactly_on_monochromatic_edges():
    h = Hypergraph(4, ((1, 2, 3), (2, 3, 4)))
    p = hypergraph_product(h, 3)
    assert p.degree == 2
    for z in itertools.product(range(3), repeat=4):
        assert bool(p(z)) == h.is_proper(z)


def test_hypergraph_preconditions():
    h = fano()
    with pytest.raises(PreconditionError):
        hypergraph_f_AT(h, fano_q(), (3,) * 7)  # sum f != m + n
    short = QSpec(7, fano_q().forms[:6])
    with pytest.raises(PreconditionError):
        hypergraph_f_AT(h, short, FANO_F)
    # a polynomial that is nonzero at an improper point is rejected
    nonvanishing = QSpec(7, [LinearForm((1, 0, 0, 0, 0, 0, 0), 1)] * 7)
    with pytest.raises(PreconditionError):
        hypergraph_f_AT(h, nonvanishing, FANO_F)


# -- T-list colouring of even cycles --------------------------------------------------

@pytest.mark.parametrize(
    "length, T, total",
    [(4, {0}, 2), (4, {0, 1}, 212544), (6, {0, 1}, 68117760), (6, {0, 2}, 68117760)],
)
def test_t_list_sums(length, T, total):
    rep = t_list_cycle_check(length, T)
    assert rep.total == total
    assert rep.nonzeros_are_constant and rep.choosable
    assert rep.nonzeros == tuple((a,) * length for a in range(2 * len(T)))
    assert rep.q_coefficient != 0 and rep.p_coefficient == -rep.q_coefficient


def test_t_list_coefficients():
    assert t_list_cycle_check(4, {0}).q_coefficient == -2
    assert t_list_cycle_check(4, {0, 1}).p_coefficient == 164


def test_t_list_choosability_by_brute_force():
    # C_4 with T = {0, 1}: vertex 1 keeps {0..3}, the others range over all 4-subsets of {0..5}
    T = {0, 1}
    edges = ((1, 2), (2, 3), (3, 4), (1, 4))
    subsets = list(itertools.combinations(range(6), 4))
    q = t_cycle_product(4, frozenset(T))
    for lists in itertools.product(subsets, repeat=3):
        lists = ((0, 1, 2, 3),) + lists
        assert any(
            q(c) != 0
            for c in itertools.product(*lists)
            if all(abs(c[i - 1] - c[j - 1]) not in T for i, j in edges)
        )


def test_t_list_preconditions():
    with pytest.raises(PreconditionError):
        t_list_cycle_check(5, {0})
    with pytest.raises(PreconditionError):
        t_list_cycle_check(4, {1})
    with pytest.raises(PreconditionError):
        t_list_cycle_check(2, {0})


def test_list_colouring_enumerator_respects_lists():
    g = cycle(4)
    lists = [(0, 1), (1, 2), (0, 2), (1, 2)]
    found = list(iter_list_colorings(g, lists))
    brute = [
        c for c in itertools.product(*lists)
        if all(c[i - 1] != c[j - 1] for i, j in g.edges)
    ]
    assert sorted(found) == sorted(brute)
