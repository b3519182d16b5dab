from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from alontarsi.budget import BUDGET_ENV, BudgetExceeded, default_budget
from alontarsi.certifiers import graph_polynomial
from alontarsi.coloring import chromatic_number
from alontarsi.corpus import all_graphs, random_multigraph
from alontarsi.graphs import (
    MultiGraph,
    balanced_multipartite_2,
    coloring_number_col,
    complete,
    complete_bipartite,
    cycle,
    cycle_power,
    max_density,
    path,
)
from alontarsi.solver import (
    ATCertificate,
    at_number,
    at_via_orientation_search,
    bounds_report,
    is_choosable_exhaustive,
    is_f_AT,
    monomial_coefficient,
)


@pytest.mark.parametrize(
    "g, expected",
    [
        (complete(1), 1),
        (complete(4), 4),
        (complete(5), 5),
        (complete_bipartite(2, 2), 2),
        (complete_bipartite(3, 3), 3),
        (cycle(5), 3),
        (cycle(6), 2),
        (balanced_multipartite_2(3), 3),
        (cycle_power(6, 2), 3),
        (path(5), 2),
        (MultiGraph(2, ((1, 2),)), 2),
        (MultiGraph(3, ()), 1),
    ],
)
def test_known_at_numbers(g, expected):
    res = at_number(g)
    assert res.value == expected
    assert res.certificate.verify(g)


def test_parallel_edges():
    double = MultiGraph(2, ((1, 2), (1, 2)))
    triple = MultiGraph(2, ((1, 2),) * 3)
    # (x1 - x2)^2 keeps -2 x1 x2, so a doubled edge still has AT 2
    assert graph_polynomial(double).coefficient((1, 1)) == -2
    assert at_number(double).value == 2
    assert at_number(triple).value == 3


def test_is_f_at_certificate_and_monotonicity():
    k3 = complete(3)
    assert not is_f_AT(k3, (2, 2, 2))
    res = is_f_AT(k3, (3, 2, 1))
    assert res and res.certificate.exponent == (2, 1, 0)
    assert res.certificate.verify(k3, (3, 2, 1))
    # raising any list size keeps the property
    assert is_f_AT(k3, (3, 3, 1)) and is_f_AT(k3, (4, 2, 1))


def test_certificate_round_trip_and_tamper():
    g = complete(4)
    cert = at_number(g).certificate
    again = ATCertificate.from_dict(cert.as_dict())
    assert again == cert and again.verify(g)
    bad = ATCertificate("monomial", cert.bound, cert.exponent, cert.coefficient + 1)
    assert not bad.verify(g)
    assert not ATCertificate("monomial", 3, (2, 2, 1, 1), 1).verify(g)  # exponent too large for bound 3


def test_orientation_search_agrees_with_expansion():
    for g in all_graphs(5):
        if g.m == 0:
            continue
        at = at_number(g).value
        hit = at_via_orientation_search(g, at)
        assert hit and hit.certificate.verify(g)
        if at > 1:
            assert not at_via_orientation_search(g, at - 1)


def test_orientation_search_budget():
    with pytest.raises(BudgetExceeded):
        at_via_orientation_search(complete(6), 3, budget=10_000)


def test_budget_env_override(monkeypatch):
    monkeypatch.setenv(BUDGET_ENV, "123")
    assert default_budget() == 123
    with pytest.raises(BudgetExceeded):
        at_number(complete(6))
    monkeypatch.delenv(BUDGET_ENV)
    assert at_number(complete(6)).value == 6


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_bounds_sandwich_at(seed):
    g = random_multigraph(random.Random(seed), max_n=6, max_m=9)
    rep = bounds_report(g)
    for c in rep.components:
        assert c.lower <= c.at <= c.upper
    assert rep.at == at_number(g).value


def test_bounds_details():
    g = complete(4).disjoint_union(cycle(5))
    rep = bounds_report(g)
    assert [c.at for c in rep.components] == [4, 3]
    assert rep.lower == 4 and rep.upper == 4 and rep.at == 4
    k4 = rep.components[0]
    assert k4.chromatic == 4 and k4.density == max_density(complete(4)) and k4.col == 3
    assert bounds_report(g, exact=False).at is None


def test_at_bounds_choice_number_on_small_graphs():
    # the independent brute-force oracle: choosable from every k-list assignment
    for g in all_graphs(4):
        at = at_number(g).value
        assert is_choosable_exhaustive(g, at, colours=2 * at)
        chi = chromatic_number(g)
        assert chi <= at <= coloring_number_col(g) + 1


def test_choosability_oracle_known_cases():
    # K_{2,4} is not 2-choosable; the even cycle C_4 is
    assert not is_choosable_exhaustive(complete_bipartite(2, 4), 2, colours=4)
    assert is_choosable_exhaustive(cycle(4), 2, colours=4)
    assert not is_choosable_exhaustive(cycle(5), 2, colours=4)


def test_monomial_coefficient_matches_expansion():
    rng = random.Random(3)
    for _ in range(40):
        g = random_multigraph(rng, max_n=5, max_m=7)
        p = graph_polynomial(g)
        for t, c in list(p.terms.items())[:5]:
            assert monomial_coefficient(g, t) == c
        off = [0] * g.n
        off[0] = g.m
        assert monomial_coefficient(g, off) == p.coefficient(tuple(off))
    assert monomial_coefficient(complete(3), (1, 1, 0)) == 0
