"""Bundled acceptance corpus: every identity and reported value, checked exactly.

Each check returns a :class:`CheckResult`; ``run_all`` runs them in order.
Randomised parts use fixed seeds so runs are reproducible.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .algebra import naive_permanent, ryser_permanent, scheim_coefficient
from .applications import (
    fano_q,
    hypergraph_f_AT,
    min_edge_unique_certificate,
    parity_unique_certificate,
    t_list_cycle_check,
)
from .certifiers import (
    build_permanent_matrix,
    coefficient_via_permanent,
    euler_diff,
    graph_polynomial,
    graph_product,
    signed_coloring_sum,
    signed_sum_regular,
    weighted_subgraph_sum,
)
from .corpus import all_graphs, connected_graphs, double_edges, random_balanced_f, random_multigraph
from .graphs import (
    MultiGraph,
    balanced_multipartite_2,
    canonical_orientation,
    coloring_number_col,
    complete,
    complete_bipartite,
    cycle,
    cycle_power,
    enumerate_orientations,
    fano,
    line_graph,
    max_density,
    path,
    structural_at_le_2,
)
from .solver import at_number, is_choosable_exhaustive

SEED = 20240101


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}: {self.detail} ({self.seconds:.1f}s)"


class _Failures:
    """Collects mismatches; keeps the first few messages."""

    def __init__(self):
        self.count = 0
        self.checked = 0
        self.messages: list[str] = []

    def expect(self, ok: bool, msg: str) -> None:
        self.checked += 1
        if not ok:
            self.count += 1
            if len(self.messages) < 5:
                self.messages.append(msg)

    def summary(self, what: str) -> tuple[bool, str]:
        if self.count:
            return False, f"{self.count}/{self.checked} {what} failed; first: " + " | ".join(self.messages)
        return True, f"{self.checked} {what} hold"


def _sign(m: int) -> int:
    return -1 if m % 2 else 1


def _factorials(xs) -> int:
    return math.prod(math.factorial(x) for x in xs)


def random_weights(rng: random.Random, degrees) -> list[list[Fraction]]:
    return [
        [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(d)] for d in degrees
    ]


# -- criteria ------------------------------------------------------------------

def check_identity_chain() -> tuple[bool, str]:
    """Signed colouring sum == (-1)^m Per(B) == (-1)^m coeff * prod (f-1)!, and Scheim == coeff."""
    rng = random.Random(SEED)
    graphs = [g for g in all_graphs(5) if g.is_connected()]
    graphs += [random_multigraph(rng, max_n=6, max_m=10) for _ in range(50)]
    fails = _Failures()
    for g in graphs:
        p = graph_polynomial(g)
        prod_form = graph_product(g)
        for _ in range(5):
            f = random_balanced_f(rng, g)
            t = tuple(x - 1 for x in f)
            coeff = p.coefficient(t)
            signed = signed_coloring_sum(g, f)
            per = ryser_permanent(build_permanent_matrix(canonical_orientation(g), f))
            scaled = _sign(g.m) * coeff * _factorials(t)
            fails.expect(
                signed == _sign(g.m) * per == scaled,
                f"{g.edges} f={f}: signed={signed} per={per} coeff={coeff}",
            )
            fails.expect(
                scheim_coefficient(prod_form, t) == coeff,
                f"{g.edges} f={f}: Scheim coefficient differs from {coeff}",
            )
    return fails.summary(f"identities over {len(graphs)} graphs x 5 list-size vectors:")


def check_orientation_identities() -> tuple[bool, str]:
    """Eulerian parity difference vs coefficient, and weight-independence of the weighted sum."""
    rng = random.Random(SEED + 1)
    graphs = connected_graphs(7)
    fails = _Failures()
    orientations = 0
    for g in graphs:
        p = graph_polynomial(g)
        for d in enumerate_orientations(g, g.m):
            orientations += 1
            coeff = p.coefficient(d.out_degrees)
            count = euler_diff(d)
            fails.expect((count.diff != 0) == (coeff != 0), f"{g.edges} {d.flags}: diff {count.diff} coeff {coeff}")
            dfact = _factorials(d.out_degrees)
            base = weighted_subgraph_sum(d)
            fails.expect(
                base == _sign(g.m) * count.diff * dfact,
                f"{g.edges} {d.flags}: weighted {base} vs eulerian {count.diff}",
            )
            fails.expect(
                base == _sign(g.m) * _sign(d.decreasing) * coeff * dfact,
                f"{g.edges} {d.flags}: weighted {base} vs coefficient {coeff}",
            )
            for _ in range(5):
                w = random_weights(rng, d.out_degrees)
                fails.expect(weighted_subgraph_sum(d, w) == base, f"{g.edges} {d.flags}: weights {w} change the sum")
    return fails.summary(f"checks over {len(graphs)} graphs, {orientations} orientations:")


def check_at_values() -> tuple[bool, str]:
    cases: list[tuple[str, MultiGraph, int]] = []
    cases += [(f"K_{n}", complete(n), n) for n in range(1, 6)]
    cases += [(f"K_{{{n},{n}}}", complete_bipartite(n, n), math.ceil(n / 2) + 1) for n in (2, 3)]
    cases += [("K_{2*3}", balanced_multipartite_2(3), 3), ("C_6^2", cycle_power(6, 2), 3)]
    cases += [(f"C_{n}", cycle(n), 2 if n % 2 == 0 else 3) for n in range(3, 10)]
    cases += [("double edge", MultiGraph(2, ((1, 2), (1, 2))), 3), ("single edge", MultiGraph(2, ((1, 2),)), 2)]
    fails = _Failures()
    for name, g, want in cases:
        got = at_number(g).value
        fails.expect(got == want, f"AT({name}) = {got}, expected {want}")
    return fails.summary("AT values")


def check_regular_route() -> tuple[bool, str]:
    k4 = complete(4)
    lk4 = line_graph(k4)
    s1 = signed_sum_regular(lk4, 3, preimage=k4)
    at1 = at_number(lk4).value
    s2 = signed_sum_regular(cycle(4), 2, preimage=cycle(4))
    ok = s1 != 0 and at1 == 3 and s2 != 0
    return ok, f"L(K_4), d=3: sum {s1}, AT {at1}; C_4, d=2: sum {s2}"


def check_fano() -> tuple[bool, str]:
    rep = hypergraph_f_AT(fano(), fano_q(), (3, 2, 1, 2, 2, 2, 2))
    ok = rep.points == ((2, 0, 0, 1, 1, 0, 1),) and rep.total != 0 and rep.decision
    return ok, f"NZ points {list(rep.points)}, Q values {list(rep.values)}, sum {rep.total}; AT(F_7) <= 3"


def check_tlist() -> tuple[bool, str]:
    parts, ok = [], True
    for length, T in ((4, {0}), (4, {0, 1}), (6, {0, 1}), (6, {0, 2})):
        rep = t_list_cycle_check(length, T)
        good = rep.choosable and rep.q_coefficient != 0 and abs(rep.q_coefficient) == abs(rep.p_coefficient)
        ok &= good
        parts.append(f"C_{length} T={sorted(T)}: sum {rep.total}{'' if good else ' FAIL'}")
    return ok, "; ".join(parts)


def check_unique_certificates() -> tuple[bool, str]:
    fails = _Failures()
    for k in range(1, 6):
        rep = min_edge_unique_certificate(complete(k), k)
        fails.expect(rep.applicable and rep.at == k == at_number(complete(k)).value, f"min-edge on K_{k}: {rep}")
    for n in range(2, 7):
        rep = min_edge_unique_certificate(path(n), 2)
        fails.expect(rep.applicable and rep.at == 2 == at_number(path(n)).value, f"min-edge on P_{n}: {rep}")
    for name, g, k in (("K_{2*3}", balanced_multipartite_2(3), 3), ("C_6^2", cycle_power(6, 2), 3), ("C_6", cycle(6), 2)):
        rep = parity_unique_certificate(g, k)
        fails.expect(
            rep.applicable and rep.at == k == at_number(g).value and rep.details["sign_preserving"],
            f"parity on {name}: {rep.applicable} {rep.at}",
        )
    return fails.summary("certificate conclusions")


def check_structural_properties() -> tuple[bool, str]:
    rng = random.Random(SEED + 2)
    graphs = connected_graphs(7)
    fails = _Failures()
    at_cache: dict[MultiGraph, int] = {}

    def at(g: MultiGraph) -> int:
        if g not in at_cache:
            at_cache[g] = at_number(g).value
        return at_cache[g]

    for g in graphs:
        p = graph_polynomial(g)
        a = at(g)
        fails.expect(all(sum(e) == g.m for e in p.terms), f"{g.edges}: not homogeneous")
        fails.expect(a >= 1 + math.ceil(max_density(g)), f"{g.edges}: density bound")
        fails.expect(a <= coloring_number_col(g) + 1, f"{g.edges}: col bound")
        for k in range(g.m):
            fails.expect(at(g.without_edge(k)) <= a, f"{g.edges} minus edge {k}")
        for _ in range(3):
            f = [rng.randint(1, 4) for _ in range(g.n)]
            f2 = [x + rng.randint(0, 2) for x in f]
            ok_f = any(all(t <= x - 1 for t, x in zip(e, f)) for e in p.terms)
            ok_f2 = any(all(t <= x - 1 for t, x in zip(e, f2)) for e in p.terms)
            fails.expect(ok_f2 or not ok_f, f"{g.edges}: f-monotonicity {f} <= {f2}")

    small = [g for g in graphs if g.m <= 4]
    for _ in range(100):
        g1, g2 = rng.choice(small), rng.choice(small)
        u = g1.disjoint_union(g2)
        pu = graph_polynomial(u)
        p1, p2 = graph_polynomial(g1), graph_polynomial(g2)
        product = {e1 + e2: c1 * c2 for e1, c1 in p1.terms.items() for e2, c2 in p2.terms.items()}
        fails.expect(pu.terms == product, f"{u.edges}: P_G is not the product over components")
        fails.expect(at(u) == max(at(g1), at(g2)), f"{u.edges}: AT is not the max over components")

    for _ in range(100):
        g = random_multigraph(rng, max_n=6, max_m=9)
        keep = [e for e in g.edges if rng.random() < 0.6]
        h = MultiGraph(g.n, tuple(keep))
        fails.expect(at(h) <= at(g), f"{g.edges} vs subgraph {h.edges}")

    strict = 0
    for g in graphs:
        for g2 in double_edges(g):
            fails.expect(at(g) <= at(g2), f"{g.edges}: doubling an edge lowered AT")
            strict += at(g) < at(g2)
    fails.expect(strict > 0, "no strict parallel-edge case")
    ok, text = fails.summary(f"structural checks over {len(graphs)} graphs:")
    return ok, f"{text}; {strict} strict parallel-edge cases"


def check_oracles() -> tuple[bool, str]:
    rng = random.Random(SEED + 3)
    fails = _Failures()
    for _ in range(200):
        s = rng.randint(1, 6)
        mat = [[rng.randint(-3, 3) for _ in range(s)] for _ in range(s)]
        fails.expect(ryser_permanent(mat) == naive_permanent(mat), f"permanent of {mat}")
    graphs8 = connected_graphs(8)
    for g in graphs8:
        fails.expect(structural_at_le_2(g) == (at_number(g).value <= 2), f"core test on {g.edges}")
    small = all_graphs(5)
    for g in small:
        fails.expect(is_choosable_exhaustive(g, at_number(g).value, colours=6), f"ch > AT on {g.edges}")
    return fails.summary(f"oracle checks (200 permanents, {len(graphs8)} core tests, {len(small)} choosability tests):")


CRITERIA: list[tuple[str, Callable[[], tuple[bool, str]]]] = [
    ("1 identity chain", check_identity_chain),
    ("2 orientation identities", check_orientation_identities),
    ("3 AT values", check_at_values),
    ("4 regular line-graph route", check_regular_route),
    ("5 Fano plane", check_fano),
    ("6 T-list even cycles", check_tlist),
    ("7 uniquely colourable certificates", check_unique_certificates),
    ("8 structural properties", check_structural_properties),
    ("9 oracle suite", check_oracles),
]


def run_check(name: str, fn: Callable[[], tuple[bool, str]]) -> CheckResult:
    start = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failed criterion, reported not raised
        ok, detail = False, f"raised {type(exc).__name__}: {exc}"
    return CheckResult(name, ok, detail, time.perf_counter() - start)


def run_all(only: list[str] | None = None) -> list[CheckResult]:
    results = []
    for name, fn in CRITERIA:
        if only and not any(name.startswith(o) for o in only):
            continue
        results.append(run_check(name, fn))
    return results
