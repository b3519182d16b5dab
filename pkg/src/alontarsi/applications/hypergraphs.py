"""Alon-Tarsi choosability of hypergraphs through a colouring-detecting polynomial."""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from ..algebra import CyclotomicInt, LinearForm, LinearProduct, SparsePolynomial, is_prime
from ..certifiers import PreconditionError, nz_scan
from ..graphs import GraphError, Hypergraph


class QSpec(LinearProduct):
    """A product of integer linear forms over the hypergraph's vertices.

    Callers promise that a nonzero value forces a proper colouring;
    :func:`hypergraph_f_AT` checks this on the whole box.
    """


def parse_qspec(text: str) -> QSpec:
    """One factor per line: ``c_1 ... c_n | const``; ``#`` lines are comments."""
    forms = []
    nvars = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        lhs, sep, rhs = line.partition("|")
        try:
            coeffs = tuple(int(t) for t in lhs.split())
            const = int(rhs) if sep and rhs.strip() else 0
        except ValueError:
            raise GraphError(f"line {lineno}: factor coefficients must be integers") from None
        if nvars is None:
            nvars = len(coeffs)
        elif len(coeffs) != nvars:
            raise GraphError(f"line {lineno}: expected {nvars} coefficients, got {len(coeffs)}")
        forms.append(LinearForm(coeffs, const))
    if nvars is None:
        raise GraphError("QSpec has no factors")
    return QSpec(nvars, forms)


def format_qspec(q: LinearProduct) -> str:
    return "".join(" ".join(map(str, f.coeffs)) + f" | {f.constant}\n" for f in q.forms)


def fano_q() -> QSpec:
    """The bundled seven-factor polynomial for the Fano plane."""
    text = resources.files("alontarsi.data").joinpath("fano.q").read_text(encoding="utf-8")
    return parse_qspec(text)


def hypergraph_product(h: Hypergraph, k: int) -> LinearProduct:
    """Factored hypergraph polynomial: per edge ``sum_j w^j x_{i_j}``, vertices ascending."""
    if not is_prime(k):
        raise PreconditionError(f"k must be prime, got {k}")
    forms = []
    zero = CyclotomicInt(k)
    for e in h.edges:
        if len(e) != k:
            raise PreconditionError(f"edge {e} does not have exactly {k} vertices")
        coeffs = [zero] * h.n
        for j, v in enumerate(e):
            coeffs[v - 1] = CyclotomicInt.root(k, j)
        forms.append(LinearForm(tuple(coeffs), 0))
    return LinearProduct(h.n, forms)


def hypergraph_polynomial(h: Hypergraph, k: int, budget: int | None = None) -> SparsePolynomial:
    return hypergraph_product(h, k).expand(budget)


@dataclass(frozen=True)
class HyperATReport:
    decision: bool
    total: object
    points: tuple[tuple[int, ...], ...]
    values: tuple


def hypergraph_f_AT(h: Hypergraph, q, f, budget: int | None = None) -> HyperATReport:
    """Signed non-zero sum certificate that ``h`` is f-AT.

    ``q`` is a :class:`QSpec` (or any evaluator exposing ``degree``) or a
    prime ``k`` selecting the cyclotomic hypergraph polynomial.  Requires
    ``deg q = m`` and ``sum f = m + n``; ``q`` must vanish at every improper
    box point, which is verified during the scan.
    """
    f = tuple(f)
    if len(f) != h.n or any(x < 1 for x in f):
        raise PreconditionError(f"need {h.n} positive list sizes")
    if isinstance(q, int):
        q = hypergraph_product(h, q)
    if getattr(q, "nvars", h.n) != h.n:
        raise PreconditionError(f"polynomial has {q.nvars} variables, hypergraph has {h.n} vertices")
    if q.degree != h.m:
        raise PreconditionError(f"polynomial degree {q.degree} differs from edge count {h.m}")
    if sum(f) != h.m + h.n:
        raise PreconditionError(f"sum of list sizes is {sum(f)}, need m + n = {h.m + h.n}")
    scan = nz_scan(q, f, budget, check_point=h.is_proper)
    return HyperATReport(bool(scan.total), scan.total, scan.points, scan.values)
