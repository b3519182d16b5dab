"""Sparse multivariate polynomials with exact coefficients.

Coefficients are Python ints (or :class:`~alontarsi.algebra.cyclotomic.CyclotomicInt`
for hypergraph polynomials); exponent vectors are dense tuples of length
``nvars``.  Zero coefficients are never stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .. import budget as _budget


class DimensionError(ValueError):
    pass


@dataclass(frozen=True)
class LinearForm:
    """``sum(coeffs[i] * x_{i+1}) + constant``."""

    coeffs: tuple
    constant: object = 0

    @classmethod
    def difference(cls, nvars: int, i: int, j: int, shift: int = 0) -> LinearForm:
        """``x_i - x_j - shift`` (1-based variable indices)."""
        c = [0] * nvars
        c[i - 1] += 1
        c[j - 1] -= 1
        return cls(tuple(c), -shift)

    @property
    def nvars(self) -> int:
        return len(self.coeffs)

    def is_constant(self) -> bool:
        return not any(self.coeffs)

    def __call__(self, point: Sequence[int]):
        value = self.constant
        for c, x in zip(self.coeffs, point):
            if c and x:
                value = value + c * x
        return value

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs, start=1):
            if c:
                parts.append(f"{c}*x{i}" if c != 1 else f"x{i}")
        if self.constant:
            parts.append(str(self.constant))
        return "(" + (" + ".join(parts).replace("+ -", "- ") or "0") + ")"


class SparsePolynomial:
    """Map from exponent vectors to nonzero exact coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], object] | None = None):
        self.nvars = nvars
        self.terms: dict[tuple[int, ...], object] = {}
        for exp, c in (terms or {}).items():
            if len(exp) != nvars:
                raise DimensionError(f"exponent {exp} does not have {nvars} entries")
            if c:
                self.terms[tuple(exp)] = c

    @classmethod
    def constant(cls, nvars: int, value=1) -> SparsePolynomial:
        return cls(nvars, {(0,) * nvars: value})

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def coefficient(self, exponent: Sequence[int]):
        return coefficient(self, exponent)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __add__(self, other: SparsePolynomial) -> SparsePolynomial:
        _same_dim(self, other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return SparsePolynomial(self.nvars, out)

    def __mul__(self, other: SparsePolynomial) -> SparsePolynomial:
        _same_dim(self, other)
        out: dict[tuple[int, ...], object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return SparsePolynomial(self.nvars, out)

    def __call__(self, point: Sequence[int]):
        if len(point) != self.nvars:
            raise DimensionError(f"point has {len(point)} coordinates, expected {self.nvars}")
        total = 0
        for e, c in self.terms.items():
            mono = 1
            for x, p in zip(point, e):
                if p:
                    mono *= x**p
            if mono:
                total = total + c * mono
        return total

    def __repr__(self) -> str:
        return f"SparsePolynomial({self.nvars}, {self.terms!r})"


def _same_dim(a: SparsePolynomial, b: SparsePolynomial) -> None:
    if a.nvars != b.nvars:
        raise DimensionError(f"{a.nvars} vs {b.nvars} variables")


class LinearProduct:
    """A polynomial kept in factored form as a product of linear forms.

    Cheap to evaluate pointwise; :meth:`expand` gives the sparse expansion.
    """

    def __init__(self, nvars: int, forms: Iterable[LinearForm]):
        self.nvars = nvars
        self.forms = tuple(forms)
        for f in self.forms:
            if f.nvars != nvars:
                raise DimensionError(f"form {f} does not have {nvars} coefficients")

    @property
    def degree(self) -> int:
        """Degree of the product; -1 if some factor is identically zero."""
        if any(f.is_constant() and not f.constant for f in self.forms):
            return -1
        return sum(1 for f in self.forms if not f.is_constant())

    def __call__(self, point: Sequence[int]):
        value = 1
        for f in self.forms:
            v = f(point)
            if not v:
                return 0
            value = v * value
        return value

    def expand(self, budget: int | None = None) -> SparsePolynomial:
        return expand_linear_product(self.forms, self.nvars, budget)


def expand_linear_product(
    forms: Sequence[LinearForm], nvars: int, budget: int | None = None
) -> SparsePolynomial:
    """Multiply out a product of linear forms; the empty product is 1."""
    counter = _budget.Counter("polynomial expansion", budget)
    unit = [tuple(1 if k == i else 0 for k in range(nvars)) for i in range(nvars)]
    terms: dict[tuple[int, ...], object] = {(0,) * nvars: 1}
    for form in forms:
        if form.nvars != nvars:
            raise DimensionError(f"form {form} does not have {nvars} coefficients")
        support = [(unit[i], c) for i, c in enumerate(form.coeffs) if c]
        counter.spend(len(terms) * (len(support) + 1))
        out: dict[tuple[int, ...], object] = {}
        for e, c in terms.items():
            if form.constant:
                out[e] = out.get(e, 0) + c * form.constant
            for u, a in support:
                e2 = tuple(x + y for x, y in zip(e, u))
                out[e2] = out.get(e2, 0) + c * a
        terms = {e: c for e, c in out.items() if c}
    return SparsePolynomial(nvars, terms)


def coefficient(p: SparsePolynomial, exponent: Sequence[int]):
    """Coefficient of ``prod x_i^{exponent[i]}`` in ``p`` (0 if absent)."""
    exponent = tuple(exponent)
    if len(exponent) != p.nvars:
        raise DimensionError(f"exponent has {len(exponent)} entries, polynomial has {p.nvars} variables")
    return p.terms.get(exponent, 0)
