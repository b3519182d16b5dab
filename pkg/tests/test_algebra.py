from __future__ import annotations

import cmath
import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from alontarsi.algebra import (
    CyclotomicInt,
    DimensionError,
    LinearForm,
    LinearProduct,
    RingMatrix,
    SparsePolynomial,
    coefficient,
    cyclotomic_multiply,
    expand_linear_product,
    naive_permanent,
    ryser_permanent,
    scheim_coefficient,
    scheim_sum,
)
from alontarsi.budget import BudgetExceeded

small = st.integers(min_value=-4, max_value=4)


@st.composite
def square_matrices(draw, max_n=5):
    n = draw(st.integers(min_value=0, max_value=max_n))
    return [[draw(small) for _ in range(n)] for _ in range(n)]


@st.composite
def linear_products(draw, nvars=None, max_forms=5):
    nvars = nvars or draw(st.integers(min_value=1, max_value=3))
    count = draw(st.integers(min_value=0, max_value=max_forms))
    forms = [
        LinearForm(tuple(draw(small) for _ in range(nvars)), draw(small))
        for _ in range(count)
    ]
    return LinearProduct(nvars, forms)


# -- permanents ---------------------------------------------------------------------

def test_permanent_small_cases():
    assert ryser_permanent([]) == 1
    assert ryser_permanent([[5]]) == 5
    assert ryser_permanent([[1, 2], [3, 4]]) == 10
    # permanent of the all-ones n x n matrix is n!
    for n in range(1, 7):
        assert ryser_permanent([[1] * n for _ in range(n)]) == math.factorial(n)
    # J - I counts derangements
    assert ryser_permanent([[int(i != j) for j in range(5)] for i in range(5)]) == 44


def test_permanent_rejects_non_square_and_budget():
    with pytest.raises(ValueError):
        ryser_permanent([[1, 2]])
    with pytest.raises(BudgetExceeded):
        ryser_permanent([[1] * 12 for _ in range(12)], budget=100)


@settings(max_examples=150, deadline=None)
@given(square_matrices())
def test_ryser_matches_definition(rows):
    assert ryser_permanent(RingMatrix.from_rows(rows)) == naive_permanent(rows)


@settings(max_examples=60, deadline=None)
@given(square_matrices(max_n=4))
def test_permanent_transpose_invariant(rows):
    m = RingMatrix.from_rows(rows)
    assert ryser_permanent(m) == ryser_permanent(m.transpose())


def test_permanent_over_cyclotomic_ring():
    w = CyclotomicInt.root(3)
    rows = [[w, 1], [1, w]]
    assert ryser_permanent(rows) == naive_permanent(rows) == w * w + 1


# -- polynomials --------------------------------------------------------------------

def test_expand_examples():
    # (x1 - x2)(x1 - x3)(x2 - x3)
    p = LinearProduct(
        3, [LinearForm.difference(3, 1, 2), LinearForm.difference(3, 1, 3), LinearForm.difference(3, 2, 3)]
    ).expand()
    assert coefficient(p, (2, 1, 0)) == 1
    assert coefficient(p, (1, 1, 1)) == 0
    assert coefficient(p, (0, 1, 2)) == -1
    assert len(p) == 6 and p.degree == 3 and p.is_homogeneous()
    assert expand_linear_product([], 2) == SparsePolynomial.constant(2)
    with pytest.raises(DimensionError):
        coefficient(p, (1, 1))


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_expansion_is_multiplicative(data):
    nvars = data.draw(st.integers(min_value=1, max_value=3))
    a = data.draw(linear_products(nvars=nvars, max_forms=3))
    b = data.draw(linear_products(nvars=nvars, max_forms=3))
    both = LinearProduct(nvars, list(a.forms) + list(b.forms))
    assert both.expand() == a.expand() * b.expand()


@settings(max_examples=100, deadline=None)
@given(linear_products(), st.lists(st.integers(-3, 3), min_size=3, max_size=3))
def test_expansion_agrees_with_pointwise_evaluation(lp, point):
    point = point[: lp.nvars]
    assert lp.expand()(point) == lp(point)


def test_degree_of_zero_factor():
    lp = LinearProduct(2, [LinearForm((1, 0), 0), LinearForm((0, 0), 0)])
    assert lp.degree == -1 and lp.expand().degree == -1


# -- coefficient extraction from box values -----------------------------------------

@settings(max_examples=100, deadline=None)
@given(linear_products(max_forms=4), st.data())
def test_scheim_matches_expansion(lp, data):
    d = max(lp.degree, 0)
    s = _split(d, lp.nvars, data)
    expanded = lp.expand()
    assert scheim_coefficient(lp, s) == coefficient(expanded, s)
    assert scheim_sum(lp, s) == coefficient(expanded, s) * math.prod(math.factorial(x) for x in s)


def _split(total, parts, data):
    cuts = sorted(data.draw(st.lists(st.integers(0, total), min_size=parts - 1, max_size=parts - 1)))
    bounds = [0, *cuts, total]
    return tuple(bounds[i + 1] - bounds[i] for i in range(parts))


def test_scheim_degree_precondition():
    lp = LinearProduct(1, [LinearForm((1,), 0)] * 3)
    with pytest.raises(ValueError):
        scheim_coefficient(lp, (2,))
    # a lower-degree polynomial is fine: its top coefficient in the box vanishes
    assert scheim_coefficient(lp, (4,)) == 0
    assert scheim_coefficient(lp, (3,), expect_integer=True) == Fraction(1)


# -- cyclotomic integers ------------------------------------------------------------

PRIMES = [2, 3, 5, 7]


@st.composite
def cyclo_pairs(draw):
    k = draw(st.sampled_from(PRIMES))
    vec = st.lists(small, min_size=0, max_size=k + 2)
    return CyclotomicInt(k, draw(vec)), CyclotomicInt(k, draw(vec)), CyclotomicInt(k, draw(vec))


def _complex(z: CyclotomicInt) -> complex:
    w = cmath.exp(2j * cmath.pi / z.k)
    return sum(a * w**p for p, a in enumerate(z.coeffs))


@settings(max_examples=200, deadline=None)
@given(cyclo_pairs())
def test_cyclotomic_ring_laws(triple):
    a, b, c = triple
    assert a + b == b + a
    assert a * b == b * a == cyclotomic_multiply(a, b)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    assert a * 1 == a


@settings(max_examples=200, deadline=None)
@given(cyclo_pairs())
def test_cyclotomic_agrees_with_complex_embedding(triple):
    a, b, _ = triple
    assert abs(_complex(a * b) - _complex(a) * _complex(b)) < 1e-6
    assert abs(_complex(a + b) - (_complex(a) + _complex(b))) < 1e-6
    # canonical form: zero iff the complex value is zero
    assert bool(a) == (abs(_complex(a)) > 1e-9)


def test_cyclotomic_identities():
    for k in PRIMES:
        w = CyclotomicInt.root(k)
        assert w**k == 1
        assert sum((w**p for p in range(k)), CyclotomicInt(k)) == 0
        assert CyclotomicInt.root(k, k - 1) * w == 1
    assert str(CyclotomicInt(3, [-4, 2])) == "-4 + 2*w"
    assert hash(CyclotomicInt(3, [1, 0, 1])) == hash(CyclotomicInt(3, [0, -1]))
    with pytest.raises(ValueError):
        CyclotomicInt(4)
    with pytest.raises(ValueError):
        CyclotomicInt.root(3) * CyclotomicInt.root(5)


def test_products_of_differences_of_roots():
    # prod over pairs of (w^i - w^j) squared equals (-1)^{(k-1)/2} k^k for odd prime k
    for k in (3, 5, 7):
        w = [CyclotomicInt.root(k, p) for p in range(k)]
        disc = CyclotomicInt.from_int(k, 1)
        for i, j in itertools.combinations(range(k), 2):
            disc = disc * (w[i] - w[j]) ** 2
        assert disc == (-1) ** ((k - 1) // 2) * k**k
