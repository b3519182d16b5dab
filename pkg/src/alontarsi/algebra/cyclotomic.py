"""Integers extended by a primitive k-th root of unity, k prime.

An element is stored as ``a_0 + a_1 w + ... + a_{k-2} w^{k-2}``.  Because the
k-th cyclotomic polynomial is ``1 + x + ... + x^{k-1}`` for prime k, the powers
``1 .. w^{k-2}`` form an integral basis, so an element is zero exactly when
its coefficient vector is zero.
"""

from __future__ import annotations

from typing import Sequence


def is_prime(k: int) -> bool:
    if k < 2:
        return False
    d = 2
    while d * d <= k:
        if k % d == 0:
            return False
        d += 1
    return True


class CyclotomicInt:
    __slots__ = ("k", "coeffs")

    def __init__(self, k: int, coeffs: Sequence[int] = ()):
        if not is_prime(k):
            raise ValueError(f"cyclotomic order must be prime, got {k}")
        self.k = k
        self.coeffs = _reduce(k, list(coeffs))

    @classmethod
    def from_int(cls, k: int, value: int) -> CyclotomicInt:
        return cls(k, [value])

    @classmethod
    def root(cls, k: int, power: int = 1) -> CyclotomicInt:
        """``w ** power``."""
        vec = [0] * k
        vec[power % k] = 1
        return cls(k, vec)

    def _coerce(self, other) -> CyclotomicInt:
        if isinstance(other, CyclotomicInt):
            if other.k != self.k:
                raise ValueError(f"mixed cyclotomic orders {self.k} and {other.k}")
            return other
        if isinstance(other, int):
            return CyclotomicInt(self.k, [other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CyclotomicInt(self.k, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> CyclotomicInt:
        return CyclotomicInt(self.k, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicInt(self.k, [a * other for a in self.coeffs])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return cyclotomic_multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> CyclotomicInt:
        if e < 0:
            raise ValueError("negative powers are not supported")
        result = CyclotomicInt(self.k, [1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = CyclotomicInt(self.k, [other])
        if not isinstance(other, CyclotomicInt):
            return NotImplemented
        return self.k == other.k and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.k, tuple(self.coeffs)))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __repr__(self) -> str:
        return f"CyclotomicInt({self.k}, {self.coeffs})"

    def __str__(self) -> str:
        terms = []
        for p, a in enumerate(self.coeffs):
            if a == 0:
                continue
            if p == 0:
                terms.append(str(a))
            else:
                mono = "w" if p == 1 else f"w^{p}"
                terms.append(mono if a == 1 else "-" + mono if a == -1 else f"{a}*{mono}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def _reduce(k: int, vec: list[int]) -> list[int]:
    # fold powers >= k using w^k = 1, then eliminate w^{k-1} = -(1 + ... + w^{k-2})
    full = [0] * k
    for p, a in enumerate(vec):
        full[p % k] += a
    top = full[k - 1]
    return [a - top for a in full[: k - 1]]


def cyclotomic_multiply(a: CyclotomicInt, b: CyclotomicInt) -> CyclotomicInt:
    """Exact product of two elements of the same ring, in canonical form."""
    if a.k != b.k:
        raise ValueError(f"mixed cyclotomic orders {a.k} and {b.k}")
    k = a.k
    acc = [0] * k
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                if y:
                    acc[(i + j) % k] += x * y
    return CyclotomicInt(k, acc)
