"""Exact arithmetic in Q extended by square roots of integers.

A value is a finite sum  sum_d q_d * sqrt(d)  with q_d rational and d a
positive squarefree integer.  Square roots of distinct squarefree integers
are linearly independent over Q, so the term map is a canonical form:
equality, zero tests and signs are decided exactly, never through floats.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Union

Rational = Union[int, Fraction]

_SIGN_PRECISION_LIMIT = 4096  # bits; far beyond anything desk-scale inputs need


@lru_cache(maxsize=None)
def squarefree_decompose(n: int) -> tuple[int, int]:
    """Split n > 0 as d * k**2 with d squarefree; returns (d, k)."""
    if n <= 0:
        raise ValueError("squarefree_decompose needs a positive integer")
    d = 1
    k = 1
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            k *= p ** (e // 2)
            if e % 2:
                d *= p
        p += 1 if p == 2 else 2
    return d * m, k


@lru_cache(maxsize=None)
def _prime_factors(d: int) -> tuple[int, ...]:
    if d <= 1:
        return ()
    out = []
    m = d
    p = 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        out.append(m)
    return tuple(out)


@lru_cache(maxsize=None)
def _sqrt_bounds(d: int, bits: int) -> tuple[Fraction, Fraction]:
    # lo <= sqrt(d) <= hi with hi - lo = 2**-bits
    s = math.isqrt(d << (2 * bits))
    return Fraction(s, 1 << bits), Fraction(s + 1, 1 << bits)


class RadExpr:
    """Immutable element of Q[sqrt(d1), sqrt(d2), ...]."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, Rational] | None = None):
        # keys must already be squarefree; use the constructors below otherwise
        clean: dict[int, Fraction] = {}
        if terms:
            for d, q in terms.items():
                q = Fraction(q)
                if q:
                    clean[d] = q
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, *a):  # pragma: no cover - guards accidental mutation
        raise AttributeError("RadExpr is immutable")

    @classmethod
    def of(cls, x: Rational | "RadExpr") -> "RadExpr":
        if isinstance(x, RadExpr):
            return x
        return cls({1: Fraction(x)})

    @classmethod
    def sqrt(cls, x: Rational | "RadExpr") -> "RadExpr":
        """Exact square root of a nonnegative rational value."""
        if isinstance(x, RadExpr):
            if not x.is_rational():
                raise ValueError("square root of an irrational value is not representable")
            x = x.rational_value()
        x = Fraction(x)
        if x < 0:
            raise ValueError("square root of a negative value")
        if x == 0:
            return cls()
        d, k = squarefree_decompose(x.numerator * x.denominator)
        # sqrt(n/m) = sqrt(n*m)/m
        return cls({d: Fraction(k, x.denominator)})

    # --- structure ---------------------------------------------------------

    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_rational(self) -> bool:
        return all(d == 1 for d in self._terms)

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self._terms.get(1, Fraction(0))

    def is_integer(self) -> bool:
        return self.is_rational() and self.rational_value().denominator == 1

    # --- ring operations ---------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for d, q in other._terms.items():
            s = out.get(d, Fraction(0)) + q
            if s:
                out[d] = s
            else:
                out.pop(d, None)
        return RadExpr(out)

    __radd__ = __add__

    def __neg__(self):
        return RadExpr({d: -q for d, q in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[int, Fraction] = {}
        for d1, q1 in self._terms.items():
            for d2, q2 in other._terms.items():
                # sqrt(d1)*sqrt(d2) = g*sqrt(d1*d2/g^2) with g = gcd: both squarefree,
                # so the reduced radical is squarefree again without factoring.
                g = math.gcd(d1, d2)
                d = (d1 // g) * (d2 // g)
                q = q1 * q2 * g
                s = out.get(d, Fraction(0)) + q
                if s:
                    out[d] = s
                else:
                    out.pop(d, None)
        return RadExpr(out)

    __rmul__ = __mul__

    def inverse(self) -> "RadExpr":
        if not self._terms:
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return RadExpr({1: 1 / self._terms[1]})
        ds = [d for d in self._terms if d != 1]
        if len(self._terms) == 1:
            # (q*sqrt(d))^-1 = sqrt(d)/(q*d)
            d = ds[0]
            return RadExpr({d: 1 / (self._terms[d] * d)})
        # multiply by every nontrivial Galois conjugate; the product of all
        # conjugates is rational (and nonzero for a nonzero element)
        primes = sorted({p for d in ds for p in _prime_factors(d)})
        prod = RadExpr.of(1)
        for mask in range(1, 1 << len(primes)):
            flip = {primes[i] for i in range(len(primes)) if mask >> i & 1}
            conj = {
                d: (-q if sum(p in flip for p in _prime_factors(d)) % 2 else q)
                for d, q in self._terms.items()
            }
            prod = prod * RadExpr(conj)
        norm = self * prod
        assert norm.is_rational() and not norm.is_zero()
        return prod * RadExpr({1: 1 / norm.rational_value()})

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = RadExpr.of(1)
        for _ in range(k):
            out = out * self
        return out

    # --- order and conversion ----------------------------------------------

    def sign(self) -> int:
        """Exact sign via interval refinement of the square roots."""
        if not self._terms:
            return 0
        bits = 16
        while bits <= _SIGN_PRECISION_LIMIT:
            lo = Fraction(0)
            hi = Fraction(0)
            for d, q in self._terms.items():
                if d == 1:
                    lo += q
                    hi += q
                    continue
                slo, shi = _sqrt_bounds(d, bits)
                if q >= 0:
                    lo += q * slo
                    hi += q * shi
                else:
                    lo += q * shi
                    hi += q * slo
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            bits *= 2
        raise ArithmeticError("sign undecided at precision limit")

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __float__(self) -> float:
        return sum((float(q) * math.sqrt(d) for d, q in self._terms.items()), 0.0)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(tuple(sorted(self._terms.items())))

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for d, q in sorted(self._terms.items()):
            if d == 1:
                parts.append(str(q))
            elif q == 1:
                parts.append(f"sqrt({d})")
            else:
                parts.append(f"{q}*sqrt({d})")
        return " + ".join(parts)


def _coerce(x) -> "RadExpr":
    if isinstance(x, RadExpr):
        return x
    if isinstance(x, (int, Fraction)):
        return RadExpr({1: Fraction(x)})
    return NotImplemented


ZERO = RadExpr()
ONE = RadExpr.of(1)
