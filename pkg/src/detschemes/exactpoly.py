"""Exact integer/rational helpers and dense univariate integer polynomials.

Everything here works on Python ints and :class:`fractions.Fraction`; there
is no floating point anywhere in the package.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import accumulate
from typing import Iterable, Sequence

from .errors import NotDivisible

__all__ = [
    "IntPoly",
    "HVector",
    "binom_comb",
    "binom_poly",
    "falling_factorial",
    "divide_exact",
    "difference",
    "partial_sums",
    "elementary_symmetric",
]


def binom_comb(a: int, n: int) -> int:
    """Combinatorial binomial: C(a, n) for a >= n, and 0 whenever a < n.

    This is the dimension-count convention: ``binom_comb(t + n - s, n)`` is
    the dimension of ``R(-s)_t`` for a polynomial ring in n+1 variables.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if a < n:
        return 0
    return math.comb(a, n)


def falling_factorial(a: int, n: int) -> int:
    """a (a-1) ... (a-n+1); the empty product is 1."""
    out = 1
    for k in range(n):
        out *= a - k
    return out


def binom_poly(a: int, n: int) -> Fraction:
    """Polynomial binomial a(a-1)...(a-n+1)/n!, defined for every integer a."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Fraction(falling_factorial(a, n), math.factorial(n))


def elementary_symmetric(values: Sequence[int]) -> list[int]:
    """Return [e_0, e_1, ..., e_k] of the given values (k = len(values))."""
    e = [1] + [0] * len(values)
    for x in values:
        for j in range(len(e) - 1, 0, -1):
            e[j] += x * e[j - 1]
    return e


def difference(f: Sequence[int], k: int = 1) -> list[int]:
    """k-th backward difference of f on 0..T, with f(-1) = 0."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = list(f)
    for _ in range(k):
        out = [x - (out[i - 1] if i else 0) for i, x in enumerate(out)]
    return out


def partial_sums(f: Iterable[int], k: int = 1) -> list[int]:
    """Inverse of :func:`difference`."""
    out = list(f)
    for _ in range(k):
        out = list(accumulate(out))
    return out


class IntPoly:
    """Dense polynomial in z with integer coefficients.

    ``coeffs[i]`` is the coefficient of ``z**i``. Trailing zeros are
    stripped, so the zero polynomial has ``coeffs == ()``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def from_terms(cls, terms) -> IntPoly:
        """Build from a mapping (or pairs) exponent -> coefficient."""
        items = terms.items() if hasattr(terms, "items") else terms
        items = list(items)
        if not items:
            return cls()
        top = max(e for e, _ in items)
        if min(e for e, _ in items) < 0:
            raise ValueError("negative exponent in IntPoly")
        c = [0] * (top + 1)
        for e, v in items:
            c[e] += v
        return cls(c)

    @classmethod
    def one_minus_z_pow(cls, k: int) -> IntPoly:
        """(1 - z)**k."""
        return cls([(-1) ** i * math.comb(k, i) for i in range(k + 1)])

    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __call__(self, z):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def __eq__(self, other):
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == IntPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                mono = "z" if e == 1 else f"z^{e}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    @staticmethod
    def _coerce(other):
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly([other])
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = IntPoly([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def long_divide(self, q: IntPoly) -> tuple[IntPoly, IntPoly]:
        """Long division over Z, requiring nothing of q but q != 0.

        Returns (quotient, remainder) when every step divides exactly;
        raises :class:`NotDivisible` when a leading coefficient does not.
        """
        if q.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = q.degree
        lead = q.coeffs[-1]
        if len(rem) - 1 < dq:
            return IntPoly(), IntPoly(rem)
        quot = [0] * (len(rem) - dq)
        for k in range(len(rem) - 1 - dq, -1, -1):
            top = rem[k + dq]
            if top == 0:
                continue
            if top % lead:
                raise NotDivisible(f"{self} is not divisible by {q} over the integers")
            f = top // lead
            quot[k] = f
            for j, b in enumerate(q.coeffs):
                rem[k + j] -= f * b
        return IntPoly(quot), IntPoly(rem)


def divide_exact(p: IntPoly, q: IntPoly) -> IntPoly:
    """Return p / q, raising :class:`NotDivisible` unless q divides p in Z[z]."""
    quot, rem = p.long_divide(q)
    if not rem.is_zero():
        raise NotDivisible(f"{p} is not divisible by {q} (remainder {rem})")
    return quot


class HVector:
    """Coefficients (h_0, ..., h_s) of an h-polynomial.

    ``length`` follows the top-index convention: it is s, not s + 1.
    """

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[int]):
        e = tuple(int(x) for x in entries)
        if not e or e[-1] == 0:
            raise ValueError("an h-vector needs a nonzero last entry")
        object.__setattr__(self, "entries", e)

    def __setattr__(self, name, value):
        raise AttributeError("HVector is immutable")

    @classmethod
    def from_poly(cls, p: IntPoly) -> HVector:
        return cls(p.coeffs)

    @property
    def length(self) -> int:
        return len(self.entries) - 1

    @property
    def degree(self) -> int:
        """h(1), the degree of the scheme."""
        return sum(self.entries)

    def __getitem__(self, i: int) -> int:
        """h_i, with h_i = 0 outside 0..s (negative i included)."""
        if 0 <= i < len(self.entries):
            return self.entries[i]
        return 0

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        if isinstance(other, HVector):
            return self.entries == other.entries
        if isinstance(other, (tuple, list)):
            return self.entries == tuple(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"HVector({self.entries})"

    def as_poly(self) -> IntPoly:
        return IntPoly(self.entries)

    def partial_sum(self, t: int) -> int:
        """sum_{i <= t} h_i: the Hilbert function of a general zero-dim section."""
        if t < 0:
            return 0
        return sum(self.entries[: t + 1])
