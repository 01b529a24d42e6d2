"""Hilbert function, h-vector, degree, regularity and Betti table of a
standard determinantal scheme, read off its degree matrix.

Two binomial conventions are used and never mixed: the combinatorial one
(:func:`binom_comb`, zero below the diagonal) for Hilbert *function* values,
and the polynomial one (falling factorial over c!) for the degree, which comes
from the Hilbert *polynomial*.
"""

from __future__ import annotations

import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .chains import k_polynomial, trace_weight_counts
from .degmatrix import DegreeMatrix, canonicalize, is_canonical, is_reduced_admissible
from .errors import (
    DegenerateMatrix,
    InconsistentFormulas,
    NonIntegerResult,
    NotCanonical,
    NotDivisible,
    PreconditionError,
)
from .exactpoly import (
    HVector,
    IntPoly,
    binom_comb,
    difference,
    divide_exact,
    elementary_symmetric,
    falling_factorial,
    partial_sums,
)

log = logging.getLogger(__name__)

__all__ = [
    "BettiTable",
    "HilbertSummary",
    "hilbert_function",
    "hilbert_function_values",
    "h_vector",
    "degree_trace_formula",
    "regularity_closed",
    "regularity_max",
    "regularity_bounds",
    "reg_index",
    "betti_table",
    "summarize",
    "vanishing_identities",
    "stabilization_point",
]


def _require_n(U: DegreeMatrix, n: int):
    if n < U.c:
        raise PreconditionError(f"need n >= c, got n={n}, c={U.c}")


def hilbert_function(U: DegreeMatrix, n: int, t: int, counts: Counter | None = None) -> int:
    """H_S(t) = C(t+n, n) + sum over chains (-1)^(1+weight) C(t+n-trace, n)."""
    _require_n(U, n)
    if counts is None:
        counts = trace_weight_counts(U)
    total = binom_comb(t + n, n)
    for (trace, weight), k in counts.items():
        term = k * binom_comb(t + n - trace, n)
        total += -term if weight % 2 == 0 else term
    return total


def hilbert_function_values(U: DegreeMatrix, n: int, t_max: int) -> list[int]:
    """[H_S(0), ..., H_S(t_max)]: the coefficients of K(z) / (1-z)^(n+1),
    obtained as n+1 running sums of K's coefficients."""
    _require_n(U, n)
    if t_max < 0:
        return []
    K = k_polynomial(U).poly
    coeffs = list(K.coeffs[: t_max + 1]) + [0] * max(0, t_max + 1 - len(K.coeffs))
    return partial_sums(coeffs, n + 1)


def h_vector(U: DegreeMatrix) -> HVector:
    """h-vector as K(z) / (1-z)^c; independent of the ambient dimension."""
    K = k_polynomial(U).poly
    try:
        h = divide_exact(K, IntPoly.one_minus_z_pow(U.c))
    except NotDivisible as exc:
        raise NotDivisible(
            f"NotDivisible: K(z) = {K} is not divisible by (1-z)^{U.c}; "
            "the matrix does not give codimension-c numerics"
        ) from exc
    if h.is_zero():
        raise DegenerateMatrix("DegenerateMatrix: the h-polynomial vanishes identically")
    return HVector.from_poly(h)


def degree_trace_formula(U: DegreeMatrix) -> int:
    """1 + (1/c!) sum over chains (-1)^(c+1+weight) (tr-1)(tr-2)...(tr-c)."""
    c = U.c
    scale = math.factorial(c)
    total = scale
    for (trace, weight), k in trace_weight_counts(U).items():
        sign = 1 if (c + 1 + weight) % 2 == 0 else -1
        total += sign * k * falling_factorial(trace - 1, c)
    if total % scale:
        raise NonIntegerResult(f"NonIntegerResult: degree formula gives {Fraction(total, scale)}")
    return total // scale


def regularity_closed(U: DegreeMatrix) -> int:
    """u_11 + ... + u_ll + u_{l,l+1} + ... + u_{l,l+c-1} - c + 1.

    Needs the canonical ordering.
    """
    if not is_canonical(U):
        raise NotCanonical("NotCanonical: the closed regularity formula needs canonical order")
    l, c = U.l, U.c
    trace = sum(U.u(i, i) for i in range(1, l + 1))
    trace += sum(U.u(l, l + k) for k in range(1, c))
    return trace - c + 1


def regularity_bounds(U: DegreeMatrix, counts: Counter | None = None) -> tuple[int, int]:
    """(max over weight c-1 chains of trace-(c-1), max over all chains of
    trace-weight)."""
    if counts is None:
        counts = trace_weight_counts(U)
    top = U.c - 1
    restricted = max(t - w for (t, w) in counts if w == top)
    unrestricted = max(t - w for (t, w) in counts)
    return restricted, unrestricted


def regularity_max(U: DegreeMatrix) -> int:
    """Regularity from the resolution: max(trace - weight) over the last
    module. Works in any row/column order.

    The unrestricted maximum over all modules is computed too. For a
    matrix that carries a scheme (reduced-admissible) the two must agree;
    for degenerate matrices a mismatch is only logged.
    """
    restricted, unrestricted = regularity_bounds(U)
    if restricted != unrestricted:
        if is_reduced_admissible(canonicalize(U)):
            raise InconsistentFormulas(
                f"regularity: last-module max {restricted} != overall max {unrestricted}"
            )
        log.warning("degenerate matrix: last-module regularity %d, overall max %d",
                    restricted, unrestricted)
    return restricted


def reg_index(U: DegreeMatrix, n: int) -> int:
    """Index of regularity r(S) = tr(V_1^0|...|V_c^0) - n = reg - (n-c) - 1."""
    _require_n(U, n)
    return regularity_closed(U) - (n - U.c) - 1


@dataclass(frozen=True)
class BettiTable:
    """Twists of the Eagon-Northcott modules M_{i+1}, i = 0..c-1.

    ``columns[i]`` maps a shift s (summand R(-s)) to its multiplicity.
    M_0 = R is implicit.
    """

    columns: tuple[dict, ...]

    def ranks(self) -> list[int]:
        return [sum(col.values()) for col in self.columns]

    def k_poly(self) -> IntPoly:
        terms = Counter({0: 1})
        for i, col in enumerate(self.columns):
            for s, k in col.items():
                terms[s] += (-1) ** (i + 1) * k
        return IntPoly.from_terms(terms)

    def regularity(self) -> int:
        """max over i, s of s - i (the ideal's resolution starts at i = 0)."""
        return max(s - i for i, col in enumerate(self.columns) for s in col)

    def as_dict(self) -> dict:
        return {i: dict(sorted(col.items())) for i, col in enumerate(self.columns)}


def betti_table(U: DegreeMatrix) -> BettiTable:
    cols = [Counter() for _ in range(U.c)]
    for (trace, weight), k in trace_weight_counts(U).items():
        cols[weight][trace] += k
    return BettiTable(tuple(dict(sorted(c.items())) for c in cols))


@dataclass(frozen=True)
class HilbertSummary:
    h_vector: HVector
    degree: int
    regularity: int
    reg_index: int
    n: int
    c: int
    series_numerator: IntPoly
    warnings: tuple[str, ...] = field(default=())

    @property
    def dimension(self) -> int:
        return self.n - self.c

    @property
    def r(self) -> int:
        """First t with Delta^d H_S(t) = deg S; equals reg - 1."""
        return self.regularity - 1

    def delta_d(self, t: int) -> int:
        """Delta^d H_S(t): Hilbert function of a general zero-dimensional section."""
        return self.h_vector.partial_sum(t)


def summarize(U: DegreeMatrix, n: int) -> HilbertSummary:
    """All numerical invariants of a standard determinantal scheme in P^n,
    cross-checked against each other."""
    _require_n(U, n)
    if not is_canonical(U):
        raise NotCanonical("NotCanonical: summarize needs a canonical matrix")
    warnings = []
    if not is_reduced_admissible(U):
        warnings.append(
            "matrix is not reduced-admissible (some u_{i,i+c-1} <= 0); "
            "results are formal and may not belong to a scheme"
        )
    counts = trace_weight_counts(U)
    K = k_polynomial(U).poly
    h = h_vector(U)
    deg = degree_trace_formula(U)
    if deg != h.degree:
        raise InconsistentFormulas(f"degree formula {deg} != h(1) = {h.degree}")
    reg = regularity_closed(U)
    restricted, unrestricted = regularity_bounds(U, counts)
    if not warnings:
        if not (reg == restricted == unrestricted == h.length + 1):
            raise InconsistentFormulas(
                f"regularity: closed {reg}, last-module max {restricted}, "
                f"overall max {unrestricted}, h-vector length + 1 = {h.length + 1}"
            )
    elif reg != restricted:
        raise InconsistentFormulas(f"regularity: closed {reg} != last-module max {restricted}")
    idx = reg_index(U, n)
    if idx != reg - (n - U.c) - 1:
        raise InconsistentFormulas("regularity index")
    return HilbertSummary(h, deg, reg, idx, n, U.c, K, tuple(warnings))


def vanishing_identities(U: DegreeMatrix, n: int) -> dict[int, int]:
    """For d+1 <= i <= n, the value of
    s_{n-i}(-1, ..., -n) + sum over chains (-1)^(1+weight) s_{n-i}(tr-1, ..., tr-n),
    where s_j is the j-th elementary symmetric function. All values vanish
    when the Hilbert polynomial has degree d = n - c."""
    _require_n(U, n)
    d = n - U.c
    base = elementary_symmetric([-k for k in range(1, n + 1)])
    acc = {i: base[n - i] for i in range(d + 1, n + 1)}
    for (trace, weight), k in trace_weight_counts(U).items():
        e = elementary_symmetric([trace - j for j in range(1, n + 1)])
        sign = -1 if weight % 2 == 0 else 1
        for i in acc:
            acc[i] += sign * k * e[n - i]
    return acc


def stabilization_point(values: list[int], d: int, target: int) -> int | None:
    """Least t from which Delta^d of ``values`` is constantly ``target``."""
    diffs = difference(values, d)
    if not diffs or diffs[-1] != target:
        return None
    t = len(diffs) - 1
    while t > 0 and diffs[t - 1] == target:
        t -= 1
    return t
