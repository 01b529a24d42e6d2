"""h-vectors of arithmetically Gorenstein divisors Y in |mH - K| on an aCM
scheme S of dimension d >= 2.

Write D(t) for the Hilbert function of a general zero-dimensional linear
section of S (the partial sums of h_S: 0 for t < 0, deg S for t >= r where
r = reg S - 1). For m >= r - d,

    h_Y(t) = D(t) + D(m - t + d) - deg S,      t = 0, ..., m + d,

and for m >= 2r - d this splits into a rising shoulder D(t), a plateau at
deg S on r <= t <= m - r + d, and the mirrored shoulder.

Only the numerical bound 2r - d on m is checked here. Irreducibility of a
general Y also needs m >= reg of the dual canonical sheaf, which cannot be
read off the degree matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .chains import trace_weight_counts
from .degmatrix import (
    DegreeMatrix,
    irreducibility_failure,
    is_canonical,
    is_smooth_admissible,
)
from .errors import (
    DimensionTooSmall,
    InconsistentFormulas,
    MTooSmall,
    NotAdmissible,
    NotCanonical,
)
from .exactpoly import HVector, binom_comb, partial_sums
from .hilbert import HilbertSummary, degree_trace_formula, hilbert_function, hilbert_function_values, summarize

__all__ = [
    "AGHVector",
    "canonical_h_function",
    "canonical_hilbert_function",
    "ag_h_vector_general",
    "ag_h_vector_piecewise",
    "full_hilbert_function_Y",
    "full_hilbert_function_Y_values",
    "verify_symmetry",
    "verify_decreasing_type",
    "m_min_numeric",
    "ag_from_degree_matrix",
    "ag_smooth_from_degree_matrix",
    "OMEGA_DUAL_WARNING",
    "plateau",
]

OMEGA_DUAL_WARNING = (
    "m_min_numeric = 2r - d is only the numerical bound; a general Y is "
    "irreducible once m is also at least the regularity of the dual of the "
    "canonical sheaf, which is not computable from the degree matrix"
)


@dataclass(frozen=True)
class AGHVector:
    entries: HVector
    m: int
    d: int
    base_degree: int
    m_min_numeric: int
    is_symmetric: bool
    is_decreasing_type: bool
    warnings: tuple[str, ...] = field(default=())

    @property
    def length(self) -> int:
        return self.entries.length

    @property
    def degree(self) -> int:
        return self.entries.degree


def _entries(h) -> tuple[int, ...]:
    return tuple(h.entries) if isinstance(h, HVector) else tuple(h)


def verify_symmetry(h) -> bool:
    """h_s = 1 and h_i = h_{s-i} for all i."""
    e = _entries(h)
    return bool(e) and e[-1] == 1 and e == e[::-1]


def verify_decreasing_type(h) -> bool:
    """Once the first difference (with h_{-1} = 0) is negative, it stays negative."""
    e = _entries(h)
    gone_negative = False
    prev = 0
    for x in e:
        step = x - prev
        prev = x
        if step < 0:
            gone_negative = True
        elif gone_negative:
            return False
    return True


def canonical_h_function(h: HVector, d: int, t: int) -> int:
    """(d+1)-th difference of the canonical module's Hilbert function: h_{d+1-t}."""
    return h[d + 1 - t]


def canonical_hilbert_function(h: HVector, d: int, t: int) -> int:
    """Hilbert function of the canonical module K_S, fixed by H(t) = 0 for t << 0.

    It is the (d+1)-fold summation of t -> h_{d+1-t}, i.e.
    sum_j h_j * C(t + j - 1, d) with the combinatorial binomial.
    """
    e = h.entries
    if t + len(e) - 2 < d:
        return 0
    return sum(hj * binom_comb(t + j - 1, d) for j, hj in enumerate(e))


def _require_dim(base: HilbertSummary):
    if base.dimension < 2:
        raise DimensionTooSmall(
            f"DimensionTooSmall: need dim S = n - c >= 2, got {base.dimension}"
        )


def m_min_numeric(base: HilbertSummary) -> int:
    return 2 * base.r - base.dimension


def _finish(values, base: HilbertSummary, m: int) -> AGHVector:
    h = HVector(values)
    return AGHVector(
        entries=h,
        m=m,
        d=base.dimension,
        base_degree=base.degree,
        m_min_numeric=m_min_numeric(base),
        is_symmetric=verify_symmetry(h),
        is_decreasing_type=verify_decreasing_type(h),
        warnings=(OMEGA_DUAL_WARNING,),
    )


def ag_h_vector_general(base: HilbertSummary, m: int) -> AGHVector:
    """h_Y(t) = D(t) + D(m-t+d) - deg S for t = 0..m+d; needs m >= r - d."""
    _require_dim(base)
    d, r, deg = base.dimension, base.r, base.degree
    if m < r - d:
        raise MTooSmall(m, r - d)
    D = base.delta_d
    return _finish([D(t) + D(m - t + d) - deg for t in range(m + d + 1)], base, m)


def ag_h_vector_piecewise(base: HilbertSummary, m: int) -> AGHVector:
    """Shoulder / plateau / mirrored shoulder form; needs m >= 2r - d."""
    _require_dim(base)
    d, r, deg = base.dimension, base.r, base.degree
    if m < 2 * r - d:
        raise MTooSmall(m, 2 * r - d)
    D = base.delta_d
    values = []
    for t in range(m + d + 1):
        if t <= r:
            values.append(D(t))
        elif t <= m - r + d:
            values.append(deg)
        else:
            values.append(D(m - t + d))
    return _finish(values, base, m)


def full_hilbert_function_Y(base: HilbertSummary, m: int, t: int, U: DegreeMatrix | None = None) -> int:
    """H_Y(t) = H_S(t) - H_{K_S}(t - m).

    H_S comes from the degree matrix when ``U`` is given, otherwise from
    the h-vector of ``base``.
    """
    _require_dim(base)
    d, r = base.dimension, base.r
    if m < r - d:
        raise MTooSmall(m, r - d)
    h = base.h_vector
    if U is not None:
        hs = hilbert_function(U, base.n, t)
    else:
        hs = sum(hi * binom_comb(t - i + d, d) for i, hi in enumerate(h.entries))
    return hs - canonical_hilbert_function(h, d, t - m)


def full_hilbert_function_Y_values(base: HilbertSummary, m: int, t_max: int,
                                   U: DegreeMatrix | None = None) -> list[int]:
    """[H_Y(0), ..., H_Y(t_max)] in one pass."""
    _require_dim(base)
    d, r = base.dimension, base.r
    if m < r - d:
        raise MTooSmall(m, r - d)
    h = base.h_vector
    if U is not None:
        hs = hilbert_function_values(U, base.n, t_max)
    else:
        hs = [sum(hi * binom_comb(t - i + d, d) for i, hi in enumerate(h.entries))
              for t in range(t_max + 1)]
    # K_S is the (d+1)-fold running sum of u -> h_{d+1-u}, zero below d+1-s
    lo = min(d + 1 - h.length, -m)
    ks = partial_sums([h[d + 1 - u] for u in range(lo, t_max - m + 1)], d + 1)
    return [hs[t] - ks[t - m - lo] for t in range(t_max + 1)]


def _chain_sum_delta_d(counts, c: int, t: int) -> int:
    total = binom_comb(t + c, c)
    for (trace, weight), k in counts.items():
        term = k * binom_comb(t + c - trace, c)
        total += -term if weight % 2 == 0 else term
    return total


def _chain_sum_h_vector(U: DegreeMatrix, n: int, m: int) -> list[int]:
    """h_Y written directly as chain sums over U, regime by regime."""
    c = U.c
    counts = trace_weight_counts(U)
    r = sum(U.u(i, i) for i in range(1, U.l + 1)) + sum(U.u(U.l, U.l + k) for k in range(1, c)) - c
    deg = degree_trace_formula(U)
    shoulder = [_chain_sum_delta_d(counts, c, t) for t in range(max(r, 0))]
    out = []
    for t in range(m + n - c + 1):
        if t < r:
            out.append(shoulder[t])
        elif t <= m - r + n - c:
            out.append(deg)
        else:
            out.append(shoulder[m - t + n - c])
    return out


def ag_from_degree_matrix(U: DegreeMatrix, n: int, m: int) -> AGHVector:
    """h-vector of a general Y in |mH - K| on an irreducible standard
    determinantal S in P^n with degree matrix U.

    Needs U canonical, 1 <= c <= n-2, u_{i,i+c} > 0 and m >= 2r - (n-c).
    The result is also recomputed from direct chain sums and from the
    three-term formula; any disagreement raises InconsistentFormulas.
    """
    if not is_canonical(U):
        raise NotCanonical("NotCanonical: the matrix must be in canonical order")
    c = U.c
    if not 1 <= c <= n - 2:
        raise DimensionTooSmall(f"DimensionTooSmall: need 1 <= c <= n-2, got c={c}, n={n}")
    why = irreducibility_failure(U, n)
    if why is not None:
        raise NotAdmissible(f"NotAdmissible: {why}")
    base = summarize(U, n)
    bound = m_min_numeric(base)
    if m < bound:
        raise MTooSmall(m, bound)
    ag = ag_h_vector_piecewise(base, m)
    general = ag_h_vector_general(base, m)
    direct = _chain_sum_h_vector(U, n, m)
    if ag.entries != general.entries or ag.entries != direct:
        raise InconsistentFormulas(
            f"h_Y mismatch: piecewise {ag.entries.entries}, general "
            f"{general.entries.entries}, chain sums {tuple(direct)}"
        )
    return ag


def ag_smooth_from_degree_matrix(U: DegreeMatrix, n: int, m: int) -> AGHVector:
    """Same numbers as :func:`ag_from_degree_matrix`, gated by the smoothness
    hypotheses on U and n."""
    if not is_canonical(U):
        raise NotCanonical("NotCanonical: the matrix must be in canonical order")
    if not is_smooth_admissible(U, n):
        raise NotAdmissible("NotAdmissible: smoothness hypotheses fail for this matrix and n")
    return ag_from_degree_matrix(U, n, m)


def plateau(ag: AGHVector) -> range:
    """Indices t with h_Y(t) = deg S."""
    e = ag.entries.entries
    idx = [t for t, x in enumerate(e) if x == ag.base_degree]
    return range(idx[0], idx[-1] + 1) if idx else range(0)

