"""Chains (V1|V2|...) of square submatrices and the Hilbert-series numerator.

A chain picks l columns for V1 (all rows), then blocks of columns lying
strictly to the right of the previous block, each paired with a subset of
the previous block's rows. Its trace is the sum of the diagonal sums of
the blocks, and its weight is dim V2 + dim V3 + ...  Chains of weight i
index the summands R(-trace) of the (i+1)-st module of the Eagon-Northcott
resolution.

:func:`enumerate_raw` enumerates the same summands straight from the
exterior/symmetric power decomposition (a column subset of size l+i plus a
row multiset of size i). It shares no code with :func:`enumerate_chains`
and serves as an oracle for it.
"""

from __future__ import annotations

import math
from collections import Counter, OrderedDict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from typing import Iterator

from .degmatrix import DegreeMatrix
from .errors import DegenerateMatrix
from .exactpoly import IntPoly

__all__ = [
    "Chain",
    "KPolynomial",
    "enumerate_chains",
    "enumerate_raw",
    "chain_counts_closed_form",
    "trace_weight_counts",
    "raw_trace_weight_counts",
    "k_polynomial",
    "chain_from_raw",
    "chain_to_raw",
]


@dataclass(frozen=True)
class Chain:
    """One chain, with 1-based row and column indices.

    ``col_blocks[0]`` and ``row_sets[0]`` describe V1 (``row_sets[0]`` is
    always ``(1, ..., l)``).
    """

    col_blocks: tuple[tuple[int, ...], ...]
    row_sets: tuple[tuple[int, ...], ...]
    trace: int
    weight: int

    def __str__(self):
        parts = []
        for rows, cols in zip(self.row_sets, self.col_blocks):
            parts.append(
                "rows{" + ",".join(map(str, rows)) + "} cols{" + ",".join(map(str, cols)) + "}"
            )
        return "(" + " | ".join(parts) + f")  trace={self.trace} weight={self.weight}"


def _grow(entries, rows, start, trace, weight, blocks, rowsets):
    yield blocks, rowsets, trace, weight
    ncols = len(entries[0])
    for size in range(1, min(len(rows), ncols - start) + 1):
        for cols in combinations(range(start, ncols), size):
            for sub in combinations(rows, size):
                t = trace
                for r, col in zip(sub, cols):
                    t += entries[r][col]
                yield from _grow(
                    entries, sub, cols[-1] + 1, t, weight + size,
                    blocks + (cols,), rowsets + (sub,),
                )


def enumerate_chains(U: DegreeMatrix) -> Iterator[Chain]:
    """Yield every chain of U exactly once, in a deterministic order.

    The order is by V1's columns, then (depth first) by the columns and rows
    of each following block; a chain comes before its extensions.
    """
    e = U.entries
    l, ncols = U.l, U.ncols
    all_rows = tuple(range(l))
    for v1 in combinations(range(ncols), l):
        tr1 = sum(e[r][v1[r]] for r in range(l))
        for blocks, rowsets, trace, weight in _grow(e, all_rows, v1[-1] + 1, tr1, 0, (v1,), (all_rows,)):
            yield Chain(
                tuple(tuple(j + 1 for j in b) for b in blocks),
                tuple(tuple(i + 1 for i in rs) for rs in rowsets),
                trace,
                weight,
            )


def _fold_tail(entries, ncols, rows, start, trace, weight, acc):
    acc[trace, weight] += 1
    for size in range(1, min(len(rows), ncols - start) + 1):
        w = weight + size
        for cols in combinations(range(start, ncols), size):
            nxt = cols[-1] + 1
            for sub in combinations(rows, size):
                t = trace
                for r, col in zip(sub, cols):
                    t += entries[r][col]
                _fold_tail(entries, ncols, sub, nxt, t, w, acc)


def _fold_v1_partition(entries, v1_choices) -> Counter:
    acc = Counter()
    l = len(entries)
    ncols = len(entries[0])
    rows = tuple(range(l))
    for v1 in v1_choices:
        tr1 = 0
        for r in rows:
            tr1 += entries[r][v1[r]]
        _fold_tail(entries, ncols, rows, v1[-1] + 1, tr1, 0, acc)
    return acc


_COUNTS_CACHE: OrderedDict = OrderedDict()
_CACHE_SIZE = 128


def trace_weight_counts(U: DegreeMatrix, threads: int | None = None) -> Counter:
    """Multiset {(trace, weight): count} over all chains.

    With ``threads > 1`` the V1 column choices are split across worker
    processes and the partial counts merged; the result is identical.
    Results are memoised per matrix; a fresh Counter is returned each call.
    """
    e = U.entries
    hit = _COUNTS_CACHE.get(e)
    if hit is not None:
        _COUNTS_CACHE.move_to_end(e)
        return Counter(hit)
    v1s = list(combinations(range(U.ncols), U.l))
    if not threads or threads <= 1 or len(v1s) < 2:
        total = _fold_v1_partition(e, v1s)
    else:
        k = min(threads, len(v1s))
        parts = [v1s[i::k] for i in range(k)]
        total = Counter()
        with ProcessPoolExecutor(max_workers=k) as pool:
            for partial in pool.map(_fold_v1_partition, [e] * k, parts):
                total.update(partial)
    _COUNTS_CACHE[e] = dict(total)
    if len(_COUNTS_CACHE) > _CACHE_SIZE:
        _COUNTS_CACHE.popitem(last=False)
    return Counter(total)


def clear_cache():
    _COUNTS_CACHE.clear()


def enumerate_raw(U: DegreeMatrix) -> Iterator[tuple[int, int]]:
    """Yield (trace, weight) for each summand of the Eagon-Northcott module.

    For weight i: a column subset j_1 < ... < j_{l+i} and a row multiset
    k_1 <= ... <= k_i, with trace
    u_{1,j_1} + ... + u_{l,j_l} + u_{k_1,j_{l+1}} + ... + u_{k_i,j_{l+i}}.
    """
    e = U.entries
    l, c = U.l, U.c
    for i in range(c):
        for cols in combinations(range(U.ncols), l + i):
            head = 0
            for v in range(l):
                head += e[v][cols[v]]
            for ks in combinations_with_replacement(range(l), i):
                tail = 0
                for v, k in enumerate(ks):
                    tail += e[k][cols[l + v]]
                yield head + tail, i


def raw_trace_weight_counts(U: DegreeMatrix) -> Counter:
    return Counter(enumerate_raw(U))


def chain_counts_closed_form(l: int, c: int) -> list[int]:
    """Number of chains of each weight i = 0..c-1: C(l+c-1, l+i) C(l+i-1, i)."""
    return [math.comb(l + c - 1, l + i) * math.comb(l + i - 1, i) for i in range(c)]


def chain_to_raw(chain: Chain) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Map a chain to (column subset, row multiset), both 1-based and sorted."""
    cols = tuple(j for block in chain.col_blocks for j in block)
    rows = tuple(sorted(r for rs in chain.row_sets[1:] for r in rs))
    return cols, rows


def chain_from_raw(U: DegreeMatrix, cols, rows) -> Chain:
    """Inverse of :func:`chain_to_raw`.

    Block m+1 takes the rows of multiplicity >= m in the multiset; column
    blocks are cut left to right with those sizes.
    """
    l = U.l
    cols = tuple(sorted(cols))
    mult = Counter(rows)
    if len(cols) != l + len(rows) or any(r < 1 or r > l for r in rows):
        raise ValueError("column subset and row multiset sizes do not match")
    row_sets = [tuple(range(1, l + 1))]
    m = 1
    while True:
        level = tuple(sorted(r for r, k in mult.items() if k >= m))
        if not level:
            break
        row_sets.append(level)
        m += 1
    blocks, pos = [], 0
    trace = 0
    for rs in row_sets:
        block = cols[pos:pos + len(rs)]
        pos += len(rs)
        blocks.append(block)
        trace += sum(U.u(r, j) for r, j in zip(rs, block))
    return Chain(tuple(blocks), tuple(row_sets), trace, len(rows))


@dataclass(frozen=True)
class KPolynomial:
    """1 + sum over chains of (-1)^(1+weight) z^trace.

    Divided by (1-z)^(n+1) it is the Hilbert series of the scheme in P^n.
    """

    poly: IntPoly
    term_count: int
    counts_by_weight: dict = field(hash=False)
    trace_counts: Counter = field(hash=False, repr=False)


def k_polynomial(U: DegreeMatrix, n: int | None = None, *, threads: int | None = None) -> KPolynomial:
    """Assemble the K-polynomial of U. ``n`` only fixes the denominator
    power of the Hilbert series and does not affect the result."""
    counts = trace_weight_counts(U, threads=threads)
    terms = Counter({0: 1})
    by_weight = Counter()
    for (trace, weight), k in counts.items():
        if trace < 0:
            raise DegenerateMatrix(
                f"DegenerateMatrix: a chain has negative trace {trace}; "
                "the Hilbert series numerator is not a polynomial"
            )
        terms[trace] += (-1) ** (1 + weight) * k
        by_weight[weight] += k
    return KPolynomial(
        poly=IntPoly.from_terms(terms),
        term_count=sum(by_weight.values()),
        counts_by_weight={w: by_weight[w] for w in range(U.c)},
        trace_counts=counts,
    )
