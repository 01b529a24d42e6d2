"""Generators of homogeneous degree matrices for fixtures and sweeps."""

from __future__ import annotations

import random
from itertools import combinations_with_replacement
from typing import Iterator

from .degmatrix import DegreeMatrix, from_shifts


def random_matrix(rng: random.Random, l: int, c: int, max_entry: int) -> DegreeMatrix:
    """Canonical matrix with every entry in 1..max_entry, from sorted shifts."""
    if l < 1 or c < 1 or max_entry < 1:
        raise ValueError("need l, c, max_entry >= 1")
    ncols = l + c - 1
    a = sorted([0] + [rng.randint(0, max_entry - 1) for _ in range(ncols - 1)])
    b = sorted(rng.randint(a[-1] + 1, max_entry) for _ in range(l))
    return from_shifts(a, b)


def random_matrices(l: int, c: int, max_entry: int, count: int, seed: int | None = None) -> list[DegreeMatrix]:
    rng = random.Random(seed)
    return [random_matrix(rng, l, c, max_entry) for _ in range(count)]


def shift_sweep(max_l: int = 3, max_c: int = 4, spread: int = 3, min_entries=(1,)) -> Iterator[DegreeMatrix]:
    """Every canonical matrix with l <= max_l, c <= max_c, column and row
    shift spreads <= ``spread``, and smallest entry u_{1,l+c-1} in
    ``min_entries``."""
    for l in range(1, max_l + 1):
        for c in range(1, max_c + 1):
            ncols = l + c - 1
            for a_tail in combinations_with_replacement(range(spread + 1), ncols - 1):
                a = (0,) + a_tail
                for b_tail in combinations_with_replacement(range(spread + 1), l - 1):
                    for low in min_entries:
                        b1 = a[-1] + low
                        yield from_shifts(a, (b1,) + tuple(b1 + x for x in b_tail))
