"""Degree matrices of homogeneous l x (l+c-1) matrices of forms.

Entries are written u[i][j] in 1-based notation throughout the docs and
error messages. A degree matrix is additive of rank one: there are shift
vectors a (columns) and b (rows) with ``u[i][j] = b[i] - a[j]``; we
normalise ``a[1] = 0``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .errors import BadShape, IndexOutOfRange, NotCanonical, NotHomogeneous

__all__ = [
    "DegreeMatrix",
    "ShiftPair",
    "validate",
    "from_shifts",
    "shifts",
    "canonicalize",
    "is_canonical",
    "is_reduced_admissible",
    "is_irreducible_admissible",
    "is_smooth_admissible",
    "parse_matrix",
    "homogeneity_violation",
]


@dataclass(frozen=True)
class DegreeMatrix:
    """A validated degree matrix. Build it with :func:`validate`."""

    entries: tuple[tuple[int, ...], ...]

    @property
    def l(self) -> int:  # noqa: E743
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0])

    @property
    def c(self) -> int:
        return self.ncols - self.l + 1

    @property
    def shape(self) -> tuple[int, int]:
        return self.l, self.ncols

    def u(self, i: int, j: int) -> int:
        """Entry u_{i,j}, 1-based."""
        return self.entries[i - 1][j - 1]

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def __str__(self):
        width = max(len(str(x)) for row in self.entries for x in row)
        return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in self.entries)


@dataclass(frozen=True)
class ShiftPair:
    col_shifts: tuple[int, ...]
    row_shifts: tuple[int, ...]

    def rebuild(self) -> list[list[int]]:
        return [[b - a for a in self.col_shifts] for b in self.row_shifts]


def _check_shape(entries) -> tuple[tuple[int, ...], ...]:
    try:
        rows = [list(r) for r in entries]
    except TypeError:
        raise BadShape("BadShape: expected a list of rows") from None
    if not rows or not rows[0]:
        raise BadShape("BadShape: the matrix is empty")
    width = len(rows[0])
    for i, row in enumerate(rows, 1):
        if len(row) != width:
            raise BadShape(f"BadShape: row {i} has {len(row)} entries, row 1 has {width}")
        for j, x in enumerate(row, 1):
            if isinstance(x, bool) or not isinstance(x, int):
                raise BadShape(f"BadShape: entry ({i},{j}) = {x!r} is not an integer")
    if width < len(rows):
        raise BadShape(
            f"BadShape: {len(rows)} rows but only {width} columns; need columns >= rows"
        )
    return tuple(tuple(r) for r in rows)


def homogeneity_violation(entries) -> tuple[int, int, int, int] | None:
    """First (i, k, j, r), 1-based, with u_ij + u_kr != u_ir + u_kj, else None.

    Uses the rank-one test: u_ij - u_1j must not depend on j.
    """
    first = entries[0]
    for i in range(1, len(entries)):
        row = entries[i]
        offset = row[0] - first[0]
        for j in range(1, len(row)):
            if row[j] - first[j] != offset:
                return (1, i + 1, 1, j + 1)
    return None


def validate(entries) -> DegreeMatrix:
    """Check shape and homogeneity, returning a :class:`DegreeMatrix`.

    >>> validate([[2, 2, 2, 1], [3, 3, 3, 2]]).c
    3
    """
    if isinstance(entries, DegreeMatrix):
        return entries
    rows = _check_shape(entries)
    bad = homogeneity_violation(rows)
    if bad is not None:
        raise NotHomogeneous(bad)
    return DegreeMatrix(rows)


def from_shifts(col_shifts: Sequence[int], row_shifts: Sequence[int]) -> DegreeMatrix:
    """Matrix with u_ij = b_i - a_j. Homogeneous by construction."""
    return validate([[b - a for a in col_shifts] for b in row_shifts])


def shifts(U: DegreeMatrix) -> ShiftPair:
    first = U.entries[0]
    a = tuple(first[0] - x for x in first)
    b = tuple(row[0] for row in U.entries)
    return ShiftPair(a, b)


def canonicalize(U: DegreeMatrix) -> DegreeMatrix:
    """Sort rows by b and columns by a (stable), so entries decrease along
    rows and increase down columns."""
    sp = shifts(U)
    cols = sorted(range(U.ncols), key=lambda j: sp.col_shifts[j])
    rows = sorted(range(U.l), key=lambda i: sp.row_shifts[i])
    return DegreeMatrix(tuple(tuple(U.entries[i][j] for j in cols) for i in rows))


def is_canonical(U: DegreeMatrix) -> bool:
    e = U.entries
    rows_ok = all(e[i][0] <= e[i + 1][0] for i in range(U.l - 1))
    cols_ok = all(e[0][j] >= e[0][j + 1] for j in range(U.ncols - 1))
    return rows_ok and cols_ok


def _require_canonical(U: DegreeMatrix):
    if not is_canonical(U):
        raise NotCanonical(
            "NotCanonical: entries must increase from right to left and from top to bottom"
        )


def is_reduced_admissible(U: DegreeMatrix) -> bool:
    """u_{i,i+c-1} > 0 for i = 1..l (existence of a reduced scheme)."""
    _require_canonical(U)
    c = U.c
    return all(U.u(i, i + c - 1) > 0 for i in range(1, U.l + 1))


def irreducibility_failure(U: DegreeMatrix, n: int) -> str | None:
    """Reason the irreducibility criterion fails, or None if it holds."""
    _require_canonical(U)
    c = U.c
    if n <= c:
        return f"need n > c, got n={n}, c={c}"
    for i in range(1, U.l):
        if U.u(i, i + c) <= 0:
            return f"u_{{{i},{i + c}}} = {U.u(i, i + c)} is not positive"
    return None


def is_irreducible_admissible(U: DegreeMatrix, n: int) -> bool:
    """n > c and u_{i,i+c} > 0 for i = 1..l-1."""
    return irreducibility_failure(U, n) is None


def is_smooth_admissible(U: DegreeMatrix, n: int) -> bool:
    """Numerical hypotheses for a smooth standard determinantal scheme in P^n.

    Requires 1 <= c <= n-2, n <= 2c+1, no zero entry, and for every
    column k a positive entry in row k + (n-c)//2 + 1 - n (row 1 when that
    index is not positive).
    """
    _require_canonical(U)
    c, l = U.c, U.l
    if not (1 <= c <= n - 2) or n > 2 * c + 1:
        return False
    if any(x == 0 for row in U.entries for x in row):
        return False
    half = (n - c) // 2
    for k in range(1, U.ncols + 1):
        i = k + half + 1 - n
        if i <= 0:
            i = 1
        if i > l:
            raise IndexOutOfRange(f"IndexOutOfRange: column {k} needs row {i} > l = {l}")
        if U.u(i, k) <= 0:
            return False
    return True


def parse_matrix(text: str) -> list[list[int]]:
    """Parse JSON ``{"entries": [[...]]}`` (or a bare JSON list) or
    whitespace-separated text rows; ``#`` starts a comment in text form."""
    stripped = text.strip()
    if stripped.startswith("{") or stripped.startswith("["):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise BadShape(f"BadShape: invalid JSON ({exc.msg})") from None
        if isinstance(data, dict):
            if "entries" not in data:
                raise BadShape('BadShape: JSON object lacks an "entries" key')
            data = data["entries"]
        if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
            raise BadShape("BadShape: entries must be a list of lists")
        return data
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append([int(tok) for tok in line.split()])
        except ValueError:
            raise BadShape(f"BadShape: line {lineno} has a non-integer token") from None
    return rows
