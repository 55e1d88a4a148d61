"""Tableaux on skew shapes and their enumeration.

Conventions follow the Akin-Buchsbaum-Weyman setting: a *semistandard* tableau
is strictly increasing along rows and weakly increasing down columns; a
*co-semistandard* tableau is weakly increasing along rows and strictly
increasing down columns.  Note that this is the transpose of the usual
"column-strict" convention: ``|SST_lam([n])|`` here equals the number of
classical semistandard Young tableaux of the conjugate shape.

Consequently ``count_standard(lam/mu)`` (written ``f^{lam/mu}``) counts the
semistandard tableaux of the *conjugate* shape with distinct entries from
``[r]``.  Since a tableau with distinct entries is semistandard exactly when it
is standard in either convention, this is the ordinary number of standard
Young tableaux of ``lam/mu``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterator, Sequence

from .partitions import Partition, ShapeError, SkewShape, as_shape

KINDS = (
    "all",
    "semistandard",
    "co_semistandard",
    "distinct_entries",
    "standard_distinct",
    "row_strict",
    "row_weak",
)


@dataclass(frozen=True)
class Tableau:
    """A filling of a skew shape.  ``rows[i]`` lists row ``i+1`` left to right."""

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        lens = self.shape.row_lengths()
        if len(self.rows) != len(lens) or any(len(r) != k for r, k in zip(self.rows, lens)):
            raise ShapeError(f"rows {self.rows} do not fit shape {self.shape}")

    @classmethod
    def from_rows(cls, shape, rows: Sequence[Sequence[int]]) -> Tableau:
        shape = as_shape(shape)
        rows = [tuple(r) for r in rows]
        rows += [()] * (len(shape.outer) - len(rows))
        return cls(shape, tuple(rows))

    @classmethod
    def from_word(cls, shape: SkewShape, word: Sequence[int]) -> Tableau:
        rows, k = [], 0
        for length in shape.row_lengths():
            rows.append(tuple(word[k:k + length]))
            k += length
        return cls(shape, tuple(rows))

    def __getitem__(self, cell: tuple[int, int]) -> int:
        i, j = cell
        first = self.shape.inner[i - 1] + 1
        return self.rows[i - 1][j - first]

    def entries(self) -> dict[tuple[int, int], int]:
        return {c: self[c] for c in self.shape.cells}

    def word(self) -> tuple[int, ...]:
        """Row reading word (rows top to bottom, each left to right)."""
        return tuple(x for r in self.rows for x in r)

    def weight(self, n: int) -> tuple[int, ...]:
        alpha = [0] * n
        for x in self.word():
            alpha[x - 1] += 1
        return tuple(alpha)

    def column_entries(self) -> list[tuple[int, ...]]:
        return [tuple(self[c] for c in col) for col in self.shape.columns]

    def replace(self, cell: tuple[int, int], value: int) -> Tableau:
        i, j = cell
        first = self.shape.inner[i - 1] + 1
        row = list(self.rows[i - 1])
        row[j - first] = value
        rows = list(self.rows)
        rows[i - 1] = tuple(row)
        return Tableau(self.shape, tuple(rows))

    def has_distinct_entries(self) -> bool:
        w = self.word()
        return len(set(w)) == len(w)

    def is_semistandard(self) -> bool:
        return _check(self, strict_rows=True, strict_cols=False)

    def is_co_semistandard(self) -> bool:
        return _check(self, strict_rows=False, strict_cols=True)

    def to_json(self) -> list[list[int | None]]:
        out = []
        for i, row in enumerate(self.rows):
            out.append([None] * self.shape.inner[i] + list(row))
        return out

    @classmethod
    def from_json(cls, data: list[list[int | None]], shape: SkewShape | None = None) -> Tableau:
        if shape is None:
            outer = Partition(len(r) for r in data)
            inner = Partition(sum(1 for x in r if x is None) for r in data)
            shape = SkewShape(outer, inner)
        return cls(shape, tuple(tuple(x for x in r if x is not None) for r in data))

    def __str__(self) -> str:
        return json.dumps(self.to_json())


def _check(t: Tableau, strict_rows: bool, strict_cols: bool) -> bool:
    for row in t.rows:
        for a, b in zip(row, row[1:]):
            if a > b or (strict_rows and a == b):
                return False
    for col in t.column_entries():
        for a, b in zip(col, col[1:]):
            if a > b or (strict_cols and a == b):
                return False
    return True


def _neighbours(shape: SkewShape) -> list[tuple[int | None, int | None]]:
    """For each cell (row-major), the positions of its left and upper neighbours in the shape."""
    index = {c: k for k, c in enumerate(shape.cells)}
    return [(index.get((i, j - 1)), index.get((i - 1, j))) for (i, j) in shape.cells]


def iter_tableaux(shape, n: int, kind: str = "all") -> Iterator[Tableau]:
    """Generate tableaux of ``shape`` with entries in ``[n]``, lexicographic in the reading word."""
    if kind not in KINDS:
        raise ValueError(f"unknown tableau kind {kind!r}; expected one of {KINDS}")
    shape = as_shape(shape)
    cells = shape.cells
    nb = _neighbours(shape)
    size = len(cells)
    row_strict = kind in ("semistandard", "standard_distinct", "row_strict")
    row_weak = kind in ("co_semistandard", "row_weak")
    col_weak = kind in ("semistandard", "standard_distinct")
    col_strict = kind == "co_semistandard"
    distinct = kind in ("distinct_entries", "standard_distinct")
    word = [0] * size
    used = [False] * (n + 1)

    def rec(k: int):
        if k == size:
            yield Tableau.from_word(shape, word)
            return
        left, up = nb[k]
        lo = 1
        if left is not None:
            if row_strict:
                lo = max(lo, word[left] + 1)
            elif row_weak:
                lo = max(lo, word[left])
        if up is not None:
            if col_weak:
                lo = max(lo, word[up])
            elif col_strict:
                lo = max(lo, word[up] + 1)
        for v in range(lo, n + 1):
            if distinct and used[v]:
                continue
            word[k] = v
            used[v] = True
            yield from rec(k + 1)
            used[v] = False

    if n < 1 and size:
        return
    yield from rec(0)


def enumerate_tableaux(shape, n: int, kind: str = "all") -> list[Tableau]:
    return list(iter_tableaux(shape, n, kind))


@lru_cache(maxsize=None)
def count_sst(shape: SkewShape, n: int) -> int:
    return sum(1 for _ in iter_tableaux(shape, n, "semistandard"))


@lru_cache(maxsize=None)
def count_csst(shape: SkewShape, n: int) -> int:
    return sum(1 for _ in iter_tableaux(shape, n, "co_semistandard"))


@lru_cache(maxsize=None)
def count_standard(shape) -> int:
    """``f^{lam/mu}``: semistandard tableaux of the conjugate shape with distinct entries from ``[r]``.

    Counted literally from that description; by transposition it is the
    ordinary number of standard Young tableaux of ``lam/mu``.
    """
    shape = as_shape(shape)
    r = shape.size()
    return sum(1 for _ in iter_tableaux(shape.conjugate(), r, "standard_distinct"))


@lru_cache(maxsize=None)
def count_standard_by_corners(outer: Partition, inner: Partition) -> int:
    """Standard tableaux of ``outer/inner`` by removing the cell holding the largest entry."""
    if outer == inner:
        return 1
    total = 0
    for i in range(len(outer)):
        if outer[i] > outer[i + 1] and outer[i] > inner[i]:
            parts = list(outer.parts)
            parts[i] -= 1
            total += count_standard_by_corners(Partition(parts), inner)
    return total


def sign_of_sort(seq: Sequence[int]) -> int:
    """Sign of the permutation sorting ``seq``; 0 if ``seq`` has a repeat."""
    if len(set(seq)) != len(seq):
        return 0
    inv = 0
    for a in range(len(seq)):
        for b in range(a + 1, len(seq)):
            if seq[a] > seq[b]:
                inv += 1
    return -1 if inv & 1 else 1


def signed_permutations(seq: Sequence[int]) -> list[tuple[tuple[int, ...], int]]:
    """All orderings of ``seq`` (positionally distinct) with the sign of the rearrangement."""
    k = len(seq)
    out = []
    for perm in permutations(range(k)):
        out.append((tuple(seq[p] for p in perm), sign_of_sort(perm)))
    return out


def distinct_rearrangements(seq: Sequence[int]) -> list[tuple[int, ...]]:
    """Distinct sequences obtained by rearranging the multiset ``seq``, in lexicographic order."""
    items = sorted(seq)
    out: list[tuple[int, ...]] = []
    counts: dict[int, int] = {}
    for x in items:
        counts[x] = counts.get(x, 0) + 1
    keys = sorted(counts)
    acc: list[int] = []

    def rec():
        if len(acc) == len(items):
            out.append(tuple(acc))
            return
        for x in keys:
            if counts[x]:
                counts[x] -= 1
                acc.append(x)
                rec()
                acc.pop()
                counts[x] += 1

    rec()
    return out
