"""Partitions, skew shapes and weights.

Partitions are stored without trailing zeros, so ``Partition((2, 1, 0)) ==
Partition((2, 1))``.  Comparison is lexicographic on the parts, which agrees
with the zero-padded lexicographic order used to order filtrations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, Sequence


class ShapeError(ValueError):
    """Malformed partition or skew-shape data."""


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __init__(self, parts: Iterable[int] = ()):
        ps = [int(p) for p in parts]
        while ps and ps[-1] == 0:
            ps.pop()
        for i, p in enumerate(ps):
            if p < 0:
                raise ShapeError(f"negative part {p} at position {i + 1}")
            if i and p > ps[i - 1]:
                raise ShapeError(f"parts not weakly decreasing at position {i + 1}: {ps}")
            if p == 0:
                raise ShapeError(f"zero part inside partition at position {i + 1}: {ps}")
        object.__setattr__(self, "parts", tuple(ps))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        """0-based part access; indices past the end read as 0."""
        return self.parts[i] if 0 <= i < len(self.parts) else 0

    def __str__(self) -> str:
        return ",".join(map(str, self.parts)) if self.parts else "0"

    def __repr__(self) -> str:
        return f"Partition({self.parts})"

    def length(self) -> int:
        return len(self.parts)

    def size(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> Partition:
        if not self.parts:
            return self
        return Partition(sum(1 for p in self.parts if p > j) for j in range(self.parts[0]))

    def contains(self, other: Partition) -> bool:
        """True when ``other`` is a subdiagram of ``self``."""
        return len(other) <= len(self) and all(other[i] <= self[i] for i in range(len(other)))

    def is_row(self) -> bool:
        return len(self.parts) <= 1

    def is_column(self) -> bool:
        return all(p == 1 for p in self.parts)

    @classmethod
    def parse(cls, text: str) -> Partition:
        text = text.strip()
        if text in ("", "0", "()", "-"):
            return cls()
        parts = []
        for pos, tok in enumerate(text.split(",")):
            tok = tok.strip()
            if not tok.isdigit():
                raise ShapeError(f"bad part {tok!r} at position {pos + 1} in {text!r}")
            parts.append(int(tok))
        return cls(parts)


EMPTY = Partition()


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = EMPTY

    def __post_init__(self):
        if not isinstance(self.outer, Partition):
            object.__setattr__(self, "outer", Partition(self.outer))
        if not isinstance(self.inner, Partition):
            object.__setattr__(self, "inner", Partition(self.inner))
        if not self.outer.contains(self.inner):
            raise ShapeError(f"inner shape {self.inner} not contained in {self.outer}")

    def __str__(self) -> str:
        if not self.inner.parts:
            return str(self.outer)
        return f"{self.outer}/{self.inner}"

    def __repr__(self) -> str:
        return f"SkewShape({self})"

    @classmethod
    def parse(cls, text: str) -> SkewShape:
        if "/" in text:
            a, b = text.split("/", 1)
            return cls(Partition.parse(a), Partition.parse(b))
        return cls(Partition.parse(text))

    def size(self) -> int:
        return self.outer.size() - self.inner.size()

    def conjugate(self) -> SkewShape:
        return SkewShape(self.outer.conjugate(), self.inner.conjugate())

    @cached_property
    def rows(self) -> tuple[tuple[int, int], ...]:
        """Per row ``(first_col, last_col)`` (1-based, inclusive); empty rows give ``first > last``."""
        return tuple((self.inner[i] + 1, self.outer[i]) for i in range(len(self.outer)))

    def row_lengths(self) -> tuple[int, ...]:
        return tuple(self.outer[i] - self.inner[i] for i in range(len(self.outer)))

    @cached_property
    def cells(self) -> tuple[tuple[int, int], ...]:
        """Cells ``(i, j)`` in row-major order, 1-based."""
        return tuple((i + 1, j) for i, (a, b) in enumerate(self.rows) for j in range(a, b + 1))

    @cached_property
    def columns(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Cells grouped by column (top to bottom), for every column meeting the shape."""
        width = self.outer[0]
        cols = []
        for j in range(1, width + 1):
            col = tuple(c for c in self.cells if c[1] == j)
            if col:
                cols.append(col)
        return tuple(cols)

    def column_lengths(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.columns)


def as_shape(shape) -> SkewShape:
    if isinstance(shape, SkewShape):
        return shape
    if isinstance(shape, Partition):
        return SkewShape(shape)
    if isinstance(shape, str):
        return SkewShape.parse(shape)
    return SkewShape(Partition(shape))


def enumerate_partitions(r: int, max_len: int | None = None) -> list[Partition]:
    """Partitions of ``r`` in decreasing lexicographic order: (3), (2,1), (1,1,1)."""
    if r < 0:
        return []
    out: list[Partition] = []

    def rec(rem: int, cap: int, acc: list[int]):
        if rem == 0:
            out.append(Partition(acc))
            return
        if max_len is not None and len(acc) >= max_len:
            return
        for p in range(min(rem, cap), 0, -1):
            acc.append(p)
            rec(rem - p, p, acc)
            acc.pop()

    rec(r, r, [])
    return out


def subpartitions(lam: Partition) -> list[Partition]:
    """All partitions contained in ``lam`` (including the empty one)."""
    out = []

    def rec(i: int, cap: int, acc: list[int]):
        out.append(Partition(acc))
        if i >= len(lam):
            return
        for p in range(1, min(cap, lam[i]) + 1):
            acc.append(p)
            rec(i + 1, p, acc)
            acc.pop()

    rec(0, lam[0] if len(lam) else 0, [])
    return sorted(out, reverse=True)


def horizontal_strip_extensions(lam: Partition, n: int) -> list[Partition]:
    """HS(lam, n): partitions of ``n`` containing ``lam`` such that the difference is a horizontal strip."""
    if lam.size() > n:
        return []
    out = []
    for nu in enumerate_partitions(n):
        if not nu.contains(lam):
            continue
        # at most one added cell per column <=> nu_{i+1} <= lam_i
        if all(nu[i + 1] <= lam[i] for i in range(len(nu))):
            out.append(nu)
    return out


def intermediate_partitions(lam: Partition, mu: Partition, s: int, n: int) -> list[Partition]:
    """Partitions nu with mu <= nu <= lam, |nu/mu| <= s and |lam/nu| <= n - s."""
    if not lam.contains(mu):
        raise ShapeError(f"{mu} is not contained in {lam}")
    out = [
        nu
        for nu in subpartitions(lam)
        if nu.contains(mu)
        and nu.size() - mu.size() <= s
        and lam.size() - nu.size() <= n - s
    ]
    return sorted(out, key=lambda p: (p.size(), tuple(-x for x in p.parts)))


def removable_corners(lam: Partition) -> list[int]:
    """Row indices (0-based) whose last cell can be removed."""
    return [i for i in range(len(lam)) if lam[i] > lam[i + 1]]


def skew_shapes(max_outer: int, max_size: int | None = None, min_size: int = 0) -> list[SkewShape]:
    """All skew shapes ``lam/mu`` with ``|lam| <= max_outer`` and ``min_size <= |lam/mu| <= max_size``."""
    out = []
    for k in range(max_outer + 1):
        for lam in enumerate_partitions(k):
            for mu in subpartitions(lam):
                r = lam.size() - mu.size()
                if r < min_size or (max_size is not None and r > max_size):
                    continue
                out.append(SkewShape(lam, mu))
    return out


# -- weights ---------------------------------------------------------------

Weight = tuple[int, ...]


def is_zero_one(alpha: Sequence[int]) -> bool:
    """Membership in Lambda(n, r)': all coordinates are 0 or 1."""
    return all(a <= 1 for a in alpha)


def has_repeat(alpha: Sequence[int]) -> bool:
    """Membership in Lambda(n, r)'': some coordinate is at least 2."""
    return any(a >= 2 for a in alpha)


def permute_weight(alpha: Sequence[int], sigma: Sequence[int]) -> Weight:
    """``sigma . alpha`` with ``(sigma alpha)_i = alpha_{sigma^{-1}(i)}``.

    ``sigma`` is given 1-based as the image list ``(sigma(1), ..., sigma(n))``.
    """
    n = len(alpha)
    out = [0] * n
    for j in range(n):
        out[sigma[j] - 1] = alpha[j]
    return tuple(out)


def weights(n: int, r: int) -> list[Weight]:
    """Lambda(n, r) in lexicographic order."""
    return [a for a in product(range(r + 1), repeat=n) if sum(a) == r]
