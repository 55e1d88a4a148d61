"""The monoids IS_n, PT_n, T_n and S_n as partial self-maps of [n].

An element is stored as its image sequence ``(p(1), ..., p(n))`` with ``None``
for points outside the domain.  The matching 0/1 matrix has ``a[i][j] = 1``
exactly when ``p(j) = i``, so composition of maps is matrix multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import permutations, product
from math import comb, factorial
from typing import Iterable, Iterator, Sequence

from .linalg import RationalMatrix

MAX_N = 6


class MonoidKind(str, Enum):
    IS = "IS"
    PT = "PT"
    T = "T"
    SYM = "Sym"

    @classmethod
    def parse(cls, text) -> MonoidKind:
        if isinstance(text, MonoidKind):
            return text
        key = str(text).strip().lower()
        for k in cls:
            if k.value.lower() == key:
                return k
        raise ValueError(f"unknown monoid kind {text!r}; expected one of is, pt, t, sym")

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class PartialTransformation:
    images: tuple[int | None, ...]

    def __post_init__(self):
        n = len(self.images)
        for j, v in enumerate(self.images):
            if v is not None and not 1 <= v <= n:
                raise ValueError(f"image {v} of point {j + 1} outside [1, {n}]")

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> PartialTransformation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def empty(cls, n: int) -> PartialTransformation:
        return cls((None,) * n)

    @classmethod
    def parse(cls, text: str) -> PartialTransformation:
        """Parse ``"2,-,1"`` (``-`` marks an undefined point)."""
        out = []
        for pos, tok in enumerate(text.split(",")):
            tok = tok.strip()
            if tok == "-":
                out.append(None)
            elif tok.isdigit():
                out.append(int(tok))
            else:
                raise ValueError(f"bad entry {tok!r} at position {pos + 1} in {text!r}")
        return cls(tuple(out))

    def __str__(self) -> str:
        return ",".join("-" if v is None else str(v) for v in self.images)

    def __call__(self, j: int) -> int | None:
        return self.images[j - 1]

    def domain(self) -> tuple[int, ...]:
        return tuple(j + 1 for j, v in enumerate(self.images) if v is not None)

    def image(self) -> frozenset[int]:
        return frozenset(v for v in self.images if v is not None)

    def rank(self) -> int:
        return len(self.image())

    def is_total(self) -> bool:
        return None not in self.images

    def is_injective(self) -> bool:
        defined = [v for v in self.images if v is not None]
        return len(defined) == len(set(defined))

    def is_permutation(self) -> bool:
        return self.is_total() and self.is_injective()

    def belongs_to(self, kind) -> bool:
        kind = MonoidKind.parse(kind)
        if kind is MonoidKind.PT:
            return True
        if kind is MonoidKind.T:
            return self.is_total()
        if kind is MonoidKind.IS:
            return self.is_injective()
        return self.is_permutation()

    def compose(self, other: PartialTransformation) -> PartialTransformation:
        """``self ∘ other``: apply ``other`` first."""
        if self.n != other.n:
            raise ValueError(f"size mismatch: {self.n} vs {other.n}")
        return PartialTransformation(
            tuple(None if v is None else self.images[v - 1] for v in other.images)
        )

    __mul__ = compose

    def matrix(self) -> RationalMatrix:
        return matrix_of(self)


def matrix_of(p: PartialTransformation) -> RationalMatrix:
    rows: list[dict] = [{} for _ in range(p.n)]
    for j, v in enumerate(p.images):
        if v is not None:
            rows[v - 1][j] = 1
    return RationalMatrix(p.n, p.n, rows)


def compose(a: PartialTransformation, b: PartialTransformation) -> PartialTransformation:
    return a.compose(b)


def _check_n(n: int):
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n={n} outside supported range 1..{MAX_N}")


def iter_monoid(kind, n: int) -> Iterator[PartialTransformation]:
    """Elements in lexicographic order of image sequences, undefined last."""
    kind = MonoidKind.parse(kind)
    _check_n(n)
    values: list[int | None] = list(range(1, n + 1))
    if kind in (MonoidKind.IS, MonoidKind.PT):
        values.append(None)
    for imgs in product(values, repeat=n):
        p = PartialTransformation(imgs)
        if p.belongs_to(kind):
            yield p


def enumerate_monoid(kind, n: int) -> list[PartialTransformation]:
    return list(iter_monoid(kind, n))


def cardinality_formula(kind, n: int) -> int:
    kind = MonoidKind.parse(kind)
    if kind is MonoidKind.IS:
        return sum(comb(n, r) ** 2 * factorial(r) for r in range(n + 1))
    if kind is MonoidKind.PT:
        return (n + 1) ** n
    if kind is MonoidKind.T:
        return n ** n
    return factorial(n)


def transposition(n: int, i: int, j: int) -> PartialTransformation:
    imgs = list(range(1, n + 1))
    imgs[i - 1], imgs[j - 1] = j, i
    return PartialTransformation(tuple(imgs))


def cycle(n: int) -> PartialTransformation:
    """The n-cycle 1 -> 2 -> ... -> n -> 1."""
    return PartialTransformation(tuple(list(range(2, n + 1)) + [1]))


def permutation(images: Sequence[int]) -> PartialTransformation:
    return PartialTransformation(tuple(images))


def symmetric_group(n: int) -> list[PartialTransformation]:
    return [PartialTransformation(p) for p in permutations(range(1, n + 1))]


def generators(kind, n: int) -> list[PartialTransformation]:
    """A generating set: S_n by a transposition and an n-cycle, plus the
    partial identity missing 1 (IS, PT) and the collapse of 1 onto 2 (T, PT)."""
    kind = MonoidKind.parse(kind)
    gens = []
    if n >= 2:
        gens.append(transposition(n, 1, 2))
    if n >= 3:
        gens.append(cycle(n))
    if kind in (MonoidKind.IS, MonoidKind.PT):
        gens.append(PartialTransformation((None,) + tuple(range(2, n + 1))))
    if kind in (MonoidKind.T, MonoidKind.PT) and n >= 2:
        gens.append(PartialTransformation((2,) + tuple(range(2, n + 1))))
    if not gens:
        gens.append(PartialTransformation.identity(n))
    return gens


def closure(gens: Iterable[PartialTransformation], n: int) -> set[PartialTransformation]:
    """Submonoid generated by ``gens`` (breadth-first)."""
    gens = list(gens)
    seen = {PartialTransformation.identity(n)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = g.compose(x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def block_embed(a: PartialTransformation, b: PartialTransformation) -> PartialTransformation:
    """``a`` on [s] and ``b`` shifted onto [s+1, s+t]."""
    s = a.n
    shifted = tuple(None if v is None else v + s for v in b.images)
    return PartialTransformation(a.images + shifted)


def idempotent_rank(n: int, r: int) -> PartialTransformation:
    """diag(1^r, 0^(n-r)) as a partial identity on [r]."""
    return PartialTransformation(tuple(range(1, r + 1)) + (None,) * (n - r))


def cycle_type_representative(rho: Sequence[int]) -> PartialTransformation:
    """A permutation whose cycles have the lengths in ``rho`` on consecutive blocks."""
    imgs = []
    start = 1
    for c in rho:
        block = list(range(start, start + c))
        imgs.extend(block[1:] + block[:1])
        start += c
    return PartialTransformation(tuple(imgs))


def cycle_type(p: PartialTransformation) -> tuple[int, ...]:
    if not p.is_permutation():
        raise ValueError(f"{p} is not a permutation")
    seen = set()
    lens = []
    for j in range(1, p.n + 1):
        if j in seen:
            continue
        k, c = j, 0
        while k not in seen:
            seen.add(k)
            k = p(k)
            c += 1
        lens.append(c)
    return tuple(sorted(lens, reverse=True))
