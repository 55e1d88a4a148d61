"""Exact linear algebra over the rationals.

Vectors are sparse ``dict[int, mpq]`` maps from coordinate to nonzero value.
The workhorse is :class:`Echelon`, an incremental semi-echelon basis keyed by
leading (minimum) coordinate, which supports rank, membership, reduction and
(with tags) solving for coordinates.  Canonical reduced row echelon forms are
produced on demand from it.
"""

from __future__ import annotations

import csv
import heapq
import io
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from gmpy2 import mpq

Vector = dict


def Q(x) -> mpq:
    """Coerce ints, Fractions, strings like ``'3/4'`` and mpq to ``mpq``."""
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    return mpq(x)


def vec(values: Iterable) -> Vector:
    """Sparse vector from a dense sequence."""
    return {i: Q(x) for i, x in enumerate(values) if x != 0}


def dense(v: Mapping[int, mpq], dim: int) -> list[mpq]:
    out = [mpq(0)] * dim
    for i, x in v.items():
        out[i] = x
    return out


def axpy(y: Vector, a, x: Mapping[int, mpq]) -> Vector:
    """In place ``y += a * x``; returns ``y``."""
    if not a:
        return y
    for k, xv in x.items():
        nv = y.get(k, 0) + a * xv
        if nv:
            y[k] = nv
        else:
            y.pop(k, None)
    return y


def scale(v: Mapping[int, mpq], a) -> Vector:
    if not a:
        return {}
    return {k: a * x for k, x in v.items()}


def add(u: Mapping[int, mpq], v: Mapping[int, mpq]) -> Vector:
    return axpy(dict(u), 1, v)


class DimensionMismatch(ValueError):
    pass


class Echelon:
    """Incremental semi-echelon basis.

    Each stored row has a distinct pivot (its minimum coordinate) normalised to
    1, and contains no pivot of any row stored *before* it.  Optional tags are
    sparse vectors carried through every row operation; they let callers
    recover how a reduced vector was expressed through the inputs.
    """

    def __init__(self, dim: int | None = None):
        self.dim = dim
        self.rows: dict[int, Vector] = {}
        self.tags: dict[int, Vector] = {}

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def copy(self) -> Echelon:
        e = Echelon(self.dim)
        e.rows = dict(self.rows)
        e.tags = dict(self.tags)
        return e

    def reduce(self, v: Mapping[int, mpq], tag: Mapping | None = None) -> tuple[Vector, Vector]:
        """Reduce ``v`` modulo the span; returns ``(residual, tag - sum coef * row_tag)``."""
        v = {k: Q(x) for k, x in v.items() if x}
        t = dict(tag) if tag else {}
        rows, tags = self.rows, self.tags
        heap = [c for c in v if c in rows]
        heapq.heapify(heap)
        while heap:
            c = heapq.heappop(heap)
            coef = v.get(c)
            if coef is None:
                continue
            row = rows[c]
            for k, x in row.items():
                nv = v.get(k, 0) - coef * x
                if nv:
                    if k not in v and k in rows:
                        heapq.heappush(heap, k)
                    v[k] = nv
                else:
                    v.pop(k, None)
            rt = tags.get(c)
            if rt:
                axpy(t, -coef, rt)
        return v, t

    def residual(self, v: Mapping[int, mpq]) -> Vector:
        return self.reduce(v)[0]

    def contains(self, v: Mapping[int, mpq]) -> bool:
        return not self.reduce(v)[0]

    def add(self, v: Mapping[int, mpq], tag: Mapping | None = None) -> bool:
        """Insert ``v``; returns True when it enlarged the span."""
        r, t = self.reduce(v, tag)
        if not r:
            return False
        self._insert(r, t)
        return True

    def add_reduced(self, r: Vector, t: Vector | None = None):
        """Insert a nonzero vector already reduced modulo the span."""
        self._insert(dict(r), dict(t) if t else {})

    def _insert(self, r: Vector, t: Vector):
        p = min(r)
        inv = 1 / r[p]
        if inv != 1:
            r = {k: x * inv for k, x in r.items()}
            t = {k: x * inv for k, x in t.items()}
        self.rows[p] = r
        if t:
            self.tags[p] = t

    def extend(self, vectors: Iterable[Mapping[int, mpq]]) -> int:
        return sum(1 for v in vectors if self.add(v))

    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def rref_rows(self) -> list[Vector]:
        """Canonical reduced row echelon basis of the span, sorted by pivot."""
        done: dict[int, Vector] = {}
        for p in sorted(self.rows, reverse=True):
            row = dict(self.rows[p])
            for q in sorted((k for k in row if k != p and k in done)):
                coef = row.get(q)
                if coef:
                    axpy(row, -coef, done[q])
            done[p] = row
        return [done[p] for p in sorted(done)]


class RationalMatrix:
    """Immutable sparse rational matrix (row dictionaries)."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows: Sequence[Mapping[int, mpq]] | None = None):
        self.nrows = nrows
        self.ncols = ncols
        if rows is None:
            rows = [{} for _ in range(nrows)]
        if len(rows) != nrows:
            raise DimensionMismatch(f"expected {nrows} rows, got {len(rows)}")
        self.rows = [{k: Q(x) for k, x in r.items() if x} for r in rows]

    @classmethod
    def from_dense(cls, data: Sequence[Sequence]) -> RationalMatrix:
        data = [list(r) for r in data]
        ncols = len(data[0]) if data else 0
        return cls(len(data), ncols, [vec(r) for r in data])

    @classmethod
    def identity(cls, n: int) -> RationalMatrix:
        return cls(n, n, [{i: mpq(1)} for i in range(n)])

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> RationalMatrix:
        return cls(nrows, ncols)

    @classmethod
    def from_columns(cls, nrows: int, columns: Sequence[Mapping[int, mpq]]) -> RationalMatrix:
        rows: list[dict] = [{} for _ in range(nrows)]
        for j, col in enumerate(columns):
            for i, x in col.items():
                if x:
                    rows[i][j] = x
        return cls(nrows, len(columns), rows)

    def __getitem__(self, ij: tuple[int, int]) -> mpq:
        i, j = ij
        return self.rows[i].get(j, mpq(0))

    def to_dense(self) -> list[list[mpq]]:
        return [dense(r, self.ncols) for r in self.rows]

    def to_lists(self) -> list[list]:
        """Nested lists with ints where possible and ``'p/q'`` strings otherwise (JSON friendly)."""
        out = []
        for r in self.to_dense():
            out.append([int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}" for x in r])
        return out

    def column(self, j: int) -> Vector:
        return {i: r[j] for i, r in enumerate(self.rows) if j in r}

    def columns(self) -> list[Vector]:
        cols: list[dict] = [{} for _ in range(self.ncols)]
        for i, r in enumerate(self.rows):
            for j, x in r.items():
                cols[j][i] = x
        return cols

    def transpose(self) -> RationalMatrix:
        return RationalMatrix(self.ncols, self.nrows, self.columns())

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return (self.nrows, self.ncols) == (other.nrows, other.ncols) and self.rows == other.rows

    def __hash__(self):
        return hash((self.nrows, self.ncols, tuple(tuple(sorted(r.items())) for r in self.rows)))

    def __matmul__(self, other: RationalMatrix) -> RationalMatrix:
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}")
        out = []
        for r in self.rows:
            acc: dict = {}
            for k, x in r.items():
                axpy(acc, x, other.rows[k])
            out.append(acc)
        return RationalMatrix(self.nrows, other.ncols, out)

    def __add__(self, other: RationalMatrix) -> RationalMatrix:
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionMismatch("shape mismatch in matrix sum")
        return RationalMatrix(self.nrows, self.ncols, [add(a, b) for a, b in zip(self.rows, other.rows)])

    def __sub__(self, other: RationalMatrix) -> RationalMatrix:
        return self + other.scaled(-1)

    def scaled(self, a) -> RationalMatrix:
        return RationalMatrix(self.nrows, self.ncols, [scale(r, Q(a)) for r in self.rows])

    def apply(self, v: Mapping[int, mpq]) -> Vector:
        """Matrix times column vector."""
        out = {}
        for i, r in enumerate(self.rows):
            s = sum((x * v[k] for k, x in r.items() if k in v), mpq(0))
            if s:
                out[i] = s
        return out

    def trace(self) -> mpq:
        return sum((r.get(i, mpq(0)) for i, r in enumerate(self.rows)), mpq(0))

    def is_zero(self) -> bool:
        return not any(self.rows)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> RationalMatrix:
        cidx = {c: k for k, c in enumerate(cols)}
        out = []
        for i in rows:
            out.append({cidx[j]: x for j, x in self.rows[i].items() if j in cidx})
        return RationalMatrix(len(rows), len(cols), out)

    def rank(self) -> int:
        e = Echelon(self.ncols)
        e.extend(self.rows)
        return e.rank

    def rref(self) -> tuple[RationalMatrix, int]:
        return rref(self)

    def to_csv(self) -> str:
        """Debug dump as exact fractions."""
        buf = io.StringIO()
        w = csv.writer(buf)
        for r in self.to_dense():
            w.writerow([str(x) for x in r])
        return buf.getvalue()

    def __repr__(self) -> str:
        return f"RationalMatrix({self.nrows}x{self.ncols}, {self.to_lists()})"


def rref(m: RationalMatrix) -> tuple[RationalMatrix, int]:
    """Reduced row echelon form (zero rows last) and rank."""
    e = Echelon(m.ncols)
    e.extend(m.rows)
    rows = e.rref_rows()
    rank = len(rows)
    rows = rows + [{} for _ in range(m.nrows - rank)]
    return RationalMatrix(m.nrows, m.ncols, rows), rank


class Subspace:
    """Subspace of ``Q^ambient_dim`` held as its canonical RREF basis."""

    __slots__ = ("ambient_dim", "basis", "_echelon")

    def __init__(self, ambient_dim: int, basis: Sequence[Mapping[int, mpq]] = ()):
        e = Echelon(ambient_dim)
        for v in basis:
            if v and max(v) >= ambient_dim:
                raise DimensionMismatch(f"coordinate {max(v)} outside ambient dimension {ambient_dim}")
            e.add(v)
        self.ambient_dim = ambient_dim
        self._echelon = e
        self.basis = e.rref_rows()

    @classmethod
    def span(cls, vectors: Iterable[Mapping[int, mpq]], ambient_dim: int) -> Subspace:
        return cls(ambient_dim, list(vectors))

    @classmethod
    def from_echelon(cls, e: Echelon, ambient_dim: int) -> Subspace:
        s = cls.__new__(cls)
        s.ambient_dim = ambient_dim
        s._echelon = e
        s.basis = e.rref_rows()
        return s

    @classmethod
    def whole(cls, n: int) -> Subspace:
        return cls(n, [{i: mpq(1)} for i in range(n)])

    @classmethod
    def zero(cls, n: int) -> Subspace:
        return cls(n, [])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return self.dim

    def __contains__(self, v: Mapping[int, mpq]) -> bool:
        return self.contains(v)

    def contains(self, v: Mapping[int, mpq]) -> bool:
        return self._echelon.contains(v)

    def contains_subspace(self, other: Subspace) -> bool:
        self._check(other)
        return all(self.contains(b) for b in other.basis)

    def _check(self, other: Subspace):
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch(f"ambient dimensions differ: {self.ambient_dim} vs {other.ambient_dim}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, tuple(tuple(sorted(b.items())) for b in self.basis)))

    def __add__(self, other: Subspace) -> Subspace:
        return self.sum(other)

    def sum(self, other: Subspace) -> Subspace:
        self._check(other)
        return Subspace(self.ambient_dim, list(self.basis) + list(other.basis))

    def intersection(self, other: Subspace) -> Subspace:
        """Zassenhaus: echelonise ``[a | a]`` and ``[b | 0]``; rows with zero left half span the meet."""
        self._check(other)
        n = self.ambient_dim
        e = Echelon(2 * n)
        for a in self.basis:
            row = dict(a)
            row.update({k + n: x for k, x in a.items()})
            e.add(row)
        for b in other.basis:
            e.add(b)
        meet = [{k - n: x for k, x in row.items()} for p, row in e.rows.items() if p >= n]
        return Subspace(n, meet)

    def quotient_dim(self, sub: Subspace) -> int:
        self._check(sub)
        if not self.contains_subspace(sub):
            raise ValueError("quotient_dim requires the second subspace to lie in the first")
        return self.dim - sub.dim

    def reduce(self, v: Mapping[int, mpq]) -> Vector:
        return self._echelon.residual(v)

    def echelon(self) -> Echelon:
        return self._echelon.copy()

    def image(self, m: RationalMatrix) -> Subspace:
        return Subspace(m.nrows, [m.apply(b) for b in self.basis])

    def is_invariant(self, m: RationalMatrix) -> bool:
        return all(self.contains(m.apply(b)) for b in self.basis)

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim} in Q^{self.ambient_dim})"


def kernel(m: RationalMatrix) -> Subspace:
    """Right null space of ``m``."""
    e = Echelon(m.ncols)
    e.extend(m.rows)
    rows = e.rref_rows()
    pivots = [min(r) for r in rows]
    pset = set(pivots)
    basis = []
    for f in range(m.ncols):
        if f in pset:
            continue
        v = {f: mpq(1)}
        for p, r in zip(pivots, rows):
            x = r.get(f)
            if x:
                v[p] = -x
        basis.append(v)
    return Subspace(m.ncols, basis)


def express_in_basis(v: Mapping[int, mpq], basis: Sequence[Mapping[int, mpq]]) -> list[mpq] | None:
    """Coefficients ``c`` with ``v = sum c_i basis_i``; ``None`` when ``v`` is outside the span.

    Being outside the span is an ordinary outcome here, not an error.
    """
    solver = Solver(basis)
    return solver.solve(v)


class Solver:
    """Express vectors in a fixed (independent) list of vectors."""

    def __init__(self, basis: Sequence[Mapping[int, mpq]]):
        self.size = len(basis)
        self.echelon = Echelon()
        self.independent = True
        for i, b in enumerate(basis):
            if not self.echelon.add(b, {i: mpq(1)}):
                self.independent = False

    def solve(self, v: Mapping[int, mpq]) -> list[mpq] | None:
        r, t = self.echelon.reduce(v, {})
        if r:
            return None
        coeffs = [mpq(0)] * self.size
        for i, x in t.items():
            coeffs[i] = -x
        return coeffs

    def solve_sparse(self, v: Mapping[int, mpq]) -> Vector | None:
        r, t = self.echelon.reduce(v, {})
        if r:
            return None
        return {i: -x for i, x in t.items()}


class QuotientCoordinates:
    """Coordinates in ``W / U`` for a chosen set of representatives.

    ``sub`` spans ``U``; ``vectors`` span ``W`` (which should contain ``U``).
    Representatives are the vectors of ``vectors`` that are independent modulo
    ``U`` (first-come).  :meth:`coords` returns the coefficient vector of ``v +
    U`` on the representatives, or ``None`` when ``v`` is not in ``W``.
    """

    def __init__(self, sub: Iterable[Mapping[int, mpq]], vectors: Iterable[Mapping[int, mpq]]):
        self.echelon = Echelon()
        for u in sub:
            self.echelon.add(u)
        self.sub_rank = self.echelon.rank
        self.reps: list[Vector] = []
        for w in vectors:
            r, t = self.echelon.reduce(w, {len(self.reps): mpq(1)})
            if r:
                self.echelon.add_reduced(r, t)
                self.reps.append(dict(w))

    @property
    def dim(self) -> int:
        return len(self.reps)

    def coords(self, v: Mapping[int, mpq]) -> Vector | None:
        r, t = self.echelon.reduce(v, {})
        if r:
            return None
        return {i: -x for i, x in t.items()}

    def matrix_of(self, op) -> RationalMatrix | None:
        """Matrix of the induced map ``op`` on the quotient; ``None`` if some image leaves ``W``."""
        cols = []
        for w in self.reps:
            c = self.coords(op(w))
            if c is None:
                return None
            cols.append(c)
        return RationalMatrix.from_columns(self.dim, cols)


# -- fraction-free oracle ----------------------------------------------------

def _integer_rows(m: RationalMatrix) -> list[list[int]]:
    out = []
    for r in m.to_dense():
        den = 1
        for x in r:
            d = int(x.denominator)
            den = den * d // _gcd(den, d)
        out.append([int(x * den) for x in r])
    return out


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def bareiss_rank(m: RationalMatrix) -> int:
    """Rank by fraction-free (Bareiss) elimination on the denominator-cleared integer matrix."""
    a = _integer_rows(m)
    nr, nc = m.nrows, m.ncols
    rank, prev, row = 0, 1, 0
    for col in range(nc):
        piv = next((i for i in range(row, nr) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        for i in range(row + 1, nr):
            for j in range(col + 1, nc):
                a[i][j] = (a[i][j] * a[row][col] - a[i][col] * a[row][j]) // prev
            a[i][col] = 0
        prev = a[row][col]
        row += 1
        rank += 1
        if row == nr:
            break
    return rank


def bareiss_det(m: RationalMatrix) -> mpq:
    """Determinant via Bareiss on the integer-scaled matrix."""
    if m.nrows != m.ncols:
        raise DimensionMismatch("determinant of a non-square matrix")
    n = m.nrows
    if n == 0:
        return mpq(1)
    dens = []
    a = []
    for r in m.to_dense():
        den = 1
        for x in r:
            d = int(x.denominator)
            den = den * d // _gcd(den, d)
        dens.append(den)
        a.append([int(x * den) for x in r])
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if piv is None:
                return mpq(0)
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    total = 1
    for d in dens:
        total *= d
    return mpq(sign * a[n - 1][n - 1], total)
