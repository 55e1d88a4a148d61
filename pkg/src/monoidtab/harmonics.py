"""Orbit harmonics for the matrix loci IS_n, PT_n and T_n.

A point of a locus is the 0/1 matrix of a partial map (column ``j`` has its
one in row ``p(j)``).  A monomial evaluates to 1 at a point exactly when its
support lies inside the point's support, so evaluation vectors depend only on
supports and are cached per support.

Top-degree slices of the vanishing ideal are computed without generators:
``f_d`` is the top form of some ``f`` in ``I(Z)`` iff the evaluation vector of
``f_d`` lies in the span of evaluation vectors of lower-degree monomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

from gmpy2 import mpq

from .cauchy import (SparsePolynomial, act_matrix, closed_form_dim, ideal_component, ideal_generators,
                     monomials, poly_mul)
from .linalg import Echelon, RationalMatrix, axpy, kernel
from .monoids import MonoidKind, PartialTransformation, cardinality_formula, enumerate_monoid, generators
from .report import Report

Support = frozenset


class PointLocus:
    """The set of 0/1 matrices of a monoid of partial maps, with support bookkeeping."""

    def __init__(self, n: int, points: list[PartialTransformation], kind: MonoidKind | None = None):
        self.n = n
        self.kind = kind
        self.points = list(points)
        self.supports = [self._point_support(p) for p in self.points]
        if len(set(self.supports)) != len(self.supports):
            raise ValueError("locus points must be distinct")
        self._by_var: list[set[int]] = [set() for _ in range(n * n)]
        for idx, sup in enumerate(self.supports):
            for v in sup:
                self._by_var[v].add(idx)
        self._eval_cache: dict[Support, dict] = {}

    @classmethod
    def of(cls, kind, n: int) -> PointLocus:
        kind = MonoidKind.parse(kind)
        return cls(n, enumerate_monoid(kind, n), kind)

    def _point_support(self, p: PartialTransformation) -> Support:
        return frozenset((v - 1) * self.n + j for j, v in enumerate(p.images) if v is not None)

    def __len__(self) -> int:
        return len(self.points)

    def matrices(self) -> list[RationalMatrix]:
        return [p.matrix() for p in self.points]

    def eval_support(self, sup: Support) -> dict:
        """Evaluation vector (point index -> 1) of any monomial with support ``sup``."""
        got = self._eval_cache.get(sup)
        if got is None:
            if not sup:
                idx = set(range(len(self.points)))
            else:
                vs = sorted(sup, key=lambda v: len(self._by_var[v]))
                idx = set(self._by_var[vs[0]])
                for v in vs[1:]:
                    idx &= self._by_var[v]
                    if not idx:
                        break
            got = {i: mpq(1) for i in idx}
            self._eval_cache[sup] = got
        return got

    def evaluate(self, terms) -> dict:
        """Evaluation vector of a polynomial given as ``{exponent tuple: coefficient}``."""
        out: dict = {}
        for mono, c in terms.items():
            axpy(out, c, self.eval_support(support(mono)))
        return out


def support(mono) -> Support:
    return frozenset(v for v, e in enumerate(mono) if e)


@dataclass
class VanishingSpace:
    degree: int
    monomials: list
    basis: list[SparsePolynomial]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, p: SparsePolynomial) -> bool:
        e = Echelon()
        for b in self.basis:
            e.add(b.terms)
        return e.contains(p.terms)


def vanishing_ideal_upto(locus: PointLocus, d: int) -> VanishingSpace:
    """Polynomials of degree at most ``d`` vanishing on the locus: the kernel of the evaluation matrix."""
    n = locus.n
    monos = [mono for k in range(d + 1) for mono in monomials(n * n, k)]
    rows: list[dict] = [dict() for _ in range(len(locus))]
    for col, mono in enumerate(monos):
        for i in locus.eval_support(support(mono)):
            rows[i][col] = mpq(1)
    ker = kernel(RationalMatrix(len(locus), len(monos), rows))
    basis = [SparsePolynomial(n, n, {monos[c]: x for c, x in v.items()}) for v in ker.basis]
    return VanishingSpace(d, monos, basis)


@dataclass
class GradedIdealSlice:
    degree: int
    basis: list[SparsePolynomial]
    codim: int

    @property
    def dim(self) -> int:
        return len(self.basis)


class AssociatedGraded:
    """Degree-by-degree data for ``gr I(Z)``: Hilbert function values and slice membership."""

    def __init__(self, locus: PointLocus):
        self.locus = locus
        self.nvars = locus.n * locus.n
        self._below: list[Echelon] = [Echelon()]   # _below[d]: span of evaluations of degree < d
        self._residuals: list[dict] = [{}]
        self.hilbert: list[int] = []

    def _extend_to(self, d: int):
        while len(self.hilbert) <= d:
            k = len(self.hilbert)
            lower = self._below[k]
            cur = lower.copy()
            # degree-k monomials realise exactly the supports of size <= k; smaller ones are already in
            for sup in _supports_of_size(self.locus, k):
                cur.add(self.locus.eval_support(sup))
            self.hilbert.append(cur.rank - lower.rank)
            self._below.append(cur)
            self._residuals.append({})

    def _residual(self, d: int, sup: Support) -> dict:
        cache = self._residuals[d]
        got = cache.get(sup)
        if got is None:
            got = self._below[d].residual(self.locus.eval_support(sup))
            cache[sup] = got
        return got

    def top_form_residual(self, terms, d: int) -> dict:
        """Evaluation of a degree-``d`` form reduced modulo lower-degree evaluations."""
        self._extend_to(d)
        out: dict = {}
        for mono, c in terms.items():
            if len(support(mono)) < d:
                continue  # its evaluation lies among the lower-degree ones
            r = self._residual(d, support(mono))
            if r:
                axpy(out, c, r)
        return out

    def contains(self, terms, d: int) -> bool:
        """Whether a homogeneous degree-``d`` form lies in the slice ``gr(I)_d``."""
        return not self.top_form_residual(terms, d)

    def slice_dim(self, d: int) -> int:
        self._extend_to(d)
        return comb(self.nvars + d - 1, d) - self.hilbert[d]

    def slice(self, d: int) -> GradedIdealSlice:
        """An explicit basis of ``gr(I)_d``: kernel of ``monomial -> residual evaluation``."""
        self._extend_to(d)
        e = Echelon()
        basis = []
        n = self.locus.n
        for mono in monomials(self.nvars, d):
            r = self.top_form_residual({mono: mpq(1)}, d)
            res, tag = e.reduce(r, {mono: mpq(1)})
            if res:
                e.add_reduced(res, tag)
            else:
                basis.append(SparsePolynomial(n, n, tag))
        return GradedIdealSlice(d, basis, self.hilbert[d])


def _supports_of_size(locus: PointLocus, k: int):
    """Supports of size ``k`` with nonzero evaluation: size-``k`` subsets of point supports."""
    seen = set()
    for sup in locus.supports:
        if len(sup) < k:
            continue
        for sub in combinations(sorted(sup), k):
            fs = frozenset(sub)
            if fs not in seen:
                seen.add(fs)
                yield fs


@lru_cache(maxsize=None)
def associated_graded(kind, n: int) -> AssociatedGraded:
    return AssociatedGraded(PointLocus.of(kind, n))


def associated_graded_slice(locus: PointLocus, d: int) -> GradedIdealSlice:
    return AssociatedGraded(locus).slice(d)


def hilbert_function(kind, n: int) -> list[int]:
    """``dim (k[x]/gr I(Z))_d`` for ``d = 0, 1, ...`` up to the last nonzero value."""
    ag = associated_graded(kind, n)
    d = 0
    while d <= n * n + 1:
        ag._extend_to(d)
        if ag.hilbert[d] == 0:
            break
        d += 1
    return ag.hilbert[:d]


def _ideal_spanning_set(kind, n: int, d: int):
    """``monomial * generator`` products of degree ``d`` (the ideal's degree-``d`` component spans these)."""
    for g in ideal_generators(kind, n, n, dedup=True):
        k = g.degree()
        if k > d:
            continue
        for mono in monomials(n * n, d - k):
            yield poly_mul({mono: mpq(1)}, g.terms)


def _translation_generators(kind: MonoidKind, n: int):
    ident = RationalMatrix.identity(n)
    mats = [p.matrix() for p in generators(kind, n)]
    return [(a, ident) for a in mats] + [(ident, b) for b in mats]


def translate(terms, n: int, A: RationalMatrix, B: RationalMatrix) -> dict:
    """``f(x) -> f(A x B)``."""
    return act_matrix(terms, n, n, A.transpose(), B)


def check_gr_equals_J(kind, n: int, dmax: int | None = None, equivariance: bool | None = None) -> Report:
    """Degreewise ``J_n(kind)_d == gr(I(Z))_d`` via containment plus equal dimensions, for ``d <= dmax``.

    ``dmax`` defaults to ``n + 1``: both quotients vanish there, and an ideal containing every
    monomial of one degree contains every monomial of all higher degrees.
    """
    kind = MonoidKind.parse(kind)
    dmax = n + 1 if dmax is None else dmax
    if equivariance is None:
        equivariance = n <= 3
    ag = associated_graded(kind, n)
    rows, ok = [], True
    for d in range(dmax + 1):
        J = ideal_component(kind, n, n, d)
        gr_dim = ag.slice_dim(d)
        contained = all(ag.contains(v, d) for v in _ideal_spanning_set(kind, n, d))
        row = {"degree": d, "dim_J": J.rank, "dim_gr": gr_dim, "J_in_gr": contained,
               "hilbert": ag.hilbert[d], "closed_form": closed_form_dim(kind, n, n, d)}
        good = contained and J.rank == gr_dim and ag.hilbert[d] == row["closed_form"]
        if equivariance and d <= n:
            sl = ag.slice(d)
            row["translation_stable"] = all(
                ag.contains(translate(b.terms, n, A, B), d) for A, B in _translation_generators(kind, n) for b in sl.basis)
            good &= row["translation_stable"]
        row["equal"] = good
        ok &= good
        rows.append(row)
    hilb = hilbert_function(kind, n)
    total = sum(hilb)
    size = cardinality_formula(kind, n)
    ok &= total == size == len(ag.locus)
    return Report("orbit_harmonics", {"kind": str(kind), "n": n, "dmax": dmax},
                  "pass" if ok else "fail",
                  {"degrees": rows, "hilbert": hilb, "total": total, "locus_size": size,
                   "top_degree": len(hilb) - 1, "gr_equals_J": ok})
