"""The polynomial ring k[x_{m×n}], the ideals J_{m,n}(Z), bitableau minors and
the Cauchy filtration modulo J.

Monomials are exponent tuples of length ``m*n`` in row-major variable order
``x11, x12, ..., x1n, x21, ...``.  Degree components of ideals are built as
explicit spans of ``monomial * generator``; no Groebner machinery is used.
"""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations, product
from math import comb, factorial
from typing import Callable, Iterable, Mapping, Sequence

from gmpy2 import mpq

from .functor import build_R_module, class_representatives
from .linalg import Echelon, QuotientCoordinates, RationalMatrix, axpy
from .monoids import MonoidKind, PartialTransformation, generators
from .partitions import Partition, enumerate_partitions, as_shape
from .report import Report
from .schur import build_schur_module, build_standard_schur_module
from .tableaux import Tableau, count_sst, enumerate_tableaux, sign_of_sort

Monomial = tuple


class SparsePolynomial:
    """Polynomial in ``x_{i,j}`` (``1 <= i <= m``, ``1 <= j <= n``) with exact coefficients."""

    __slots__ = ("m", "n", "terms")

    def __init__(self, m: int, n: int, terms: Mapping[Monomial, object] | None = None):
        self.m, self.n = m, n
        self.terms: dict = {}
        if terms:
            for k, v in terms.items():
                if v:
                    self.terms[tuple(k)] = mpq(v)

    @classmethod
    def variable(cls, m: int, n: int, i: int, j: int) -> SparsePolynomial:
        e = [0] * (m * n)
        e[(i - 1) * n + (j - 1)] = 1
        return cls(m, n, {tuple(e): 1})

    @classmethod
    def constant(cls, m: int, n: int, c=1) -> SparsePolynomial:
        return cls(m, n, {(0,) * (m * n): c})

    def _same(self, other: SparsePolynomial):
        if (self.m, self.n) != (other.m, other.n):
            raise ValueError("polynomials in different rings")

    def __add__(self, other: SparsePolynomial) -> SparsePolynomial:
        self._same(other)
        return SparsePolynomial(self.m, self.n, axpy(dict(self.terms), 1, other.terms))

    def __sub__(self, other: SparsePolynomial) -> SparsePolynomial:
        self._same(other)
        return SparsePolynomial(self.m, self.n, axpy(dict(self.terms), -1, other.terms))

    def __neg__(self) -> SparsePolynomial:
        return SparsePolynomial(self.m, self.n, {k: -v for k, v in self.terms.items()})

    def __mul__(self, other) -> SparsePolynomial:
        if not isinstance(other, SparsePolynomial):
            return SparsePolynomial(self.m, self.n, {k: v * other for k, v in self.terms.items()})
        self._same(other)
        return SparsePolynomial(self.m, self.n, poly_mul(self.terms, other.terms))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, SparsePolynomial) and (self.m, self.n) == (other.m, other.n) and self.terms == other.terms

    def __hash__(self):
        return hash((self.m, self.n, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(k) for k in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(k) for k in self.terms}) <= 1

    def __repr__(self) -> str:
        return f"SparsePolynomial({format_poly(self.terms, self.m, self.n)})"


def poly_mul(a: Mapping, b: Mapping) -> dict:
    out: dict = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            k = tuple(x + y for x, y in zip(ka, kb))
            nv = out.get(k, 0) + va * vb
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
    return out


def format_poly(terms: Mapping, m: int, n: int) -> str:
    if not terms:
        return "0"
    parts = []
    for k in sorted(terms, reverse=True):
        c = terms[k]
        mono = "*".join(
            f"x{(v // n) + 1}{(v % n) + 1}" + (f"^{e}" if e > 1 else "") for v, e in enumerate(k) if e
        )
        coef = str(c) if (c != 1 or not mono) else ""
        if c == -1 and mono:
            coef = "-"
        parts.append(f"{coef}{'*' if coef not in ('', '-') and mono else ''}{mono}")
    return " + ".join(parts).replace("+ -", "- ")


def monomials(nvars: int, degree: int) -> list[Monomial]:
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for v in combo:
            e[v] += 1
        out.append(tuple(e))
    return out


def _var(m: int, n: int, i: int, j: int) -> Monomial:
    e = [0] * (m * n)
    e[(i - 1) * n + (j - 1)] = 1
    return tuple(e)


def _mono_add(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


# -- ideals -------------------------------------------------------------------

def ideal_generators(kind, m: int, n: int, dedup: bool = False) -> list[SparsePolynomial]:
    """Generators of ``J_{m,n}(kind)``: same-column products (all kinds), same-row products (IS),
    column sums (T).  Squares appear once per family; ``dedup`` removes repeats across families."""
    kind = MonoidKind.parse(kind)
    gens: list[SparsePolynomial] = []
    for j in range(1, n + 1):
        for i, i2 in combinations_with_replacement(range(1, m + 1), 2):
            gens.append(SparsePolynomial(m, n, {_mono_add(_var(m, n, i, j), _var(m, n, i2, j)): 1}))
    if kind is MonoidKind.IS:
        for i in range(1, m + 1):
            for j, j2 in combinations_with_replacement(range(1, n + 1), 2):
                gens.append(SparsePolynomial(m, n, {_mono_add(_var(m, n, i, j), _var(m, n, i, j2)): 1}))
    if kind is MonoidKind.T:
        for j in range(1, n + 1):
            gens.append(SparsePolynomial(m, n, {_var(m, n, i, j): 1 for i in range(1, m + 1)}))
    if kind is MonoidKind.SYM:
        raise ValueError("no ideal is attached to the symmetric group")
    if dedup:
        seen, out = set(), []
        for g in gens:
            if g not in seen:
                seen.add(g)
                out.append(g)
        return out
    return gens


@lru_cache(maxsize=None)
def ideal_component(kind, m: int, n: int, r: int) -> Echelon:
    """Echelon basis of ``J_{m,n}(kind) ∩ k[x]_r``."""
    kind = MonoidKind.parse(kind)
    e = Echelon()
    gens = ideal_generators(kind, m, n, dedup=True)
    # monomial generators first: their products are single monomials and reduce instantly
    gens.sort(key=lambda g: len(g.terms))
    N = m * n
    for g in gens:
        d = g.degree()
        if d > r:
            continue
        for mono in monomials(N, r - d):
            e.add(poly_mul({mono: mpq(1)}, g.terms))
    return e


def closed_form_dim(kind, m: int, n: int, r: int) -> int:
    kind = MonoidKind.parse(kind)
    if kind is MonoidKind.IS:
        return comb(m, r) * comb(n, r) * factorial(r)
    if kind is MonoidKind.PT:
        return comb(n, r) * m ** r
    if kind is MonoidKind.T:
        return comb(n, r) * (m - 1) ** r
    raise ValueError(kind)


def closed_form_basis(kind, m: int, n: int, r: int) -> list[Monomial]:
    """The monomial basis named in the dimension count: distinct rows and columns (IS),
    distinct columns (PT), distinct columns avoiding the last row (T)."""
    kind = MonoidKind.parse(kind)
    out = []
    rows = m - 1 if kind is MonoidKind.T else m
    for cols in combinations(range(1, n + 1), r):
        if kind is MonoidKind.IS:
            for rs in combinations(range(1, m + 1), r):
                for perm in permutations(cols):
                    out.append(_product_of_vars(m, n, zip(rs, perm)))
        else:
            for rs in product(range(1, rows + 1), repeat=r):
                out.append(_product_of_vars(m, n, zip(rs, cols)))
    return sorted(set(out))


def _product_of_vars(m: int, n: int, pairs) -> Monomial:
    e = [0] * (m * n)
    for i, j in pairs:
        e[(i - 1) * n + (j - 1)] += 1
    return tuple(e)


@dataclass
class GradedPiece:
    kind: str
    m: int
    n: int
    r: int
    dim: int
    closed_form: int
    basis: list[Monomial]
    basis_verified: bool

    @property
    def ok(self) -> bool:
        return self.dim == self.closed_form and self.basis_verified


def graded_quotient_dim(kind, m: int, n: int, r: int) -> GradedPiece:
    """``dim (k[x]/J)_r`` by linear algebra, with the named monomial basis checked independent mod J."""
    kind = MonoidKind.parse(kind)
    J = ideal_component(kind, m, n, r)
    total = comb(m * n + r - 1, r)
    dim = total - J.rank
    basis = closed_form_basis(kind, m, n, r)
    e = J.copy()
    independent = all(e.add({b: mpq(1)}) for b in basis)
    verified = independent and len(basis) == dim
    return GradedPiece(str(kind), m, n, r, dim, closed_form_dim(kind, m, n, r), basis, verified)


def hilbert_series_terms(kind, m: int, n: int) -> list[int]:
    """``dim (k[x]/J)_r`` for ``r = 0 .. n+1`` (the last is 0; all higher pieces then vanish
    because J is generated in degrees at most 2)."""
    return [graded_quotient_dim(kind, m, n, r).dim for r in range(n + 2)]


# -- bitableaux --------------------------------------------------------------

def minor(m: int, n: int, rows: Sequence[int], cols: Sequence[int]) -> dict:
    """``(i_1..i_k | j_1..j_k) = det(x_{i_u, j_v})`` as a term dictionary."""
    k = len(rows)
    if len(cols) != k:
        raise ValueError("minor needs as many rows as columns")
    out: dict = {}
    for perm in permutations(range(k)):
        sign = sign_of_sort(perm)
        mono = _product_of_vars(m, n, ((rows[u], cols[perm[u]]) for u in range(k)))
        nv = out.get(mono, 0) + sign
        if nv:
            out[mono] = nv
        else:
            out.pop(mono, None)
    return {k_: mpq(v) for k_, v in out.items()}


def bitableau_minor(S: Tableau, T: Tableau, m: int, n: int) -> SparsePolynomial:
    """``(S|T)``: product over rows ``p`` of the minor on row ``p`` of ``S`` and row ``p`` of ``T``."""
    if S.shape != T.shape:
        raise ValueError(f"shape mismatch: {S.shape} vs {T.shape}")
    return SparsePolynomial(m, n, _bitableau_terms(S.rows, T.rows, m, n))


def _bitableau_terms(srows, trows, m: int, n: int) -> dict:
    acc: dict = {(0,) * (m * n): mpq(1)}
    for sr, tr in zip(srows, trows):
        if len(set(sr)) != len(sr) or len(set(tr)) != len(tr):
            return {}
        acc = poly_mul(acc, minor(m, n, sr, tr))
        if not acc:
            return {}
    return acc


# -- actions on polynomials ------------------------------------------------

def act_partial(terms: Mapping, m: int, n: int, A: PartialTransformation | None, B: PartialTransformation | None) -> dict:
    """``(A, B) x_{ij} = x_{p_A(i), p_B(j)}`` (zero if undefined), extended multiplicatively."""
    out: dict = {}
    for mono, c in terms.items():
        e = [0] * (m * n)
        dead = False
        for v, k in enumerate(mono):
            if not k:
                continue
            i, j = divmod(v, n)
            ii = A.images[i] if A is not None else i + 1
            jj = B.images[j] if B is not None else j + 1
            if ii is None or jj is None:
                dead = True
                break
            e[(ii - 1) * n + (jj - 1)] += k
        if dead:
            continue
        key = tuple(e)
        nv = out.get(key, 0) + c
        if nv:
            out[key] = nv
        else:
            out.pop(key, None)
    return out


def act_matrix(terms: Mapping, m: int, n: int, A: RationalMatrix | None, B: RationalMatrix | None) -> dict:
    """General ``A x_{ij} = sum_k a_{k,i} x_{k,j}`` and ``B x_{ij} = sum_k b_{k,j} x_{i,k}``."""
    images = {}
    for i in range(m):
        for j in range(n):
            rows = [(k, A[k, i]) for k in range(m) if A[k, i]] if A is not None else [(i, mpq(1))]
            cols = [(l, B[l, j]) for l in range(n) if B[l, j]] if B is not None else [(j, mpq(1))]
            lin = {}
            for k, a in rows:
                for l, b in cols:
                    e = [0] * (m * n)
                    e[k * n + l] = 1
                    lin[tuple(e)] = a * b
            images[i * n + j] = lin
    out: dict = {}
    one = (0,) * (m * n)
    for mono, c in terms.items():
        acc = {one: c}
        for v, k in enumerate(mono):
            for _ in range(k):
                acc = poly_mul(acc, images[v])
        axpy(out, 1, acc)
    return out


# -- filtrations --------------------------------------------------------------

def bitableau_pairs(lam: Partition, m: int, n: int):
    """Row-strict ``S`` over ``[m]`` and ``T`` over ``[n]`` of shape ``lam``."""
    Ss = enumerate_tableaux(lam, m, "row_strict")
    Ts = enumerate_tableaux(lam, n, "row_strict")
    return Ss, Ts


def _shapes(r: int, m: int, n: int) -> list[Partition]:
    """Partitions of r in decreasing lexicographic order with first part at most min(m, n)."""
    return [lam for lam in enumerate_partitions(r) if (lam[0] if len(lam) else 0) <= min(m, n)]


@dataclass
class ChainStep:
    lam: Partition
    vectors: list[dict]
    echelon: Echelon      # span of everything up to and including this step
    prev: Echelon         # span of the earlier steps (plus the ideal, if any)
    quotient_dim: int


def cauchy_chain(m: int, n: int, r: int, base: Echelon | None = None,
                 terms_fn: Callable | None = None, pairs_fn: Callable | None = None,
                 shapes: Iterable[Partition] | None = None) -> list[ChainStep]:
    """Steps ``M_lam`` (modulo ``base`` if given), shapes in decreasing lexicographic order."""
    terms_fn = terms_fn or _bitableau_terms
    pairs_fn = pairs_fn or bitableau_pairs
    e = base.copy() if base is not None else Echelon()
    steps = []
    for lam in (_shapes(r, m, n) if shapes is None else shapes):
        Ss, Ts = pairs_fn(lam, m, n)
        prev = e.copy()
        before = e.rank
        vecs = []
        for S in Ss:
            for T in Ts:
                v = terms_fn(S.rows, T.rows, m, n)
                if v:
                    vecs.append(v)
                    e.add(v)
        steps.append(ChainStep(lam, vecs, e.copy(), prev, e.rank - before))
    return steps


def cauchy_filtration_check(m: int, n: int, r: int) -> Report:
    steps = cauchy_chain(m, n, r)
    total = comb(m * n + r - 1, r)
    rows = []
    ok = True
    for st in steps:
        exp = count_sst(as_shape(st.lam), m) * count_sst(as_shape(st.lam), n)
        rows.append({"lambda": str(st.lam), "quotient_dim": st.quotient_dim, "expected": exp})
        ok &= st.quotient_dim == exp
    # shapes with first part above min(m, n) contribute nothing on either side
    for lam in enumerate_partitions(r):
        if lam not in [st.lam for st in steps]:
            ok &= count_sst(as_shape(lam), m) * count_sst(as_shape(lam), n) == 0
    top = steps[-1].echelon.rank if steps else 0
    ok &= top == total
    return Report("cauchy_filtration", {"m": m, "n": n, "r": r}, "pass" if ok else "fail",
                  {"steps": rows, "total": top, "monomials": total})


def _left_dim(kind: MonoidKind, lam: Partition, m: int) -> int:
    if kind is MonoidKind.IS:
        return build_R_module(kind, m, lam.conjugate(), "upper").dim if lam.size() <= m else 0
    if kind is MonoidKind.PT:
        return build_schur_module(lam, m).dim
    return build_standard_schur_module(lam, m).dim


def _left_character(kind: MonoidKind, lam: Partition, m: int, sigma: PartialTransformation) -> mpq:
    if kind is MonoidKind.IS:
        if lam.size() > m:
            return mpq(0)
        return build_R_module(kind, m, lam.conjugate(), "upper").act(sigma).trace()
    if kind is MonoidKind.PT:
        return build_schur_module(lam, m).act(sigma).trace()
    mod = build_standard_schur_module(lam, m)
    return mod.act(sigma).trace() if mod.dim else mpq(0)


def acting_generators(kind, m: int, n: int) -> list[tuple]:
    """Generators of the acting pair: IS_m x IS_n, GL_m x PT_n, S_m x T_n.

    ``GL_m`` is represented by ``S_m`` generators plus one transvection.
    """
    kind = MonoidKind.parse(kind)
    out: list[tuple] = []
    if kind is MonoidKind.IS:
        out += [(a, None) for a in generators("IS", m)]
    else:
        out += [(a, None) for a in generators("Sym", m) if not a == PartialTransformation.identity(m)]
        if kind is MonoidKind.PT and m >= 2:
            tv = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
            tv[0][1] = 1
            out.append((RationalMatrix.from_dense(tv), None))
    right = "IS" if kind is MonoidKind.IS else ("PT" if kind is MonoidKind.PT else "T")
    out += [(None, b) for b in generators(right, n)]
    return out


def apply_pair(terms: Mapping, m: int, n: int, A, B) -> dict:
    if isinstance(A, RationalMatrix) or isinstance(B, RationalMatrix):
        return act_matrix(terms, m, n, A if isinstance(A, RationalMatrix) else (A.matrix() if A else None),
                          B if isinstance(B, RationalMatrix) else (B.matrix() if B else None))
    return act_partial(terms, m, n, A, B)


def check_chain(kind: MonoidKind, m: int, n: int, steps: list[ChainStep], apply_fn: Callable,
                right_module: Callable, characters: bool = True, invariance: bool = True) -> tuple[bool, list[dict]]:
    """Compare successive quotients of a chain taken modulo an ideal with ``left (x) right`` factors.

    ``right_module(lam)`` returns the right-hand monoid module or ``None`` when it is zero.
    """
    rows = []
    ok = True
    gens = acting_generators(kind, m, n) if invariance else []
    for st in steps:
        right_mod = right_module(st.lam)
        right = right_mod.dim if right_mod is not None else 0
        left = _left_dim(kind, st.lam, m)
        row = {"lambda": str(st.lam), "quotient_dim": st.quotient_dim, "expected": left * right,
               "left_dim": left, "right_dim": right}
        good = st.quotient_dim == left * right
        if invariance:
            span = list(st.echelon.rows.values())
            stable = all(st.echelon.contains(apply_fn(v, A, B)) for A, B in gens for v in span)
            row["stable"] = stable
            good &= stable
        if characters and st.quotient_dim:
            q = QuotientCoordinates(st.prev.rows.values(), st.vectors)
            mism = 0
            for _, sigma in class_representatives(m):
                lc = _left_character(kind, st.lam, m, sigma)
                for _, tau in class_representatives(n):
                    mat = q.matrix_of(lambda v: apply_fn(v, sigma, tau))
                    rc = right_mod.act(tau).trace() if right_mod is not None else 0
                    if mat is None or mat.trace() != lc * rc:
                        mism += 1
            row["character_mismatches"] = mism
            good &= mism == 0
        ok &= good
        rows.append(row)
    return ok, rows


def cauchy_chain_check(kind, m: int, n: int, r: int, characters: bool = True, invariance: bool = True) -> Report:
    """Chain ``(M_lam + J)/J`` against ``left (x) R(n)^{lam'}``.

    The chain is indexed by the bitableau shape ``lam`` (minor sizes along rows), so the
    right factor is ``R(n)^{lam'}`` and, for IS, the left factor is ``R(m)^{lam'}``.  For
    IS with m = n = 2, r = 2 both shapes give quotients of dimension 1.
    """
    kind = MonoidKind.parse(kind)
    J = ideal_component(kind, m, n, r)
    steps = cauchy_chain(m, n, r, base=J)

    def right_module(lam):
        return build_R_module(kind, n, lam.conjugate(), "upper") if lam.size() <= n else None

    ok, rows = check_chain(kind, m, n, steps, lambda v, A, B: apply_pair(v, m, n, A, B),
                           right_module, characters, invariance)
    total = sum(st.quotient_dim for st in steps)
    ok &= total == closed_form_dim(kind, m, n, r)
    return Report("cauchy_quotient_filtration", {"kind": str(kind), "m": m, "n": n, "r": r},
                  "pass" if ok else "fail", {"steps": rows, "total": total,
                                             "closed_form": closed_form_dim(kind, m, n, r)})


def replace_entry(t: Tableau, cell: tuple[int, int], u: int) -> Tableau:
    return t.replace(cell, u)


def row_sum_check(m: int, n: int, lam, sample_count: int = 20, seed: int = 0) -> Report:
    """Samples ``sum_u (S_{i,j}[u] | T)`` and tests membership in ``J_{m,n}(T)``."""
    lam = lam if isinstance(lam, Partition) else Partition.parse(lam) if isinstance(lam, str) else Partition(lam)
    rng = random.Random(seed)
    shape = as_shape(lam)
    r = lam.size()
    J = ideal_component("T", m, n, r)
    cells = shape.cells
    failures = 0
    samples = []
    for _ in range(sample_count):
        S = Tableau.from_word(shape, [rng.randint(1, m) for _ in cells])
        T = Tableau.from_word(shape, [rng.randint(1, n) for _ in cells])
        cell = rng.choice(cells)
        total: dict = {}
        for u in range(1, m + 1):
            axpy(total, 1, _bitableau_terms(S.replace(cell, u).rows, T.rows, m, n))
        member = J.contains(total)
        failures += not member
        samples.append({"S": S.to_json(), "T": T.to_json(), "cell": list(cell), "member": member})
    return Report("row_sum_membership", {"m": m, "n": n, "lambda": str(lam), "samples": sample_count, "seed": seed},
                  "pass" if failures == 0 else "fail", {"failures": failures, "samples": samples})


def in_ideal(kind, m: int, n: int, p: SparsePolynomial) -> bool:
    """Membership of a homogeneous polynomial in ``J_{m,n}(kind)``."""
    if p.is_zero():
        return True
    if not p.is_homogeneous():
        raise ValueError("membership test expects a homogeneous polynomial")
    return ideal_component(kind, m, n, p.degree()).contains(p.terms)
