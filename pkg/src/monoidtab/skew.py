"""The skew-commuting ring k<y_{m×n}>, its ideals J'_{m,n}(Z) and the skew Cauchy filtration.

Exterior monomials are sorted tuples of variable indices (row-major, 0-based);
``y^2 = 0`` is automatic and products carry the sign of the merge permutation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Mapping, Sequence

from gmpy2 import mpq

from .cauchy import ChainStep, acting_generators, cauchy_chain, check_chain, closed_form_dim
from .functor import build_R_module
from .linalg import Echelon, RationalMatrix, axpy
from .monoids import MonoidKind, PartialTransformation
from .partitions import Partition, as_shape, enumerate_partitions
from .report import Report, combine
from .schur import build_schur_module, build_weyl_module
from .tableaux import Tableau, distinct_rearrangements, enumerate_tableaux, sign_of_sort


def merge_sign(a: Sequence[int], b: Sequence[int]) -> int:
    """Sign of sorting the concatenation ``a + b`` of two sorted tuples; 0 on a repeat."""
    inversions = 0
    j = 0
    bs = list(b)
    for x in a:
        while j < len(bs) and bs[j] < x:
            j += 1
        if j < len(bs) and bs[j] == x:
            return 0
        inversions += j
    return -1 if inversions % 2 else 1


def ext_mul(p: Mapping, q: Mapping) -> dict:
    out: dict = {}
    for ka, va in p.items():
        for kb, vb in q.items():
            s = merge_sign(ka, kb)
            if not s:
                continue
            k = tuple(sorted(ka + kb))
            nv = out.get(k, 0) + s * va * vb
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
    return out


def word_to_terms(word: Sequence[int]) -> dict:
    """The exterior product ``y_{w_1} ... y_{w_k}`` of variables given in order."""
    if len(set(word)) != len(word):
        return {}
    return {tuple(sorted(word)): mpq(sign_of_sort(word))}


class ExteriorPolynomial:
    """Element of ``k<y_{m×n}>`` keyed by sorted variable index tuples."""

    __slots__ = ("m", "n", "terms")

    def __init__(self, m: int, n: int, terms: Mapping | None = None):
        self.m, self.n = m, n
        self.terms = {}
        for k, v in (terms or {}).items():
            k = tuple(k)
            if list(k) != sorted(set(k)):
                s = sign_of_sort(k) if len(set(k)) == len(k) else 0
                if not s:
                    continue
                k, v = tuple(sorted(k)), s * v
            if v:
                self.terms[k] = self.terms.get(k, 0) + mpq(v)
        self.terms = {k: v for k, v in self.terms.items() if v}

    @classmethod
    def variable(cls, m: int, n: int, i: int, j: int) -> ExteriorPolynomial:
        return cls(m, n, {((i - 1) * n + (j - 1),): 1})

    def __add__(self, other: ExteriorPolynomial) -> ExteriorPolynomial:
        return ExteriorPolynomial(self.m, self.n, axpy(dict(self.terms), 1, other.terms))

    def __sub__(self, other: ExteriorPolynomial) -> ExteriorPolynomial:
        return ExteriorPolynomial(self.m, self.n, axpy(dict(self.terms), -1, other.terms))

    def __mul__(self, other) -> ExteriorPolynomial:
        if isinstance(other, ExteriorPolynomial):
            return ExteriorPolynomial(self.m, self.n, ext_mul(self.terms, other.terms))
        return ExteriorPolynomial(self.m, self.n, {k: v * other for k, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, ExteriorPolynomial) and (self.m, self.n, self.terms) == (other.m, other.n, other.terms)

    def __hash__(self):
        return hash((self.m, self.n, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((len(k) for k in self.terms), default=-1)

    def __repr__(self) -> str:
        return f"ExteriorPolynomial({format_ext(self.terms, self.n)})"


def format_ext(terms: Mapping, n: int) -> str:
    if not terms:
        return "0"
    parts = []
    for k in sorted(terms):
        c = terms[k]
        mono = "*".join(f"y{v // n + 1}{v % n + 1}" for v in k) or "1"
        parts.append(mono if c == 1 else f"-{mono}" if c == -1 else f"{c}*{mono}")
    return " + ".join(parts).replace("+ -", "- ")


def _y(n: int, i: int, j: int) -> int:
    return (i - 1) * n + (j - 1)


# -- ideals -------------------------------------------------------------------

def skew_ideal_generators(kind, m: int, n: int) -> list[ExteriorPolynomial]:
    """Same recipe as the commutative ideals; products of a variable with itself vanish and are dropped."""
    kind = MonoidKind.parse(kind)
    if kind is MonoidKind.SYM:
        raise ValueError("no ideal is attached to the symmetric group")
    gens = []
    for j in range(1, n + 1):
        for i, i2 in combinations(range(1, m + 1), 2):
            gens.append(ExteriorPolynomial(m, n, {(_y(n, i, j), _y(n, i2, j)): 1}))
    if kind is MonoidKind.IS:
        for i in range(1, m + 1):
            for j, j2 in combinations(range(1, n + 1), 2):
                gens.append(ExteriorPolynomial(m, n, {(_y(n, i, j), _y(n, i, j2)): 1}))
    if kind is MonoidKind.T:
        for j in range(1, n + 1):
            gens.append(ExteriorPolynomial(m, n, {(_y(n, i, j),): 1 for i in range(1, m + 1)}))
    return gens


@lru_cache(maxsize=None)
def skew_ideal_component(kind, m: int, n: int, r: int) -> Echelon:
    kind = MonoidKind.parse(kind)
    e = Echelon()
    gens = sorted(skew_ideal_generators(kind, m, n), key=lambda g: len(g.terms))
    for g in gens:
        d = g.degree()
        if d > r:
            continue
        for mono in combinations(range(m * n), r - d):
            e.add(ext_mul({mono: mpq(1)}, g.terms))
    return e


def skew_quotient_dim(kind, m: int, n: int, r: int) -> int:
    """``dim (k<y>/J')_r`` by linear algebra; compare with :func:`closed_form_dim`."""
    return comb(m * n, r) - skew_ideal_component(kind, m, n, r).rank


def skew_in_ideal(kind, m: int, n: int, p: ExteriorPolynomial | Mapping) -> bool:
    terms = p.terms if isinstance(p, ExteriorPolynomial) else p
    if not terms:
        return True
    degrees = {len(k) for k in terms}
    if len(degrees) != 1:
        raise ValueError("membership test expects a homogeneous element")
    return skew_ideal_component(kind, m, n, degrees.pop()).contains(terms)


# -- bitableaux ------------------------------------------------------------

def _row_terms(srow: Sequence[int], trow: Sequence[int], n: int) -> dict:
    out: dict = {}
    for h in distinct_rearrangements(trow):
        axpy(out, 1, word_to_terms([_y(n, s, t) for s, t in zip(srow, h)]))
    return out


def _skew_terms(srows, trows, m: int, n: int) -> dict:
    acc: dict = {(): mpq(1)}
    for sr, tr in zip(srows, trows):
        acc = ext_mul(acc, _row_terms(sr, tr, n))
        if not acc:
            return {}
    return acc


def skew_bitableau(S: Tableau, T: Tableau, m: int, n: int) -> ExteriorPolynomial:
    """Product over rows of the sum over distinct rearrangements ``h`` of T's row of ``y_{s_1 h_1} ... y_{s_k h_k}``."""
    if S.shape != T.shape:
        raise ValueError(f"shape mismatch: {S.shape} vs {T.shape}")
    return ExteriorPolynomial(m, n, _skew_terms(S.rows, T.rows, m, n))


def _skew_pairs(lam: Partition, m: int, n: int):
    # (S|T) is alternating in each row of S and symmetric in each row of T
    return enumerate_tableaux(lam, m, "row_strict"), enumerate_tableaux(lam, n, "row_weak")


def skew_chain(m: int, n: int, r: int, base: Echelon | None = None) -> list[ChainStep]:
    shapes = [lam for lam in enumerate_partitions(r) if (lam[0] if len(lam) else 0) <= m]
    return cauchy_chain(m, n, r, base=base, terms_fn=_skew_terms, pairs_fn=_skew_pairs, shapes=shapes)


# -- actions ------------------------------------------------------------------

def skew_act_partial(terms: Mapping, m: int, n: int, A: PartialTransformation | None,
                     B: PartialTransformation | None) -> dict:
    out: dict = {}
    for mono, c in terms.items():
        word = []
        for v in mono:
            i, j = divmod(v, n)
            ii = A.images[i] if A is not None else i + 1
            jj = B.images[j] if B is not None else j + 1
            if ii is None or jj is None:
                word = None
                break
            word.append(_y(n, ii, jj))
        if word is None:
            continue
        axpy(out, c, word_to_terms(word))
    return out


def skew_act_matrix(terms: Mapping, m: int, n: int, A: RationalMatrix | None, B: RationalMatrix | None) -> dict:
    images = {}
    for i in range(m):
        for j in range(n):
            rows = [(k, A[k, i]) for k in range(m) if A[k, i]] if A is not None else [(i, mpq(1))]
            cols = [(l, B[l, j]) for l in range(n) if B[l, j]] if B is not None else [(j, mpq(1))]
            images[i * n + j] = {(k * n + l,): a * b for k, a in rows for l, b in cols}
    out: dict = {}
    for mono, c in terms.items():
        acc = {(): c}
        for v in mono:
            acc = ext_mul(acc, images[v])
        axpy(out, 1, acc)
    return out


def skew_apply_pair(terms: Mapping, m: int, n: int, A, B) -> dict:
    if isinstance(A, RationalMatrix) or isinstance(B, RationalMatrix):
        return skew_act_matrix(terms, m, n, A if isinstance(A, RationalMatrix) else (A.matrix() if A else None),
                               B if isinstance(B, RationalMatrix) else (B.matrix() if B else None))
    return skew_act_partial(terms, m, n, A, B)


# -- checks -------------------------------------------------------------------

def skew_filtration_check(m: int, n: int, r: int) -> Report:
    """Unquotiented chain: quotients ``L_lam(V_m) (x) K_lam(V_n)`` summing to ``C(mn, r)``."""
    steps = skew_chain(m, n, r)
    rows, ok = [], True
    for st in steps:
        exp = build_schur_module(st.lam, m).dim * build_weyl_module(st.lam, n).dim
        rows.append({"lambda": str(st.lam), "quotient_dim": st.quotient_dim, "expected": exp})
        ok &= st.quotient_dim == exp
    total = steps[-1].echelon.rank if steps else 0
    ok &= total == comb(m * n, r)
    return Report("skew_cauchy_filtration", {"m": m, "n": n, "r": r}, "pass" if ok else "fail",
                  {"steps": rows, "total": total, "expected_total": comb(m * n, r)})


def _random_tableau(rng: random.Random, lam: Partition, k: int) -> Tableau:
    shape = as_shape(lam)
    return Tableau.from_word(shape, [rng.randint(1, k) for _ in shape.cells])


def _shapes_up_to(r: int) -> list[Partition]:
    return [lam for d in range(1, r + 1) for lam in enumerate_partitions(d)]


def repeated_entry_membership(m: int, n: int, samples: int = 100, seed: int = 0, rmax: int = 3) -> Report:
    """Bitableaux whose T has a repeated entry lie in J'(PT); a repeat in S puts them in J'(IS)."""
    rng = random.Random(seed)
    shapes = _shapes_up_to(rmax)
    failures, tested = 0, 0
    while tested < samples:
        lam = rng.choice(shapes)
        S, T = _random_tableau(rng, lam, m), _random_tableau(rng, lam, n)
        rep_t = len(set(T.word())) < len(T.word())
        rep_s = len(set(S.word())) < len(S.word())
        if not (rep_s or rep_t):
            continue
        tested += 1
        terms = _skew_terms(S.rows, T.rows, m, n)
        if rep_t and not skew_in_ideal("PT", m, n, terms):
            failures += 1
        if rep_s and not skew_in_ideal("IS", m, n, terms):
            failures += 1
    return Report("skew_repeated_entry_membership", {"m": m, "n": n, "samples": samples, "seed": seed},
                  "pass" if not failures else "fail", {"failures": failures})


def row_sum_membership(m: int, n: int, samples: int = 100, seed: int = 0, rmax: int = 3,
                       kind="T") -> Report:
    """``sum_u (S_{i,j}[u] | T)`` lies in ``J'(kind)``; the column-sum generators make this hold for T."""
    rng = random.Random(seed)
    shapes = _shapes_up_to(rmax)
    failures = 0
    for _ in range(samples):
        lam = rng.choice(shapes)
        S, T = _random_tableau(rng, lam, m), _random_tableau(rng, lam, n)
        cell = rng.choice(as_shape(lam).cells)
        total: dict = {}
        for u in range(1, m + 1):
            axpy(total, 1, _skew_terms(S.replace(cell, u).rows, T.rows, m, n))
        failures += not skew_in_ideal(kind, m, n, total)
    return Report("skew_row_sum_membership", {"m": m, "n": n, "samples": samples, "seed": seed, "kind": str(MonoidKind.parse(kind))},
                  "pass" if not failures else "fail", {"failures": failures})


def skew_chain_check(kind, m: int, n: int, r: int, characters: bool = True, invariance: bool = True,
                        samples: int = 0, seed: int = 0) -> Report:
    """Chain ``(M_lam + J')/J'`` against ``left (x) R(n)_lam``; optionally samples the two membership checks."""
    kind = MonoidKind.parse(kind)
    J = skew_ideal_component(kind, m, n, r)
    steps = skew_chain(m, n, r, base=J)

    def right_module(lam):
        return build_R_module(kind, n, lam, "lower") if lam.size() <= n else None

    ok, rows = check_chain(kind, m, n, steps, lambda v, A, B: skew_apply_pair(v, m, n, A, B),
                           right_module, characters, invariance)
    total = sum(st.quotient_dim for st in steps)
    rank_dim = skew_quotient_dim(kind, m, n, r)
    closed = closed_form_dim(kind, m, n, r)
    ok &= total == rank_dim == closed
    rep = Report("skew_cauchy_quotient_filtration", {"kind": str(kind), "m": m, "n": n, "r": r},
                 "pass" if ok else "fail",
                 {"steps": rows, "total": total, "quotient_dim": rank_dim, "closed_form": closed})
    if not samples:
        return rep
    extra = [repeated_entry_membership(m, n, samples, seed), row_sum_membership(m, n, samples, seed)]
    return combine(rep.claim, rep.parameters, [rep] + extra)
