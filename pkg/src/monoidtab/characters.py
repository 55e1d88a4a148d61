"""Symmetric-group characters, both branching rules, non-isomorphism tables and
an irreducibility test for the monoid modules.

Over the rationals a filtration of an ``S_n``-module has its multiset of
factors determined by the character, so the ``S_n`` branching rule is checked
by comparing characters.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial
from typing import Sequence

import sympy
from gmpy2 import mpq

from .functor import (
    MonoidModule,
    build_R_module,
    class_representatives,
    expected_R_dim,
    restricted_character,
)
from .linalg import Echelon, RationalMatrix, Subspace, kernel
from .monoids import (
    MonoidKind,
    PartialTransformation,
    block_embed,
    enumerate_monoid,
    generators,
    idempotent_rank,
)
from .partitions import (
    EMPTY,
    Partition,
    SkewShape,
    as_shape,
    enumerate_partitions,
    horizontal_strip_extensions,
    intermediate_partitions,
)
from .report import Report
from .schur import gl_branching_filtration


# -- class functions ---------------------------------------------------------

def class_size(rho: Partition) -> int:
    n = rho.size()
    denom = 1
    counts: dict[int, int] = {}
    for p in rho:
        counts[p] = counts.get(p, 0) + 1
    for p, c in counts.items():
        denom *= p ** c * factorial(c)
    return factorial(n) // denom


@dataclass(frozen=True)
class ClassFunction:
    n: int
    values: tuple[tuple[Partition, mpq], ...]

    @classmethod
    def from_dict(cls, n: int, d: dict) -> ClassFunction:
        return cls(n, tuple((rho, mpq(d[rho])) for rho in enumerate_partitions(n)))

    def __getitem__(self, rho) -> mpq:
        rho = rho if isinstance(rho, Partition) else Partition(rho)
        for k, v in self.values:
            if k == rho:
                return v
        raise KeyError(rho)

    def as_dict(self) -> dict[Partition, mpq]:
        return dict(self.values)

    def __add__(self, other: ClassFunction) -> ClassFunction:
        if self.n != other.n:
            raise ValueError("class functions on different groups")
        return ClassFunction(self.n, tuple((k, v + w) for (k, v), (_, w) in zip(self.values, other.values)))

    def inner(self, other: ClassFunction) -> mpq:
        total = sum((class_size(k) * v * w for (k, v), (_, w) in zip(self.values, other.values)), mpq(0))
        return total / factorial(self.n)

    def degree(self) -> mpq:
        return self[Partition([1] * self.n)] if self.n else self.values[0][1]

    def to_json(self) -> dict[str, int]:
        return {str(k): int(v) if v.denominator == 1 else str(v) for k, v in self.values}

    @classmethod
    def zero(cls, n: int) -> ClassFunction:
        return cls.from_dict(n, {rho: 0 for rho in enumerate_partitions(n)})


@lru_cache(maxsize=None)
def _mn(beta: tuple[int, ...], rho: tuple[int, ...]) -> int:
    """Murnaghan-Nakayama on a beta-set (strictly decreasing bead positions)."""
    if not rho:
        return 1
    k, rest = rho[0], rho[1:]
    beads = set(beta)
    total = 0
    for b in beta:
        if b - k >= 0 and (b - k) not in beads:
            between = sum(1 for c in beta if b - k < c < b)
            new = tuple(sorted((beads - {b}) | {b - k}, reverse=True))
            total += (-1) ** between * _mn(new, rest)
    return total


def specht_character(lam) -> ClassFunction:
    """Irreducible character ``chi^lam`` of ``S_|lam|`` (Murnaghan-Nakayama)."""
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    n = lam.size()
    L = len(lam)
    beta = tuple(lam[i] + L - 1 - i for i in range(L))
    return ClassFunction.from_dict(n, {rho: _mn(beta, rho.parts) for rho in enumerate_partitions(n)})


def module_character(m) -> ClassFunction:
    """Trace of one permutation per cycle type on a module carrying an ``S_n`` action."""
    return ClassFunction.from_dict(m.n, restricted_character(m))


# -- branching rules -----------------------------------------------------------

def verify_symmetric_restriction(lam, n: int, kind="IS") -> Report:
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    if lam.size() > n:
        raise ValueError("need |lambda| <= n")
    hs = horizontal_strip_extensions(lam, n)
    expected = ClassFunction.zero(n)
    for nu in hs:
        expected = expected + specht_character(nu)
    upper = module_character(build_R_module(kind, n, lam, "upper"))
    lower = module_character(build_R_module(kind, n, lam, "lower"))
    ok = upper == expected and lower == expected
    return Report(
        "branching_rule_symmetric_group",
        {"lambda": str(lam), "n": n, "kind": str(MonoidKind.parse(kind))},
        "pass" if ok else "fail",
        {"factors": [str(p) for p in hs], "expected": expected.to_json(),
         "upper_character": upper.to_json(), "lower_character": lower.to_json()},
    )


def _R_dim(n: int, shape: SkewShape, kind="IS") -> int:
    """Dimension of the constructed ``R(n)^shape``; zero-size monoids (n = 0) give the degree-0 module."""
    if n == 0:
        return 1 if shape.size() == 0 else 0
    if shape.size() > n:
        return 0
    return build_R_module(kind, n, shape, "upper").dim


def block_dimension_identity(shape, n: int, s: int, kind="IS") -> tuple[bool, dict]:
    shape = as_shape(shape)
    lam, mu = shape.outer, shape.inner
    lhs = _R_dim(n, shape, kind)
    terms = {}
    for nu in intermediate_partitions(lam, mu, s, n):
        a = _R_dim(s, SkewShape(nu, mu), kind)
        b = _R_dim(n - s, SkewShape(lam, nu), kind)
        terms[str(nu)] = a * b
    closed = expected_R_dim(n, shape)
    rhs = sum(terms.values())
    return lhs == rhs == closed, {"lhs": lhs, "closed_form": closed, "rhs": rhs, "terms": terms}


def block_generators(kind, n: int, s: int) -> list[PartialTransformation]:
    kind = MonoidKind.parse(kind)
    out = []
    ids, idt = PartialTransformation.identity(s), PartialTransformation.identity(n - s)
    for a in generators(kind, s):
        out.append(block_embed(a, idt))
    for b in generators(kind, n - s):
        out.append(block_embed(ids, b))
    return out


def block_structural_chain(kind, shape, n: int, s: int) -> tuple[bool, list[dict]]:
    """Push the GL branching filtration of ``L_{lam'/mu'}(V_n)`` into ``R(n)^{lam/mu}`` and test it."""
    shape = as_shape(shape)
    lam, mu = shape.outer, shape.inner
    R = build_R_module(kind, n, shape, "upper")
    filt = gl_branching_filtration(shape.conjugate(), n, s)
    pos = {k: i for i, k in enumerate(R.indices)}

    def push(sub: Subspace) -> Subspace:
        return Subspace(R.dim, [{pos[k]: x for k, x in b.items() if k in pos} for b in sub.basis])

    gens = block_generators(kind, n, s)
    mats = [R.act(g) for g in gens]
    ok = True
    rows = []
    prev = None
    for st in filt.steps:
        sub, dot = push(st.subspace), push(st.dot)
        nu_r = st.nu.conjugate()
        expected = _R_dim(s, SkewShape(nu_r, mu), kind) * _R_dim(n - s, SkewShape(lam, nu_r), kind)
        stable = all(sub.is_invariant(m) for m in mats)
        chain = prev is None or sub.contains_subspace(prev)
        q = sub.dim - dot.dim
        good = stable and chain and q == expected and sub.contains_subspace(dot)
        ok &= good
        rows.append({"nu": str(nu_r), "dim": sub.dim, "quotient_dim": q, "expected": expected, "stable": stable})
        prev = sub
    ok &= prev is not None and prev.dim == R.dim
    return ok, rows


def verify_block_restriction(kind, shape, n: int, s: int, structural: bool = True) -> Report:
    shape = as_shape(shape)
    if not 1 <= s < n:
        raise ValueError("need 1 <= s < n")
    ok, data = block_dimension_identity(shape, n, s, kind)
    if structural and shape.size() <= n:
        good, rows = block_structural_chain(kind, shape, n, s)
        data["chain"] = rows
        ok &= good
    return Report("branching_rule_block", {"kind": str(MonoidKind.parse(kind)), "shape": str(shape), "n": n, "s": s},
                  "pass" if ok else "fail", data)


def verify_last_point_restriction(kind, shape, n: int, structural: bool = False) -> Report:
    shape = as_shape(shape)
    lam, mu = shape.outer, shape.inner
    r = shape.size()
    # P(lam, mu): remove one corner of lam, keeping mu inside
    P = [nu for nu in intermediate_partitions(lam, mu, r, r + 1) if nu.size() == lam.size() - 1]
    # for r > n the module is zero and so is every factor
    expected = set() if r > n else set(P) if r == n else set(P) | {lam}
    if n < 2:
        ok = _R_dim(n, shape, kind) == expected_R_dim(n, shape)
        return Report("branching_rule_restriction", {"kind": str(kind), "shape": str(shape), "n": n},
                      "pass" if ok else "fail", {"factors": sorted(str(p) for p in expected)})
    found = {}
    for nu in intermediate_partitions(lam, mu, n - 1, n):
        d = _R_dim(n - 1, SkewShape(nu, mu), kind) * _R_dim(1, SkewShape(lam, nu), kind)
        if d:
            found[nu] = d
    ok_id, data = block_dimension_identity(shape, n, n - 1, kind)
    ok = ok_id and set(found) == expected
    if structural and r <= n:
        good, rows = block_structural_chain(kind, shape, n, n - 1)
        data["chain"] = rows
        ok &= good
    data["factors"] = {str(k): v for k, v in sorted(found.items(), key=lambda kv: kv[0].parts, reverse=True)}
    data["expected_factors"] = sorted(str(p) for p in expected)
    return Report("branching_rule_restriction", {"kind": str(MonoidKind.parse(kind)), "shape": str(shape), "n": n},
                  "pass" if ok else "fail", data)


# -- non-isomorphism -------------------------------------------------------------

def probe_elements(kind, n: int) -> list[PartialTransformation]:
    """Fixed non-invertible elements whose traces serve as invariants."""
    kind = MonoidKind.parse(kind)
    out = []
    if kind in (MonoidKind.IS, MonoidKind.PT):
        out += [idempotent_rank(n, k) for k in range(n)]
    if kind in (MonoidKind.T, MonoidKind.PT):
        # total idempotents with image [k]
        out += [PartialTransformation(tuple(min(j, k) for j in range(1, n + 1))) for k in range(1, n)]
    return out


def module_invariants(kind, n: int, lam: Partition) -> dict:
    R = build_R_module(kind, n, lam, "upper")
    return {
        "dim": R.dim,
        "character": module_character(R).to_json() if R.dim else None,
        "traces": [int(R.act(e).trace()) for e in probe_elements(kind, n)],
    }


def _is_row_pair(a: Partition, b: Partition, n: int) -> bool:
    return a.is_row() and b.is_row() and a.size() + b.size() == n


def nonisomorphism_table(kind, n: int, rmax: int | None = None) -> Report:
    kind = MonoidKind.parse(kind)
    rmax = n if rmax is None else rmax
    parts = [lam for r in range(rmax + 1) for lam in enumerate_partitions(r)]
    inv = {lam: module_invariants(kind, n, lam) for lam in parts}
    table = {}
    ok = True
    exceptions = []
    for a in parts:
        for b in parts:
            if a == b:
                table[(str(a), str(b))] = "possibly_isomorphic"
                continue
            ia, ib = inv[a], inv[b]
            sn_same = ia["dim"] == ib["dim"] and ia["character"] == ib["character"]
            distinct = not sn_same or ia["traces"] != ib["traces"]
            table[(str(a), str(b))] = "distinct" if distinct else "possibly_isomorphic"
            if sn_same:
                exceptions.append((str(a), str(b)))
                if not _is_row_pair(a, b, n):
                    ok = False
            if not distinct:
                if not _is_row_pair(a, b, n):
                    ok = False
                if kind in (MonoidKind.IS, MonoidKind.PT):
                    ok = False
    data = {
        "partitions": [str(p) for p in parts],
        "table": {f"{a} vs {b}": v for (a, b), v in table.items()},
        "same_symmetric_group_restriction": [f"{a} vs {b}" for a, b in exceptions],
        "invariants": {str(k): v for k, v in inv.items()},
    }
    return Report("nonisomorphism", {"kind": str(kind), "n": n, "rmax": rmax}, "pass" if ok else "fail", data)


# -- irreducibility ------------------------------------------------------------------

def _to_sympy(m: RationalMatrix):
    from sympy.polys.domains import QQ
    from sympy.polys.matrices import DomainMatrix

    rows = [[QQ(int(x.numerator), int(x.denominator)) for x in r] for r in m.to_dense()]
    return DomainMatrix(rows, (m.nrows, m.ncols), QQ)


def _poly_at(coeffs: Sequence, a: RationalMatrix) -> RationalMatrix:
    """Horner evaluation; ``coeffs`` from the leading coefficient down."""
    n = a.nrows
    acc = RationalMatrix.zero(n, n)
    ident = RationalMatrix.identity(n)
    for c in coeffs:
        acc = acc @ a + ident.scaled(mpq(int(c.p), int(c.q)) if hasattr(c, "p") else mpq(c))
    return acc


def spin(vectors: Sequence[dict], mats: Sequence[RationalMatrix], dim: int) -> Subspace:
    """Smallest subspace containing ``vectors`` and stable under ``mats``."""
    e = Echelon(dim)
    queue = []
    for v in vectors:
        r, _ = e.reduce(v)
        if r:
            e.add_reduced(r)
            queue.append(r)
    while queue:
        v = queue.pop()
        for m in mats:
            w = m.apply(v)
            r, _ = e.reduce(w)
            if r:
                e.add_reduced(r)
                queue.append(r)
    return Subspace.from_echelon(e, dim)


@dataclass
class IrreducibilityResult:
    status: str                  # irreducible | reducible | inconclusive
    witness: Subspace | None
    rounds: int
    seed: int

    def to_dict(self) -> dict:
        d = {"status": self.status, "rounds": self.rounds, "seed": self.seed}
        if self.witness is not None:
            d["witness_dim"] = self.witness.dim
            d["witness_basis"] = [[str(v) for v in _dense(b, self.witness.ambient_dim)] for b in self.witness.basis]
        return d


def _dense(v, n):
    return [v.get(i, mpq(0)) for i in range(n)]


def norton_test(mats: Sequence[RationalMatrix], dim: int, rounds: int = 25, seed: int = 0) -> IrreducibilityResult:
    """Meataxe-style test over Q for the algebra generated by ``mats``.

    Each round forms a random element ``a`` of the algebra, factors its
    characteristic polynomial and, for an irreducible factor ``p`` with
    ``dim ker p(a) = deg p``, spins a kernel vector of ``p(a)`` under the
    generators and a kernel vector of ``p(a)^T`` under the transposes.  Both
    spins filling the space certifies irreducibility; a proper spin is a
    witness of reducibility.
    """
    if dim == 0:
        return IrreducibilityResult("reducible", Subspace.zero(0), 0, seed)
    if dim == 1:
        return IrreducibilityResult("irreducible", None, 0, seed)
    rng = random.Random(seed)
    mats = [m for m in mats]
    trans = [m.transpose() for m in mats]
    x = sympy.Symbol("x")
    pool = list(mats)
    for rnd in range(1, rounds + 1):
        # grow a pool of products so random elements reach beyond the span of the generators
        pool.append(rng.choice(pool) @ rng.choice(mats))
        a = RationalMatrix.zero(dim, dim)
        for m in pool:
            c = rng.randint(-3, 3)
            if c:
                a = a + m.scaled(c)
        charpoly = _to_sympy(a).charpoly()
        poly = sympy.Poly([sympy.Rational(int(c.numerator), int(c.denominator)) for c in charpoly], x)
        _, factors = sympy.factor_list(poly)
        for f, _mult in sorted(factors, key=lambda fm: fm[0].degree()):
            f = sympy.Poly(f, x)
            deg = f.degree()
            N = _poly_at(f.all_coeffs(), a)
            K = kernel(N)
            if K.dim != deg:
                continue
            s1 = spin([K.basis[0]], mats, dim)
            if s1.dim < dim:
                return IrreducibilityResult("reducible", s1, rnd, seed)
            K2 = kernel(N.transpose())
            s2 = spin([K2.basis[0]], trans, dim)
            if s2.dim < dim:
                # the annihilator of a proper transpose-stable subspace is a proper submodule
                ann = kernel(RationalMatrix(s2.dim, dim, s2.basis))
                return IrreducibilityResult("reducible", ann, rnd, seed)
            return IrreducibilityResult("irreducible", None, rnd, seed)
    return IrreducibilityResult("inconclusive", None, rounds, seed)


def irreducibility_test(m: MonoidModule, rounds: int = 25, seed: int = 0) -> IrreducibilityResult:
    mats = [m.act(g) for g in generators(m.kind, m.n)]
    return norton_test(mats, m.dim, rounds, seed)


def burnside_dimension(m: MonoidModule) -> int:
    """Dimension of the span of all monoid element matrices (``dim^2`` iff absolutely irreducible)."""
    e = Echelon()
    d = m.dim
    for g in enumerate_monoid(m.kind, m.n):
        mat = m.act(g)
        flat = {}
        for i, row in enumerate(mat.rows):
            for j, x in row.items():
                flat[i * d + j] = x
        e.add(flat)
        if e.rank == d * d:
            break
    return e.rank


def verify_irreducible(kind, n: int, lam, rounds: int = 25, seed: int = 0) -> Report:
    kind = MonoidKind.parse(kind)
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    R = build_R_module(kind, n, lam, "upper")
    res = irreducibility_test(R, rounds, seed)
    column = lam.is_column() and lam.size() > 0
    predicted = kind is MonoidKind.IS or kind is MonoidKind.PT or (kind is MonoidKind.T and not column)
    if predicted:
        status = {"irreducible": "pass", "reducible": "fail", "inconclusive": "inconclusive"}[res.status]
    else:
        status = "pass" if res.status != "inconclusive" else "inconclusive"
    data = res.to_dict()
    data.update({"dim": R.dim, "claimed_irreducible": predicted})
    return Report("irreducibility", {"kind": str(kind), "n": n, "lambda": str(lam)}, status, data)
