"""The symmetrized Schur functor ``G(M) = M / M''`` and the monoid modules it produces.

``M''`` is the sum of the weight spaces whose weight has a coordinate at least
2.  The quotient has as basis the images of the basis vectors of 0/1 weight.
A partial map ``p`` sends a weight vector of weight ``alpha`` to one of weight
``p_* alpha``; when ``p`` is undefined on, or not injective on, the support of
``alpha`` the image is zero modulo ``M''``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from math import comb
from typing import Callable, Mapping, Sequence

from gmpy2 import mpq

from .linalg import RationalMatrix, Solver, Subspace
from .monoids import (
    MonoidKind,
    PartialTransformation,
    cycle_type_representative,
    generators,
    symmetric_group,
    transposition,
)
from .partitions import EMPTY, Partition, SkewShape, as_shape, has_repeat, is_zero_one
from .report import Report
from .schur import (
    LabeledModule,
    NotInvariant,
    TableauModule,
    TensorModule,
    build_schur_module,
    build_weyl_module,
    divided_power,
    symmetric_power,
)
from .tableaux import count_standard


class SubmoduleFailure(AssertionError):
    """``M''`` was not stable under some monoid element."""


def _pushforward_ok(p: PartialTransformation, alpha: Sequence[int]) -> bool:
    """True when ``p`` is defined and injective on the support of the 0/1 weight ``alpha``."""
    seen = set()
    for j, a in enumerate(alpha):
        if a:
            b = p.images[j]
            if b is None or b in seen:
                return False
            seen.add(b)
    return True


class MonoidModule:
    """``G_kind(M)`` for a labelled module ``M``: the quotient ``M / M''``.

    Basis: the basis vectors of ``M`` with 0/1 weight (their cosets).
    """

    def __init__(self, base: LabeledModule, kind, name: str | None = None, check: bool = True):
        self.base = base
        self.kind = MonoidKind.parse(kind)
        self.n = base.n
        self.degree = base.degree
        self.name = name or f"G_{self.kind}({base.name})"
        self.indices = base.weight_indices(is_zero_one)
        self.labels = [base.labels[k] for k in self.indices]
        self.weights = [base.weights[k] for k in self.indices]
        self._pos = {k: i for i, k in enumerate(self.indices)}
        self._cache: dict = {}
        if check and self.n >= 1:
            self.check_double_prime_stable(generators(self.kind, self.n))

    @property
    def dim(self) -> int:
        return len(self.indices)

    def check_double_prime_stable(self, elements) -> None:
        """Every element maps each basis vector of ``M''`` into ``M''``."""
        dp = self.base.weight_indices(has_repeat)
        for g in elements:
            if not dp:
                break
            m = self.base.act(g, columns=dp)
            for k in dp:
                for i in m.column(k):
                    if not has_repeat(self.base.weights[i]):
                        raise SubmoduleFailure(f"{self.name}: {g} sends a vector of M'' outside M''")

    def act(self, g) -> RationalMatrix:
        """Matrix of a partial map on the coset basis."""
        if isinstance(g, str):
            g = PartialTransformation.parse(g)
        elif not isinstance(g, PartialTransformation):
            g = PartialTransformation(tuple(g))
        if not g.belongs_to(self.kind):
            raise ValueError(f"{g} is not an element of {self.kind}_{self.n}")
        hit = self._cache.get(g)
        if hit is not None:
            return hit
        live = [k for k, w in zip(self.indices, self.weights) if _pushforward_ok(g, w)]
        full = self.base.act(g, columns=live) if live else None
        cols = []
        for k in self.indices:
            if full is None or k not in live:
                cols.append({})
                continue
            col = full.column(k)
            cols.append({self._pos[i]: x for i, x in col.items() if i in self._pos})
        m = RationalMatrix.from_columns(self.dim, cols)
        self._cache[g] = m
        return m

    def character_value(self, sigma: PartialTransformation) -> mpq:
        return self.act(sigma).trace()

    def __repr__(self) -> str:
        return f"MonoidModule({self.name}, dim={self.dim})"


def symmetrized_functor(m: LabeledModule, kind) -> MonoidModule:
    return MonoidModule(m, kind)


@lru_cache(maxsize=None)
def _build_R(kind: MonoidKind, n: int, shape: SkewShape, variant: str) -> MonoidModule:
    if variant == "upper":
        # the upper module is built from the Schur module of the CONJUGATE shape
        base = build_schur_module(shape.conjugate(), n)
        name = f"R({n})^{shape}"
    elif variant == "lower":
        base = build_weyl_module(shape, n)
        name = f"R({n})_{shape}"
    else:
        raise ValueError("variant must be 'upper' or 'lower'")
    return MonoidModule(base, kind, name=f"{name} over {kind}_{n}")


def build_R_module(kind, n: int, shape, variant: str = "upper") -> MonoidModule:
    """``R(n)^{lam/mu} = G(L_{lam'/mu'}(V_n))`` (upper) or ``R(n)_{lam/mu} = G(K_{lam/mu}(V_n))`` (lower)."""
    return _build_R(MonoidKind.parse(kind), n, as_shape(shape), variant)


def expected_R_dim(n: int, shape) -> int:
    shape = as_shape(shape)
    r = shape.size()
    return comb(n, r) * count_standard(shape) if r <= n else 0


def restrict_to_symmetric_group(m: MonoidModule) -> list[tuple[PartialTransformation, RationalMatrix]]:
    """Action matrices of the adjacent transpositions."""
    if m.kind not in (MonoidKind.IS, MonoidKind.PT, MonoidKind.T, MonoidKind.SYM):
        raise ValueError("monoid does not contain S_n")
    return [(t, m.act(t)) for t in (transposition(m.n, i, i + 1) for i in range(1, m.n))]


def class_representatives(n: int) -> list[tuple[Partition, PartialTransformation]]:
    from .partitions import enumerate_partitions

    return [(rho, cycle_type_representative(rho.parts)) for rho in enumerate_partitions(n)]


def restricted_character(m) -> dict[Partition, mpq]:
    """Character of the ``S_n`` restriction, one trace per cycle type."""
    return {rho: m.act(sigma).trace() for rho, sigma in class_representatives(m.n)}


# -- tensor-side weight space ----------------------------------------------

def prime_character(m: LabeledModule) -> dict[Partition, mpq]:
    """Character of ``F(M) = M'`` (permutations preserve ``M'``, so restrict the trace)."""
    prime = m.weight_indices(is_zero_one)
    out = {}
    for rho, sigma in class_representatives(m.n):
        mat = m.act(sigma, columns=prime)
        out[rho] = sum((mat[k, k] for k in prime), mpq(0))
    return out


def functor_tensor_check(m: LabeledModule, n: int | None = None) -> Report:
    """``F(M)`` versus the all-ones weight space of ``M ⊗ Sym_{n-r}`` and ``M ⊗ D_{n-r}``."""
    n = m.n if n is None else n
    if n != m.n:
        raise ValueError("module must be over V_n")
    r = m.degree
    ones = (1,) * n
    f_dim = len(m.weight_indices(is_zero_one))
    f_char = prime_character(m)
    data = {"module": m.name, "n": n, "r": r, "F_dim": f_dim,
            "F_character": {str(k): int(v) for k, v in f_char.items()}}
    ok = True
    for label, other in (("Sym", symmetric_power(n - r, n)), ("D", divided_power(n - r, n))):
        t = TensorModule(m, other)
        d = t.weight_space_dim(ones)
        ch = {rho: t.weight_space_trace(sigma, ones) for rho, sigma in class_representatives(n)}
        data[f"{label}_dim"] = d
        data[f"{label}_character"] = {str(k): int(v) for k, v in ch.items()}
        ok &= d == f_dim and ch == f_char
    return Report("functor_vs_tensor_weight_space", {"module": m.name, "n": n}, "pass" if ok else "fail", data)


# -- induced modules ------------------------------------------------------------

def order_preserving_injections(n: int, r: int) -> list[tuple[int, ...]]:
    return list(combinations(range(1, n + 1), r))


class FiberModule:
    """An ``S_r``-module given by a function from permutations (image tuples) to matrices."""

    def __init__(self, r: int, dim: int, action: Callable[[tuple[int, ...]], RationalMatrix], name: str = "fiber"):
        self.r = r
        self.dim = dim
        self._action = action
        self._cache: dict = {}
        self.name = name

    def act(self, sigma: tuple[int, ...]) -> RationalMatrix:
        hit = self._cache.get(sigma)
        if hit is None:
            hit = self._action(sigma)
            self._cache[sigma] = hit
        return hit

    @classmethod
    def trivial(cls, r: int) -> FiberModule:
        return cls(r, 1, lambda s: RationalMatrix.identity(1), "trivial")

    @classmethod
    def schur_functor_of(cls, m: LabeledModule) -> FiberModule:
        """``f(M) = M^{(1^r, 0^{n-r})}`` with ``S_r`` acting through permutation matrices fixing ``[r+1, n]``."""
        r, n = m.degree, m.n
        alpha = (1,) * r + (0,) * (n - r)
        idx = m.weight_indices(lambda w: w == alpha)

        def action(sigma):
            g = PartialTransformation(tuple(sigma) + tuple(range(r + 1, n + 1)))
            full = m.act(g, columns=idx)
            return full.submatrix(idx, idx)

        return cls(r, len(idx), action, f"f({m.name})")


class InducedModule:
    """``k I_{n,r} ⊗_{S_r} X``: basis pairs (order-preserving injection, fiber basis vector)."""

    def __init__(self, kind, n: int, fiber: FiberModule):
        self.kind = MonoidKind.parse(kind)
        self.n = n
        self.r = fiber.r
        if self.r > n:
            raise ValueError("r must not exceed n")
        self.fiber = fiber
        self.injections = order_preserving_injections(n, self.r)
        self._hpos = {h: i for i, h in enumerate(self.injections)}

    @property
    def dim(self) -> int:
        return len(self.injections) * self.fiber.dim

    def act(self, g: PartialTransformation) -> RationalMatrix:
        """``A (h ⊗ x) = h' ⊗ sigma x`` when ``p_A h = h' sigma`` is injective with full domain, else 0."""
        fd = self.fiber.dim
        cols: list[dict] = [{} for _ in range(self.dim)]
        for hi, h in enumerate(self.injections):
            img = [g(j) for j in h]
            if None in img or len(set(img)) != len(img):
                continue
            target = tuple(sorted(img))
            sigma = tuple(target.index(v) + 1 for v in img)
            block = self.fiber.act(sigma)
            ti = self._hpos[target]
            for c in range(fd):
                col = cols[hi * fd + c]
                for i, x in block.column(c).items():
                    col[ti * fd + i] = x
        return RationalMatrix.from_columns(self.dim, cols)


def induced_module(kind, n: int, fiber: FiberModule) -> InducedModule:
    return InducedModule(kind, n, fiber)


def induced_isomorphism(ind: InducedModule, g_mod: MonoidModule) -> RationalMatrix:
    """Matrix of ``h ⊗ x -> A_h x + M''`` from the induced module to ``G(M)``.

    ``A_h`` is the partial map with domain ``[r]`` agreeing with ``h``; the
    fiber must be ``f(M)`` for the base module ``M`` of ``g_mod``.
    """
    base = g_mod.base
    r, n = ind.r, ind.n
    alpha = (1,) * r + (0,) * (n - r)
    fidx = base.weight_indices(lambda w: w == alpha)
    pos = {k: i for i, k in enumerate(g_mod.indices)}
    cols = []
    for h in ind.injections:
        a_h = PartialTransformation(tuple(h) + (None,) * (n - r))
        m = base.act(a_h, columns=fidx)
        for k in fidx:
            cols.append({pos[i]: x for i, x in m.column(k).items() if i in pos})
    return RationalMatrix.from_columns(g_mod.dim, cols)


def induced_isomorphism_check(kind, n: int, lam, elements: Sequence[PartialTransformation] | None = None) -> Report:
    """Build the induced module from the Specht fiber and compare it with ``R(n)^lam`` explicitly."""
    from .linalg import bareiss_det

    kind = MonoidKind.parse(kind)
    lam = as_shape(lam)
    g_mod = build_R_module(kind, n, lam, "upper")
    fiber = FiberModule.schur_functor_of(g_mod.base)
    ind = InducedModule(kind, n, fiber)
    phi = induced_isomorphism(ind, g_mod)
    elements = list(elements) if elements is not None else generators(kind, n)
    square = phi.nrows == phi.ncols
    invertible = square and (phi.nrows == 0 or bareiss_det(phi) != 0)
    intertwines = all(g_mod.act(a) @ phi == phi @ ind.act(a) for a in elements)
    traces = all(g_mod.act(a).trace() == ind.act(a).trace() for a in elements)
    ok = square and invertible and intertwines and traces and ind.dim == g_mod.dim
    data = {"dim_induced": ind.dim, "dim_G": g_mod.dim, "invertible": invertible,
            "intertwines": intertwines, "elements_checked": len(elements)}
    return Report("induced_isomorphism", {"kind": str(kind), "n": n, "lambda": str(lam)}, "pass" if ok else "fail", data)
