"""Schur and Weyl modules as images of the maps d and d'.

``L_{lam/mu}(V_n)`` lives inside ``Sym_{lam'/mu'}(V_n)``, the tensor product
over the columns of the diagram of symmetric powers; ``K_{lam/mu}(V_n)``
lives inside ``Lambda^{lam'/mu'}(V_n)``, the tensor product over the columns
of exterior powers.  In both cases an ambient basis element is keyed by a tuple
holding, per column, the sorted tuple of its letters.

Every basis vector of these modules is a weight vector, so solving is done
one weight space at a time.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from typing import Callable, Iterable, Mapping, Sequence

from gmpy2 import mpq

from . import cache
from .linalg import Echelon, RationalMatrix, Solver, Subspace, Q, axpy
from .monoids import PartialTransformation
from .partitions import Partition, SkewShape, as_shape, has_repeat, is_zero_one, permute_weight
from .tableaux import (
    Tableau,
    count_sst,
    distinct_rearrangements,
    enumerate_tableaux,
    iter_tableaux,
    sign_of_sort,
    signed_permutations,
)

SYM = "sym"
EXT = "ext"

Key = tuple  # tuple of per-column sorted letter tuples


class BasisViolation(AssertionError):
    """The proposed basis images turned out dependent, or a straightening failed."""


class NotInvariant(AssertionError):
    """An action image left the module (or a subspace claimed to be stable)."""


# -- ambient arithmetic ------------------------------------------------------

def _column_positions(shape: SkewShape) -> dict[int, int]:
    return {col[0][1]: k for k, col in enumerate(shape.columns)}


def _check_tableau(shape: SkewShape, n: int, t: Tableau):
    if t.shape != shape:
        raise ValueError(f"tableau shape {t.shape} does not match {shape}")
    for x in t.word():
        if not 1 <= x <= n:
            raise ValueError(f"entry {x} outside [1, {n}]")


def normalize_key(cols: Sequence[Sequence[int]], kind: str) -> tuple[Key | None, int]:
    """Sort each column; for exterior columns return the sorting sign (0 on a repeat)."""
    if kind == SYM:
        return tuple(tuple(sorted(c)) for c in cols), 1
    sign = 1
    out = []
    for c in cols:
        s = sign_of_sort(c)
        if not s:
            return None, 0
        sign *= s
        out.append(tuple(sorted(c)))
    return tuple(out), sign


def _distribute(shape: SkewShape, row_words: Sequence[Iterable[tuple[tuple[int, ...], int]]], kind: str) -> dict:
    """Sum over choices of one (word, coef) per row, placing letters in their columns."""
    cpos = _column_positions(shape)
    ncols = len(shape.columns)
    row_cols = [[cpos[j] for j in range(a, b + 1)] for (a, b) in shape.rows]
    out: dict = defaultdict(int)
    choices = [list(w) for w in row_words]
    for combo in product(*choices):
        cols: list[list[int]] = [[] for _ in range(ncols)]
        coef = 1
        for (word, c), rc in zip(combo, row_cols):
            coef *= c
            for pos, letter in zip(rc, word):
                cols[pos].append(letter)
        key, sign = normalize_key(cols, kind)
        if sign:
            out[key] += sign * coef
    return {k: mpq(v) for k, v in out.items() if v}


def d_map(shape, n: int, t: Tableau) -> dict:
    """Image of ``X_T`` in ``Sym_{lam'/mu'}(V_n)``: antisymmetrise rows, multiply down columns."""
    shape = as_shape(shape)
    _check_tableau(shape, n, t)
    if any(len(set(r)) != len(r) for r in t.rows):
        return {}
    return _distribute(shape, [signed_permutations(r) for r in t.rows], SYM)


def dprime_map(shape, n: int, t: Tableau) -> dict:
    """Image of ``Y_T`` in ``Lambda^{lam'/mu'}(V_n)``: expand each row into distinct sequences, wedge down columns."""
    shape = as_shape(shape)
    _check_tableau(shape, n, t)
    return _distribute(shape, [[(w, 1) for w in distinct_rearrangements(r)] for r in t.rows], EXT)


def key_weight(key: Key, n: int) -> tuple[int, ...]:
    alpha = [0] * n
    for col in key:
        for x in col:
            alpha[x - 1] += 1
    return tuple(alpha)


def vector_weight(v: Mapping, n: int) -> tuple[int, ...] | None:
    for k in v:
        return key_weight(k, n)
    return None


def substitute(v: Mapping, kind: str, images: Callable[[int], Sequence[tuple[int, mpq]]]) -> dict:
    """Apply a linear map of V letterwise: ``e_a -> sum c e_b`` for ``(b, c)`` in ``images(a)``."""
    out: dict = {}
    for key, coef in v.items():
        per_col = []
        for col in key:
            per_col.append(list(product(*(images(a) for a in col))))
        for combo in product(*per_col):
            c = coef
            cols = []
            for letters in combo:
                for _, x in letters:
                    c = c * x
                cols.append([b for b, _ in letters])
            nk, sign = normalize_key(cols, kind)
            if sign and c:
                nv = out.get(nk, 0) + sign * c
                if nv:
                    out[nk] = nv
                else:
                    out.pop(nk, None)
    return out


def substitute_partial(v: Mapping, kind: str, p: PartialTransformation) -> dict:
    """Fast path of :func:`substitute` for a partial map (each letter goes to one letter or to 0)."""
    imgs = p.images
    out: dict = {}
    for key, coef in v.items():
        cols = []
        dead = False
        for col in key:
            mapped = []
            for a in col:
                b = imgs[a - 1]
                if b is None:
                    dead = True
                    break
                mapped.append(b)
            if dead:
                break
            cols.append(mapped)
        if dead:
            continue
        nk, sign = normalize_key(cols, kind)
        if sign:
            nv = out.get(nk, 0) + sign * coef
            if nv:
                out[nk] = nv
            else:
                out.pop(nk, None)
    return out


def _letter_images(g) -> Callable[[int], list[tuple[int, mpq]]]:
    m = g if isinstance(g, RationalMatrix) else RationalMatrix.from_dense(g)
    cols = m.columns()
    table = {a + 1: sorted((i + 1, x) for i, x in col.items()) for a, col in enumerate(cols)}
    return lambda a: table[a]


def as_element(g, n: int):
    """Normalise an acting element: PartialTransformation, image tuple, or matrix."""
    if isinstance(g, PartialTransformation):
        if g.n != n:
            raise ValueError(f"element acts on [{g.n}], module needs [{n}]")
        return g
    if isinstance(g, RationalMatrix):
        if (g.nrows, g.ncols) != (n, n):
            raise ValueError(f"matrix must be {n}x{n}")
        return g
    if isinstance(g, str):
        return as_element(PartialTransformation.parse(g), n)
    g = list(g)
    if g and isinstance(g[0], (list, tuple)):
        return as_element(RationalMatrix.from_dense(g), n)
    return as_element(PartialTransformation(tuple(g)), n)


# -- modules -----------------------------------------------------------------

class LabeledModule:
    """A polynomial ``M_n``-module of degree ``r`` with a labelled weight basis.

    Subclasses provide ``labels``, ``weights``, ``dim`` and :meth:`act`.
    """

    n: int
    degree: int
    labels: list
    weights: list[tuple[int, ...]]
    name: str = "module"

    @property
    def dim(self) -> int:
        return len(self.labels)

    def act(self, g, columns: Sequence[int] | None = None) -> RationalMatrix:
        raise NotImplementedError

    def weight_indices(self, pred: Callable[[tuple[int, ...]], bool]) -> list[int]:
        return [k for k, w in enumerate(self.weights) if pred(w)]

    def weight_component(self, pred: Callable[[tuple[int, ...]], bool]) -> Subspace:
        """Span of the basis vectors whose weight satisfies ``pred`` (coordinate subspace)."""
        return Subspace(self.dim, [{k: mpq(1)} for k in self.weight_indices(pred)])

    def prime_component(self) -> Subspace:
        return self.weight_component(is_zero_one)

    def double_prime_component(self) -> Subspace:
        return self.weight_component(has_repeat)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name}, n={self.n}, dim={self.dim})"


class TableauModule(LabeledModule):
    """``L_{shape}(V_n)`` (family ``"L"``) or ``K_{shape}(V_n)`` (family ``"K"``)."""

    def __init__(self, shape, n: int, family: str = "L", verify: bool = True):
        shape = as_shape(shape)
        if family not in ("L", "K"):
            raise ValueError("family must be 'L' or 'K'")
        self.shape = shape
        self.n = n
        self.degree = shape.size()
        self.family = family
        self.kind = SYM if family == "L" else EXT
        self.name = f"{family}_{shape}(V_{n})"
        tkind = "semistandard" if family == "L" else "co_semistandard"
        self.labels = enumerate_tableaux(shape, n, tkind)
        self.vectors = [self.image(t) for t in self.labels]
        self.weights = [t.weight(n) for t in self.labels]
        self._blocks: dict[tuple, list[int]] = defaultdict(list)
        for k, w in enumerate(self.weights):
            self._blocks[w].append(k)
        self._solvers: dict[tuple, Solver] = {}
        self._index = {t: k for k, t in enumerate(self.labels)}
        if verify:
            for w in self._blocks:
                if not self._solver(w).independent:
                    raise BasisViolation(f"{self.name}: basis images of weight {w} are dependent")

    def image(self, t: Tableau) -> dict:
        return d_map(self.shape, self.n, t) if self.family == "L" else dprime_map(self.shape, self.n, t)

    def index(self, t: Tableau) -> int:
        return self._index[t]

    def _solver(self, w: tuple) -> Solver:
        s = self._solvers.get(w)
        if s is None:
            s = Solver([self.vectors[k] for k in self._blocks.get(w, [])])
            self._solvers[w] = s
        return s

    def coords(self, v: Mapping) -> dict | None:
        """Coordinates of an ambient vector on the basis; ``None`` when outside the module."""
        if not v:
            return {}
        w = vector_weight(v, self.n)
        block = self._blocks.get(w)
        local = None if block is None else self._solver(w).solve_sparse(v)
        if local is not None:
            return {block[i]: x for i, x in local.items()}
        # possibly a sum of several weight vectors
        pieces: dict = defaultdict(dict)
        for k, x in v.items():
            pieces[key_weight(k, self.n)][k] = x
        if len(pieces) == 1:
            return None
        out: dict = {}
        for piece in pieces.values():
            c = self.coords(piece)
            if c is None:
                return None
            axpy(out, 1, c)
        return out

    def straighten(self, t: Tableau) -> dict[Tableau, mpq]:
        """Coefficients of the image of an arbitrary tableau on the standard basis."""
        v = self.image(t)
        c = self.coords(v)
        if c is None:
            raise BasisViolation(f"{self.name}: image of {t} is outside the span of the basis")
        w = t.weight(self.n)
        out = {}
        for k, x in c.items():
            if self.weights[k] != w:
                raise BasisViolation(f"straightening of {t} changed weight")
            out[self.labels[k]] = x
        return out

    def apply(self, g, v: Mapping) -> dict:
        g = as_element(g, self.n)
        if isinstance(g, PartialTransformation):
            return substitute_partial(v, self.kind, g)
        return substitute(v, self.kind, _letter_images(g))

    def act(self, g, columns: Sequence[int] | None = None) -> RationalMatrix:
        """Matrix of ``g`` on the basis (only the listed columns are filled when ``columns`` is given)."""
        g = as_element(g, self.n)
        cols = range(self.dim) if columns is None else columns
        out: list[dict] = [{} for _ in range(self.dim)]
        for k in cols:
            img = self.apply(g, self.vectors[k])
            c = self.coords(img)
            if c is None:
                raise NotInvariant(f"{self.name}: image of basis vector {k} under {g} left the module")
            out[k] = c
        return RationalMatrix.from_columns(self.dim, out)


def _cache_token(shape: SkewShape, n: int, family: str) -> dict:
    return {"object": "tableau-module", "shape": str(shape), "n": n, "family": family,
            "convention": "rows-strict-sst;dual-basis-divided-powers"}


@lru_cache(maxsize=None)
def _build(shape: SkewShape, n: int, family: str) -> TableauModule:
    token = _cache_token(shape, n, family)
    hit = cache.load(token)
    if hit is not None:
        mod = TableauModule(shape, n, family, verify=False)
        if hit.get("labels") == [t.to_json() for t in mod.labels]:
            return mod
    mod = TableauModule(shape, n, family, verify=True)
    cache.store(token, {"dim": mod.dim, "labels": [t.to_json() for t in mod.labels]})
    return mod


def build_schur_module(shape, n: int) -> TableauModule:
    """``L_{shape}(V_n)`` with basis ``d(X_T)``, ``T`` semistandard; fails loudly on dependence."""
    return _build(as_shape(shape), n, "L")


def build_weyl_module(shape, n: int) -> TableauModule:
    """``K_{shape}(V_n)`` with basis ``d'(Y_T)``, ``T`` co-semistandard."""
    return _build(as_shape(shape), n, "K")


def symmetric_power(k: int, n: int) -> TableauModule:
    """``Sym_k(V_n) = L_{(1^k)}(V_n)``."""
    return build_schur_module(Partition([1] * k), n)


def divided_power(k: int, n: int) -> TableauModule:
    """``D_k(V_n) = K_{(k)}(V_n)``."""
    return build_weyl_module(Partition([k] if k else []), n)


def exterior_power(k: int, n: int) -> TableauModule:
    """``Lambda^k(V_n) = L_{(k)}(V_n)``."""
    return build_schur_module(Partition([k] if k else []), n)


def straighten(shape, n: int, t: Tableau) -> dict[Tableau, mpq]:
    return build_schur_module(shape, n).straighten(t)


def act(module: LabeledModule, g) -> RationalMatrix:
    return module.act(g)


def weight_component(module: LabeledModule, pred) -> Subspace:
    return module.weight_component(pred)


def image_rank(shape, n: int, family: str = "L") -> int:
    """Rank of the images of *all* tableaux (with entries in [n]), computed weight by weight."""
    shape = as_shape(shape)
    f = d_map if family == "L" else dprime_map
    blocks: dict[tuple, Echelon] = defaultdict(Echelon)
    for t in iter_tableaux(shape, n, "all"):
        if family == "L" and any(len(set(r)) != len(r) for r in t.rows):
            continue
        v = f(shape, n, t)
        if v:
            blocks[t.weight(n)].add(v)
    return sum(e.rank for e in blocks.values())


# -- tensor products ---------------------------------------------------------

class TensorModule(LabeledModule):
    """``A ⊗ B`` with the diagonal action ``g(a ⊗ b) = ga ⊗ gb``."""

    def __init__(self, a: LabeledModule, b: LabeledModule):
        if a.n != b.n:
            raise ValueError("tensor factors must have the same n")
        self.a, self.b = a, b
        self.n = a.n
        self.degree = a.degree + b.degree
        self.name = f"{a.name}⊗{b.name}"
        self.labels = [(x, y) for x in a.labels for y in b.labels]
        self.weights = [tuple(p + q for p, q in zip(wa, wb)) for wa in a.weights for wb in b.weights]

    def act(self, g, columns: Sequence[int] | None = None) -> RationalMatrix:
        ma, mb = self.a.act(g), self.b.act(g)
        return kron(ma, mb)

    def weight_space_trace(self, g, weight: tuple[int, ...]) -> mpq:
        """Trace of ``g`` on one weight space; ``g`` must preserve it (e.g. a permutation fixing ``weight``)."""
        ia = defaultdict(list)
        for j, wb in enumerate(self.b.weights):
            ia[wb].append(j)
        ma, mb = self.a.act(g), self.b.act(g)
        total = mpq(0)
        for i, wa in enumerate(self.a.weights):
            need = tuple(x - y for x, y in zip(weight, wa))
            if min(need) < 0:
                continue
            for j in ia.get(need, ()):
                total += ma[i, i] * mb[j, j]
        return total

    def weight_space_dim(self, weight: tuple[int, ...]) -> int:
        return sum(1 for w in self.weights if w == weight)


def kron(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    rows = []
    for ra in a.rows:
        for rb in b.rows:
            row = {}
            for i, x in ra.items():
                for j, y in rb.items():
                    row[i * b.ncols + j] = x * y
            rows.append(row)
    return RationalMatrix(a.nrows * b.nrows, a.ncols * b.ncols, rows)


# -- GL branching filtration ---------------------------------------------------

def eta(t: Tableau, s: int) -> tuple[int, ...]:
    """``eta(T)_i`` = inner part of row ``i`` plus the number of entries of row ``i`` lying in ``[s]``."""
    inner = t.shape.inner
    return tuple(inner[i] + sum(1 for x in row if x <= s) for i, row in enumerate(t.rows))


def _lex_ge(a: Sequence[int], b: Sequence[int]) -> bool:
    k = max(len(a), len(b))
    a = tuple(a) + (0,) * (k - len(a))
    b = tuple(b) + (0,) * (k - len(b))
    return a >= b


def row_strict_tableaux(shape, n: int) -> list[Tableau]:
    """Tableaux whose rows are strictly increasing (columns unconstrained)."""
    return enumerate_tableaux(shape, n, "row_strict")


@dataclass
class FiltrationStep:
    nu: Partition
    subspace: Subspace          # M_nu in basis coordinates of the module
    dot: Subspace               # sum of M_xi over xi > nu
    quotient_dim: int
    expected_dim: int


@dataclass
class GLFiltration:
    module: TableauModule
    s: int
    steps: list[FiltrationStep] = field(default_factory=list)

    def is_chain(self) -> bool:
        subs = [st.subspace for st in self.steps]
        return all(b.contains_subspace(a) for a, b in zip(subs, subs[1:]))

    def dims_match(self) -> bool:
        return all(st.quotient_dim == st.expected_dim for st in self.steps)


def gl_branching_filtration(shape, n: int, s: int) -> GLFiltration:
    """The chain ``M_nu`` of ``L_shape(V_n)`` for ``V_n = <e_1..e_s> ⊕ <e_{s+1}..e_n>``.

    Steps are listed from the largest ``nu`` (smallest subspace) to the inner
    shape (whole module).  ``expected_dim`` is ``|SST_{nu/inner}([s])| *
    |SST_{outer/nu}([n-s])|``.
    """
    from .partitions import subpartitions

    shape = as_shape(shape)
    if not 1 <= s < n:
        raise ValueError(f"need 1 <= s < n, got s={s}, n={n}")
    mod = build_schur_module(shape, n)
    rho, kappa = shape.inner, shape.outer
    tabs = []
    for t in row_strict_tableaux(shape, n):
        c = mod.coords(d_map(shape, n, t))
        if c is None:
            raise BasisViolation(f"d-image of {t} outside the span of the semistandard images")
        if c:
            tabs.append((eta(t, s), c))
    nus = sorted((nu for nu in subpartitions(kappa) if nu.contains(rho)), key=lambda p: p.parts, reverse=True)
    spans: dict[Partition, Subspace] = {}
    for nu in nus:
        spans[nu] = Subspace(mod.dim, [c for e, c in tabs if _lex_ge(e, nu.parts)])
    filt = GLFiltration(mod, s)
    for nu in nus:
        larger = [spans[xi] for xi in nus if xi.parts > nu.parts]
        dot = Subspace(mod.dim, [b for sp in larger for b in sp.basis])
        q = spans[nu].dim - dot.dim
        exp = count_sst(SkewShape(nu, rho), s) * count_sst(SkewShape(kappa, nu), n - s)
        filt.steps.append(FiltrationStep(nu, spans[nu], dot, q, exp))
    return filt


# -- L_lam(U_m) ----------------------------------------------------------------

class QuotientModule(LabeledModule):
    """``base / sub`` with the induced action on chosen representative basis vectors."""

    def __init__(self, base: LabeledModule, sub: Subspace, name: str):
        from .linalg import QuotientCoordinates

        self.base = base
        self.sub = sub
        self.n = base.n
        self.degree = base.degree
        self.name = name
        unit = [{k: mpq(1)} for k in range(base.dim)]
        self.q = QuotientCoordinates(sub.basis, unit)
        self.rep_indices = [min(v) for v in self.q.reps]
        self.labels = [base.labels[k] for k in self.rep_indices]
        self.weights = [base.weights[k] for k in self.rep_indices]

    def act(self, g, columns=None) -> RationalMatrix:
        m = self.base.act(g)
        out = self.q.matrix_of(m.apply)
        if out is None:
            raise NotInvariant(f"{self.name}: action leaves the ambient")
        return out

    def is_sub_stable(self, g) -> bool:
        return self.sub.is_invariant(self.base.act(g))


def _standard_relation_vectors(lam: Partition, m: int) -> list[dict]:
    """Ambient vectors ``sum_u d(T_{i,j}[u])``: rows other than the chosen cell strictly increasing."""
    shape = as_shape(lam)
    out = []
    cells = shape.cells
    lens = shape.row_lengths()
    for ci, cj in cells:
        others = [k - (1 if i + 1 == ci else 0) for i, k in enumerate(lens)]
        pos = cj - shape.inner[ci - 1] - 1
        per_row = [list(combinations(range(1, m + 1), k)) for k in others]
        for choice in product(*per_row):
            total: dict = {}
            for u in range(1, m + 1):
                rows = [list(r) for r in choice]
                rows[ci - 1].insert(pos, u)
                t = Tableau.from_rows(shape, rows)
                axpy(total, 1, d_map(shape, m, t))
            if total:
                out.append(total)
    return out


@lru_cache(maxsize=None)
def build_standard_schur_module(lam, m: int) -> QuotientModule:
    """``L_lam(U_m)`` realised as ``L_lam(V_m) / W_lam``, an ``S_m``-module."""
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    base = build_schur_module(lam, m)
    rel = []
    for v in _standard_relation_vectors(lam, m):
        c = base.coords(v)
        if c is None:
            raise BasisViolation("relation vector outside the Schur module")
        rel.append(c)
    w = Subspace(base.dim, rel)
    return QuotientModule(base, w, f"L_{lam}(U_{m})")
