import sympy
from gmpy2 import mpq
from hypothesis import given
from hypothesis import strategies as st

from monoidtab.linalg import (Echelon, QuotientCoordinates, RationalMatrix, Subspace, bareiss_det, bareiss_rank,
                              express_in_basis, kernel, rref)

entries = st.integers(-3, 3)


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    return [[draw(entries) for _ in range(c)] for _ in range(r)]


def test_rank_one_rref():
    m, rank = rref(RationalMatrix.from_dense([[1, 2], [2, 4]]))
    assert rank == 1
    assert m.to_lists() == [[1, 2], [0, 0]]


def test_kernel_of_row_of_ones():
    k = kernel(RationalMatrix.from_dense([[1, 1, 1]]))
    assert k.dim == 2
    assert all(sum(v.values()) == 0 for v in k.basis)


def test_express_outside_span_is_none():
    basis = [{0: mpq(1)}, {1: mpq(1)}]
    assert express_in_basis({0: mpq(2), 1: mpq(-1)}, basis) == [2, -1]
    assert express_in_basis({2: mpq(1)}, basis) is None


def test_quotient_coordinates_shift():
    # W = Q^2, U = span(e0); the map e0 -> e1, e1 -> e0 does not preserve U
    q = QuotientCoordinates([{0: mpq(1)}], [{0: mpq(1)}, {1: mpq(1)}])
    assert q.dim == 1
    m = q.matrix_of(lambda v: {1 - k: x for k, x in v.items()})
    assert m.to_lists() == [[0]]


@given(matrices())
def test_rank_matches_sympy_and_bareiss(rows):
    m = RationalMatrix.from_dense(rows)
    expected = sympy.Matrix(rows).rank()
    assert m.rank() == expected
    assert bareiss_rank(m) == expected
    assert m.transpose().rank() == expected


@given(matrices())
def test_rref_matches_sympy(rows):
    ours, _ = rref(RationalMatrix.from_dense(rows))
    theirs, _ = sympy.Matrix(rows).rref()
    assert [[sympy.Rational(int(x.numerator), int(x.denominator)) for x in r] for r in ours.to_dense()] == \
        theirs.tolist()


@given(matrices())
def test_rref_is_idempotent(rows):
    once, _ = rref(RationalMatrix.from_dense(rows))
    twice, _ = rref(once)
    assert once.to_lists() == twice.to_lists()


@given(matrices())
def test_rank_nullity(rows):
    m = RationalMatrix.from_dense(rows)
    k = kernel(m)
    assert k.dim + m.rank() == m.ncols
    for v in k.basis:
        assert not m.apply(v)


@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(entries, min_size=n, max_size=n),
                                                     min_size=n, max_size=n)))
def test_bareiss_det_matches_sympy(rows):
    assert bareiss_det(RationalMatrix.from_dense(rows)) == sympy.Matrix(rows).det()


@given(matrices(4, 5), matrices(4, 5))
def test_grassmann_formula(a, b):
    width = max(len(a[0]), len(b[0]))
    pad = lambda rows: [{j: mpq(x) for j, x in enumerate(r) if x} for r in rows]
    U, W = Subspace(width, pad(a)), Subspace(width, pad(b))
    assert U.sum(W).dim + U.intersection(W).dim == U.dim + W.dim
    assert U.contains_subspace(U.intersection(W))
    assert U.sum(W).contains_subspace(W)


@given(matrices(), st.lists(entries, min_size=5, max_size=5))
def test_echelon_membership(rows, coeffs):
    e = Echelon()
    vecs = [{j: mpq(x) for j, x in enumerate(r) if x} for r in rows]
    for v in vecs:
        e.add(v)
    combo = {}
    for c, v in zip(coeffs, vecs):
        for k, x in v.items():
            combo[k] = combo.get(k, 0) + c * x
    assert e.contains({k: x for k, x in combo.items() if x})
    assert e.rank == sympy.Matrix(rows).rank()


@given(matrices(3, 3), matrices(3, 3))
def test_matrix_product_matches_sympy(a, b):
    k = min(len(a[0]), len(b))
    a = [r[:k] for r in a]
    b = b[:k]
    prod = RationalMatrix.from_dense(a) @ RationalMatrix.from_dense(b)
    assert prod.to_lists() == (sympy.Matrix(a) * sympy.Matrix(b)).tolist()
