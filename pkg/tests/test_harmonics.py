import pytest
from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from monoidtab.cauchy import SparsePolynomial, monomials, poly_mul
from monoidtab.harmonics import (AssociatedGraded, PointLocus, associated_graded, associated_graded_slice,
                                 check_gr_equals_J, hilbert_function, translate, vanishing_ideal_upto)
from monoidtab.linalg import RationalMatrix
from monoidtab.monoids import PartialTransformation, cardinality_formula, enumerate_monoid


def poly(n, **coeffs):
    """Build a polynomial from names like x11, x11x21 (squares as x11x11), const."""
    terms = {}
    for name, c in coeffs.items():
        e = [0] * (n * n)
        if name != "const":
            for k in range(1, len(name), 3):
                i, j = int(name[k]), int(name[k + 1])
                e[(i - 1) * n + (j - 1)] += 1
        terms[tuple(e)] = mpq(c)
    return SparsePolynomial(n, n, terms)


def test_single_point_locus():
    locus = PointLocus(2, [PartialTransformation.identity(2)])
    assert vanishing_ideal_upto(locus, 1).dim == 5 - 1


def test_idempotent_relation_in_one_variable():
    locus = PointLocus.of("IS", 1)
    assert vanishing_ideal_upto(locus, 2).contains(poly(1, x11x11=1, x11=-1))
    sl = associated_graded_slice(locus, 2)
    assert [b.terms for b in sl.basis] == [{(2,): 1}]


def test_column_sums_on_full_transformations():
    locus = PointLocus.of("T", 2)
    space = vanishing_ideal_upto(locus, 1)
    assert space.contains(poly(2, x11=1, x21=1, const=-1))
    assert space.contains(poly(2, x12=1, x22=1, const=-1))
    sl = associated_graded_slice(locus, 1)
    assert sl.dim == 2
    ag = AssociatedGraded(locus)
    assert ag.contains(poly(2, x11=1, x21=1).terms, 1)
    assert not ag.contains(poly(2, x11=1).terms, 1)


def test_constants_never_vanish():
    for kind in ("IS", "PT", "T"):
        assert associated_graded(kind, 2).slice_dim(0) == 0


@pytest.mark.parametrize("kind,n,hilbert", [
    ("IS", 1, [1, 1]), ("PT", 1, [1, 1]), ("T", 1, [1]),
    ("IS", 2, [1, 4, 2]), ("PT", 2, [1, 4, 4]), ("T", 2, [1, 2, 1]),
    ("IS", 3, [1, 9, 18, 6]), ("PT", 3, [1, 9, 27, 27]), ("T", 3, [1, 6, 12, 8]),
])
def test_hilbert_functions(kind, n, hilbert):
    assert hilbert_function(kind, n) == hilbert
    assert sum(hilbert) == cardinality_formula(kind, n)


@pytest.mark.parametrize("kind", ["IS", "PT", "T"])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_gr_equals_J(kind, n):
    rep = check_gr_equals_J(kind, n)
    assert rep.ok and rep.data["total"] == len(enumerate_monoid(kind, n))


def test_rook_two_example():
    rep = check_gr_equals_J("IS", 2, dmax=4)
    assert rep.ok and rep.data["hilbert"] == [1, 4, 2] and rep.data["total"] == 7


@pytest.mark.parametrize("kind", ["IS", "PT", "T"])
@pytest.mark.parametrize("d", [0, 1, 2])
def test_slices_are_ideals(kind, d):
    n = 2
    ag = associated_graded(kind, n)
    for b in ag.slice(d).basis:
        for v in range(n * n):
            e = [0] * (n * n)
            e[v] = 1
            assert ag.contains(poly_mul({tuple(e): mpq(1)}, b.terms), d + 1)


@settings(max_examples=15)
@given(st.sampled_from(["IS", "PT", "T"]), st.integers(1, 3),
       st.lists(st.integers(-2, 2), min_size=4, max_size=4), st.lists(st.integers(-2, 2), min_size=4, max_size=4))
def test_translation_action_is_multiplicative(kind, d, a, b):
    n = 2
    A = RationalMatrix.from_dense([a[:2], a[2:]])
    B = RationalMatrix.from_dense([b[:2], b[2:]])
    f = {mono: mpq(1) for mono in monomials(4, d)[:3]}
    g = {monomials(4, 1)[0]: mpq(1)}
    assert SparsePolynomial(n, n, translate(poly_mul(f, g), n, A, B)) == \
        SparsePolynomial(n, n, poly_mul(translate(f, n, A, B), translate(g, n, A, B)))


def test_translation_preserves_vanishing():
    # f(x) vanishes on the locus, so f(A x B) does too when A, B come from the monoid
    locus = PointLocus.of("PT", 2)
    space = vanishing_ideal_upto(locus, 2)
    for p in enumerate_monoid("PT", 2):
        for f in space.basis[:6]:
            moved = translate(f.terms, 2, p.matrix(), RationalMatrix.identity(2))
            assert not locus.evaluate(moved)


def test_duplicate_points_rejected():
    with pytest.raises(ValueError):
        PointLocus(1, [PartialTransformation.identity(1)] * 2)
