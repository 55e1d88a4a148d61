import pytest
from gmpy2 import mpq
from hypothesis import given
from hypothesis import strategies as st

from monoidtab.linalg import RationalMatrix
from monoidtab.monoids import PartialTransformation, symmetric_group
from monoidtab.partitions import Partition, SkewShape, enumerate_partitions, permute_weight, skew_shapes
from monoidtab.schur import (act, build_schur_module, build_standard_schur_module, build_weyl_module, d_map,
                             dprime_map, gl_branching_filtration, image_rank, straighten, weight_component)
from monoidtab.tableaux import Tableau, count_csst, count_sst

T = Tableau.from_rows


def test_d_map_column():
    assert d_map((1, 1), 3, T((1, 1), [(1,), (3,)])) == {((1, 3),): 1}


def test_d_map_row_is_antisymmetric():
    assert d_map((2,), 2, T((2,), [(1, 2)])) == {((1,), (2,)): 1, ((2,), (1,)): -1}


def test_d_map_two_one():
    assert d_map((2, 1), 2, T((2, 1), [(1, 2), (1,)])) == {((1, 1), (2,)): 1, ((1, 2), (1,)): -1}


def test_d_map_vanishes_on_repeated_row():
    assert d_map((2,), 2, T((2,), [(1, 1)])) == {}


def test_dprime_map_examples():
    assert dprime_map((1, 1), 3, T((1, 1), [(1,), (2,)])) == {((1, 2),): 1}
    assert dprime_map((2,), 2, T((2,), [(1, 2)])) == {((1,), (2,)): 1, ((2,), (1,)): 1}
    assert dprime_map((2,), 2, T((2,), [(1, 1)])) == {((1,), (1,)): 1}


@pytest.mark.parametrize("shape,n,dim", [((2,), 3, 3), ((1, 1), 2, 3), ((2, 1), 3, 8), ((3,), 2, 0)])
def test_schur_dims(shape, n, dim):
    assert build_schur_module(shape, n).dim == dim


def test_straightening_examples():
    assert straighten((2,), 2, T((2,), [(2, 1)])) == {T((2,), [(1, 2)]): -1}
    assert straighten((1, 1), 2, T((1, 1), [(2,), (1,)])) == {T((1, 1), [(1,), (2,)]): 1}
    t = T((2, 1), [(1, 3), (2,)])
    assert straighten((2, 1), 3, t) == {t: 1}


def test_identity_and_zero_actions():
    m = build_schur_module((2,), 2)
    assert act(m, RationalMatrix.identity(2)) == RationalMatrix.identity(m.dim)
    assert act(m, RationalMatrix.zero(2, 2)).is_zero()


def test_diagonal_scaling():
    m = build_schur_module((2, 1), 3)
    g = RationalMatrix.from_dense([[5, 0, 0], [0, 1, 0], [0, 0, 1]])
    mat = act(m, g)
    for k, w in enumerate(m.weights):
        assert mat.column(k) == {k: mpq(5) ** w[0]}


def test_weight_components():
    a = build_schur_module((2,), 3)
    assert a.prime_component().dim == 3 and a.double_prime_component().dim == 0
    s = build_schur_module((1, 1), 2)
    assert s.prime_component().dim == 1 and s.double_prime_component().dim == 2
    assert weight_component(s, lambda w: w == (1, 1)).dim == 1


@pytest.mark.parametrize("lam,m,dim", [((1,), 3, 2), ((2,), 3, 1), ((1, 1), 3, 3), ((2, 1), 3, 2)])
def test_standard_schur_dims(lam, m, dim):
    mod = build_standard_schur_module(Partition(lam), m)
    assert mod.dim == dim == count_sst(SkewShape(Partition(lam), Partition(())), m - 1)


@pytest.mark.parametrize("lam", [(1,), (2,), (1, 1), (2, 1)])
def test_standard_relations_are_permutation_stable(lam):
    mod = build_standard_schur_module(Partition(lam), 3)
    for g in symmetric_group(3):
        assert mod.is_sub_stable(g)


def test_gl_filtration_examples():
    f = gl_branching_filtration((1,), 2, 1)
    assert [st.quotient_dim for st in f.steps] == [1, 1]
    for shape, n, s, total in [((2,), 3, 1, 3), ((2, 1), 3, 2, 8)]:
        f = gl_branching_filtration(shape, n, s)
        assert f.is_chain() and f.dims_match()
        assert sum(st.quotient_dim for st in f.steps) == total


@pytest.mark.parametrize("shape", skew_shapes(4, max_size=4), ids=str)
def test_semistandard_images_form_a_basis(shape):
    for n in range(1, 4):
        assert image_rank(shape, n, "L") == count_sst(shape, n)
        assert image_rank(shape, n, "K") == count_csst(shape, n)


@pytest.mark.parametrize("shape", [(2, 1), (2,), (1, 1, 1)], ids=str)
def test_straightening_preserves_weight(shape):
    from monoidtab.tableaux import enumerate_tableaux
    for t in enumerate_tableaux(shape, 3, "all"):
        w = t.weight(3)
        assert all(b.weight(3) == w for b in straighten(shape, 3, t))


small_matrix = st.lists(st.lists(st.integers(-2, 2), min_size=2, max_size=2), min_size=2, max_size=2)
modules = st.sampled_from([("L", (2, 1)), ("L", (1, 1)), ("K", (2,)), ("K", (2, 1)), ("L", SkewShape.parse("2,1/1"))])


@given(modules, small_matrix, small_matrix)
def test_action_is_multiplicative(mod, a, b):
    fam, shape = mod
    m = (build_schur_module if fam == "L" else build_weyl_module)(shape, 2)
    A, B = RationalMatrix.from_dense(a), RationalMatrix.from_dense(b)
    assert act(m, A @ B) == act(m, A) @ act(m, B)


@given(st.sampled_from(symmetric_group(3)), st.sampled_from([(2, 1), (1, 1), (3,)]))
def test_permutations_move_weight_spaces(sigma, shape):
    m = build_schur_module(shape, 3)
    mat = act(m, sigma)
    perm = [sigma(j) for j in range(1, 4)]
    for k, w in enumerate(m.weights):
        target = permute_weight(w, perm)
        assert all(m.weights[i] == target for i in mat.column(k))
