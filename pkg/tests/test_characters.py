from math import factorial

import pytest
from gmpy2 import mpq
from hypothesis import given
from hypothesis import strategies as st

from monoidtab.characters import (burnside_dimension, class_size, irreducibility_test, module_character,
                                  nonisomorphism_table, norton_test, specht_character, verify_symmetric_restriction, verify_block_restriction,
                                  verify_last_point_restriction, verify_irreducible)
from monoidtab.functor import FiberModule, build_R_module
from monoidtab.linalg import RationalMatrix
from monoidtab.monoids import symmetric_group
from monoidtab.partitions import Partition, SkewShape, enumerate_partitions, skew_shapes
from monoidtab.schur import build_schur_module

P = Partition


def test_trivial_sign_and_two_one():
    assert set(specht_character(P((3,))).as_dict().values()) == {1}
    sign = specht_character(P((1, 1, 1))).as_dict()
    assert sign == {P((1, 1, 1)): 1, P((2, 1)): -1, P((3,)): 1}
    assert specht_character(P((2, 1))).as_dict() == {P((1, 1, 1)): 2, P((2, 1)): 0, P((3,)): -1}


def test_permutation_character():
    ch = module_character(build_R_module("IS", 3, (2,))).as_dict()
    assert ch == {P((1, 1, 1)): 3, P((2, 1)): 1, P((3,)): 0}


@pytest.mark.parametrize("n", range(1, 7))
def test_orthonormality(n):
    chars = [specht_character(lam) for lam in enumerate_partitions(n)]
    for i, a in enumerate(chars):
        for j, b in enumerate(chars):
            assert a.inner(b) == (1 if i == j else 0)
    assert sum(class_size(rho) for rho in enumerate_partitions(n)) == factorial(n)


@pytest.mark.parametrize("lam", [lam for r in range(1, 5) for lam in enumerate_partitions(r)], ids=str)
def test_murnaghan_nakayama_against_explicit_traces(lam):
    # f(L_{lam'}(V_r)) realised as the fiber of the Schur module, traced directly
    r = lam.size()
    fiber = FiberModule.schur_functor_of(build_schur_module(lam.conjugate(), r))
    from monoidtab.monoids import cycle_type_representative
    for rho in enumerate_partitions(r):
        sigma = cycle_type_representative(rho.parts).images
        assert fiber.act(sigma).trace() == specht_character(lam).as_dict()[rho]


def test_first_branching_examples():
    assert verify_symmetric_restriction(P((2, 1)), 3).data["factors"] == ["2,1"]
    assert verify_symmetric_restriction(P((2,)), 3).data["factors"] == ["3", "2,1"]
    assert verify_symmetric_restriction(P((1,)), 2).data["factors"] == ["2", "1,1"]


def test_block_branching_examples():
    rep = verify_block_restriction("IS", (2,), 3, 1)
    assert rep.ok and [s["quotient_dim"] for s in rep.data["chain"] if s["quotient_dim"]] == [2, 1]
    rep = verify_block_restriction("IS", (2, 1), 4, 2)
    assert rep.ok and rep.data["lhs"] == 8
    rep = verify_block_restriction("T", SkewShape.parse("2/2"), 3, 1)
    assert rep.ok and rep.data["lhs"] == 1


def test_last_point_examples():
    rep = verify_last_point_restriction("IS", (2, 1), 3, structural=True)
    assert rep.ok and sorted(rep.data["expected_factors"]) == ["1,1", "2"]
    rep = verify_last_point_restriction("IS", (1,), 2, structural=True)
    assert rep.ok and sorted(rep.data["expected_factors"]) == ["0", "1"]
    rep = verify_last_point_restriction("PT", SkewShape.parse("1/1"), 2, structural=True)
    assert rep.ok and rep.data["expected_factors"] == ["1"]


@pytest.mark.parametrize("kind", ["IS", "PT", "T"])
def test_nonisomorphism_tables(kind):
    rep = nonisomorphism_table(kind, 3)
    assert rep.ok
    table = rep.data["table"]
    assert table["2 vs 1,1"] == "distinct"
    assert table["2,1 vs 2,1"] == "possibly_isomorphic"
    assert sorted(rep.data["same_symmetric_group_restriction"]) == ["0 vs 3", "1 vs 2", "2 vs 1", "3 vs 0"]
    if kind != "T":
        assert table["1 vs 2"] == "distinct"


def test_reducible_permutation_module_has_witness():
    mats = [RationalMatrix.from_dense(g.matrix().to_lists()) for g in symmetric_group(3)]
    res = norton_test(mats, 3)
    assert res.status == "reducible"
    w = res.witness
    assert 0 < w.dim < 3 and all(w.is_invariant(m) for m in mats)


def test_one_dimensional_is_irreducible():
    assert norton_test([RationalMatrix.identity(1)], 1).status == "irreducible"


@pytest.mark.parametrize("kind,lam", [("IS", lam) for r in range(4) for lam in enumerate_partitions(r)]
                         + [("T", lam) for r in range(1, 4) for lam in enumerate_partitions(r) if not lam.is_column()],
                         ids=str)
def test_irreducible_and_matches_burnside(kind, lam):
    rep = verify_irreducible(kind, 3, lam)
    assert rep.ok and rep.data["status"] == "irreducible"
    m = build_R_module(kind, 3, lam)
    assert burnside_dimension(m) == m.dim ** 2


@pytest.mark.parametrize("lam", [P((1,)), P((1, 1)), P((1, 1, 1))], ids=str)
def test_column_cases_over_full_transformations(lam):
    # no irreducibility claim here: the verdict must agree with the Burnside dimension
    m = build_R_module("T", 3, lam)
    res = irreducibility_test(m)
    assert res.status in ("irreducible", "reducible")
    assert (res.status == "irreducible") == (burnside_dimension(m) == m.dim ** 2)


@given(st.sampled_from(skew_shapes(4)), st.integers(2, 5), st.data())
def test_block_dimension_identity(shape, n, data):
    s = data.draw(st.integers(1, n - 1))
    assert verify_block_restriction("IS", shape, n, s, structural=False).ok
