import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from monoidtab.characters import specht_character
from monoidtab.functor import (FiberModule, build_R_module, expected_R_dim, induced_module, restrict_to_symmetric_group,
                               restricted_character, symmetrized_functor, induced_isomorphism_check, functor_tensor_check)
from monoidtab.monoids import PartialTransformation, enumerate_monoid, generators
from monoidtab.partitions import Partition, enumerate_partitions
from monoidtab.schur import build_schur_module, build_weyl_module, exterior_power, symmetric_power

KINDS = ["IS", "PT", "T"]


def test_exterior_square_over_rook_monoid():
    g = symmetrized_functor(build_schur_module((2,), 3), "IS")
    assert g.dim == 3 == build_R_module("IS", 3, (1, 1)).dim


def test_collapse_kills_product_of_two_letters():
    g = symmetrized_functor(symmetric_power(2, 2), "T")
    assert g.dim == 1
    assert g.act(PartialTransformation((1, 1))).is_zero()
    assert g.act(PartialTransformation((1, 2))).to_lists() == [[1]]


@pytest.mark.parametrize("kind,n,lam,variant,dim", [
    ("IS", 3, (2, 1), "upper", 2), ("IS", 4, (2,), "upper", 6), ("IS", 2, (3,), "upper", 0),
    ("T", 3, (2, 1), "lower", 2), ("PT", 4, (1, 1), "lower", 6),
])
def test_R_dims(kind, n, lam, variant, dim):
    assert build_R_module(kind, n, lam, variant).dim == dim


def test_swap_permutes_two_cosets():
    m = build_R_module("IS", 2, (1,))
    [(t, mat)] = restrict_to_symmetric_group(m)
    assert mat.to_lists() == [[0, 1], [1, 0]]


def test_square_case_gives_specht_character():
    ch = restricted_character(build_R_module("IS", 3, (2, 1)))
    assert ch == specht_character(Partition((2, 1))).as_dict()


@pytest.mark.parametrize("module", [exterior_power(2, 3), symmetric_power(2, 3), build_schur_module((2, 1), 3)],
                         ids=lambda m: m.name)
def test_symmetrised_functor_against_tensor_products(module):
    rep = functor_tensor_check(module, 3)
    assert rep.ok
    assert rep.data["F_dim"] == rep.data["Sym_dim"] == rep.data["D_dim"]


def test_exterior_square_functor_dims():
    rep = functor_tensor_check(exterior_power(2, 3), 3)
    assert rep.data["F_dim"] == 3


def test_induced_from_trivial_fiber():
    ind = induced_module("IS", 3, FiberModule.trivial(2))
    assert ind.dim == 3


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("n", [2, 3])
def test_induced_module_isomorphism(kind, n):
    for r in range(0, n + 1):
        for lam in enumerate_partitions(r):
            assert induced_isomorphism_check(kind, n, lam).ok


def test_induced_characters_match_on_all_of_rook_monoid():
    lam = Partition((2,))
    g_mod = build_R_module("IS", 3, lam)
    ind = induced_module("IS", 3, FiberModule.schur_functor_of(g_mod.base))
    for a in enumerate_monoid("IS", 3):
        assert ind.act(a).trace() == g_mod.act(a).trace()


@pytest.mark.parametrize("kind", KINDS)
def test_R_modules_are_representations(kind):
    rng = random.Random(7)
    elems = enumerate_monoid(kind, 3)
    for r in range(0, 4):
        for lam in enumerate_partitions(r):
            for variant in ("upper", "lower"):
                m = build_R_module(kind, 3, lam, variant)
                assert m.dim == expected_R_dim(3, lam)
                for _ in range(50):
                    a, b = rng.choice(elems), rng.choice(elems)
                    assert m.act(a * b) == m.act(a) @ m.act(b)


@pytest.mark.parametrize("n", [2, 3])
def test_low_rank_elements_act_by_zero_on_columns(n):
    for r in range(1, n + 1):
        m = build_R_module("T", n, (1,) * r)
        for a in enumerate_monoid("T", n):
            if a.rank() < r:
                assert m.act(a).is_zero()


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n))),
       st.data())
def test_upper_and_lower_have_equal_characters(nr, data):
    n, r = nr
    lam = data.draw(st.sampled_from(enumerate_partitions(r)))
    up, low = build_R_module("IS", n, lam, "upper"), build_R_module("IS", n, lam, "lower")
    assert up.dim == low.dim == expected_R_dim(n, lam)
    assert restricted_character(up) == restricted_character(low)
