from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from monoidtab.cauchy import closed_form_dim
from monoidtab.skew import (ExteriorPolynomial, ext_mul, merge_sign, repeated_entry_membership, row_sum_membership,
                            skew_bitableau, skew_filtration_check, skew_ideal_generators, skew_in_ideal,
                            skew_quotient_dim, skew_chain_check, word_to_terms)
from monoidtab.tableaux import Tableau

KINDS = ["IS", "PT", "T"]
T = Tableau.from_rows


def y(m, n, i, j):
    return ExteriorPolynomial.variable(m, n, i, j)


def test_generator_examples():
    assert skew_ideal_generators("PT", 2, 1) == [y(2, 1, 1, 1) * y(2, 1, 2, 1)]
    assert set(skew_ideal_generators("T", 2, 1)) == {y(2, 1, 1, 1) * y(2, 1, 2, 1), y(2, 1, 1, 1) + y(2, 1, 2, 1)}
    assert len(skew_ideal_generators("IS", 2, 2)) == 4


def test_squares_vanish_and_variables_anticommute():
    a, b = y(2, 2, 1, 1), y(2, 2, 2, 1)
    assert (a * a).is_zero()
    assert a * b == b * a * -1


@pytest.mark.parametrize("kind,m,n,r,dim", [("IS", 2, 2, 2, 2), ("PT", 3, 2, 1, 6), ("T", 2, 2, 3, 0),
                                            ("IS", 3, 3, 5, 0)])
def test_quotient_dims(kind, m, n, r, dim):
    assert skew_quotient_dim(kind, m, n, r) == dim == closed_form_dim(kind, m, n, r)


def test_bitableau_examples():
    assert skew_bitableau(T((1,), [(2,)]), T((1,), [(1,)]), 2, 2) == y(2, 2, 2, 1)
    S = T((2,), [(1, 2)])
    assert skew_bitableau(S, S, 2, 2) == y(2, 2, 1, 1) * y(2, 2, 2, 2) + y(2, 2, 1, 2) * y(2, 2, 2, 1)
    assert skew_bitableau(T((2,), [(1, 1)]), S, 2, 2).is_zero()


def test_chain_examples():
    rep = skew_chain_check("IS", 2, 2, 2)
    assert rep.ok and [s["quotient_dim"] for s in rep.data["steps"]] == [1, 1]
    assert skew_chain_check("PT", 2, 2, 1).data["total"] == 4
    assert skew_chain_check("T", 2, 2, 2).data["total"] == 1


@pytest.mark.parametrize("m,n,r", [(2, 2, 2), (2, 3, 3), (3, 2, 4)])
def test_unquotiented_totals(m, n, r):
    rep = skew_filtration_check(m, n, r)
    assert rep.ok and rep.data["total"] == comb(m * n, r)


def test_membership_samples():
    assert repeated_entry_membership(2, 3, 30, seed=1).ok
    assert row_sum_membership(2, 3, 30, seed=1).ok


def test_row_sums_need_column_sum_generators():
    # the same sums are not all in the ideal without the degree-one generators
    assert not row_sum_membership(3, 3, 30, seed=0, kind="PT").ok
    p = y(2, 1, 1, 1) + y(2, 1, 2, 1)
    assert skew_in_ideal("T", 2, 1, p) and not skew_in_ideal("PT", 2, 1, p)


subsets = st.lists(st.integers(0, 8), max_size=4, unique=True)


@given(subsets, subsets)
def test_merge_sign_matches_sorting(a, b):
    a, b = sorted(a), sorted(b)
    got = ext_mul({tuple(a): 1}, {tuple(b): 1})
    assert got == word_to_terms(a + b)
    assert merge_sign(a, b) == (next(iter(got.values())) if got else 0)


terms = st.dictionaries(subsets.map(lambda s: tuple(sorted(s))), st.integers(-3, 3).filter(bool), max_size=3)


@given(terms, terms, terms)
def test_exterior_product_is_associative(p, q, r):
    assert ext_mul(ext_mul(p, q), r) == ext_mul(p, ext_mul(q, r))


@given(subsets, subsets)
def test_graded_commutativity(a, b):
    a, b = tuple(sorted(a)), tuple(sorted(b))
    sign = -1 if (len(a) * len(b)) % 2 else 1
    assert ext_mul({a: 1}, {b: 1}) == {k: sign * v for k, v in ext_mul({b: 1}, {a: 1}).items()}
