from itertools import product
from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from monoidtab.monoids import (MonoidKind, PartialTransformation, block_embed, cardinality_formula, closure,
                               cycle_type, cycle_type_representative, enumerate_monoid, generators, matrix_of,
                               transposition)

KINDS = ["IS", "PT", "T"]


def _brute_size(kind: str, n: int) -> int:
    count = 0
    for imgs in product([None, *range(1, n + 1)], repeat=n):
        p = PartialTransformation(imgs)
        count += p.belongs_to(kind)
    return count


@pytest.mark.parametrize("kind,n,size", [("IS", 2, 7), ("PT", 2, 9), ("T", 1, 1), ("IS", 3, 34), ("PT", 3, 64),
                                         ("T", 3, 27)])
def test_sizes(kind, n, size):
    assert len(enumerate_monoid(kind, n)) == size == cardinality_formula(kind, n)


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("n", [1, 2, 3])
def test_enumeration_against_brute_force(kind, n):
    assert len(enumerate_monoid(kind, n)) == _brute_size(kind, n)


def test_closed_forms():
    for n in range(1, 6):
        assert cardinality_formula("IS", n) == sum(comb(n, r) ** 2 * factorial(r) for r in range(n + 1))
        assert cardinality_formula("PT", n) == (n + 1) ** n
        assert cardinality_formula("T", n) == n ** n


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("n", [1, 2, 3])
def test_generators_generate(kind, n):
    assert closure(generators(kind, n), n) == set(enumerate_monoid(kind, n))


def test_matrix_of_partial_map():
    p = PartialTransformation.parse("2,-")
    assert matrix_of(p).to_lists() == [[0, 0], [1, 0]]


def test_parse_round_trip_and_errors():
    assert str(PartialTransformation.parse("2,-,1")) == "2,-,1"
    with pytest.raises(ValueError):
        PartialTransformation.parse("4,1,1")
    with pytest.raises(ValueError):
        PartialTransformation.parse("a,1")
    with pytest.raises(ValueError):
        MonoidKind.parse("xyz")


def test_block_embed():
    swap = transposition(2, 1, 2)
    assert str(block_embed(PartialTransformation.identity(1), swap)) == "1,3,2"


def test_cycle_types():
    assert cycle_type(cycle_type_representative((2, 1))) == (2, 1)
    assert cycle_type(PartialTransformation.identity(3)) == (1, 1, 1)


def elements(n):
    return st.lists(st.one_of(st.none(), st.integers(1, n)), min_size=n, max_size=n).map(
        lambda xs: PartialTransformation(tuple(xs)))


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(elements(n), elements(n), elements(n))))
def test_composition_associative_and_matrix_homomorphism(abc):
    a, b, c = abc
    assert (a * b) * c == a * (b * c)
    assert matrix_of(a * b) == matrix_of(a) @ matrix_of(b)


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(elements(n), elements(n))))
def test_kinds_closed_under_composition(ab):
    a, b = ab
    for kind in KINDS:
        if a.belongs_to(kind) and b.belongs_to(kind):
            assert (a * b).belongs_to(kind)
