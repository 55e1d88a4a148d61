from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from monoidtab.partitions import (Partition, ShapeError, SkewShape, enumerate_partitions,
                                  horizontal_strip_extensions, intermediate_partitions, skew_shapes)
from monoidtab.tableaux import (Tableau, count_csst, count_sst, count_standard, count_standard_by_corners,
                                enumerate_tableaux, sign_of_sort)

P = Partition


def test_partitions_of_three():
    assert enumerate_partitions(3) == [P((3,)), P((2, 1)), P((1, 1, 1))]


def test_partitions_bounded_length():
    assert enumerate_partitions(5, max_len=2) == [P((5,)), P((4, 1)), P((3, 2))]


@pytest.mark.parametrize("r,count", [(0, 1), (1, 1), (4, 5), (6, 11), (8, 22)])
def test_partition_counts(r, count):
    assert len(enumerate_partitions(r)) == count


def test_shape_parse_and_errors():
    s = SkewShape.parse("3,1/1")
    assert s.size() == 3
    with pytest.raises(ShapeError):
        SkewShape.parse("1/2")
    with pytest.raises(ShapeError):
        Partition.parse("1,2")


@pytest.mark.parametrize("shape,n,kind,count", [
    ((2,), 3, "semistandard", 3),
    ((1, 1), 2, "co_semistandard", 1),
    ((2, 1), 3, "standard_distinct", 2),
])
def test_tableau_enumeration(shape, n, kind, count):
    assert len(enumerate_tableaux(shape, n, kind)) == count


def test_standard_counts():
    assert count_standard((2, 1)) == 2
    assert count_standard(SkewShape.parse("2,2/1")) == 2
    assert count_standard((3, 2)) == 5


def test_horizontal_strips():
    assert horizontal_strip_extensions(P((2,)), 3) == [P((3,)), P((2, 1))]
    assert horizontal_strip_extensions(P((1,)), 3) == [P((3,)), P((2, 1))]


def test_intermediate_partitions():
    assert intermediate_partitions(P((2,)), P(()), 1, 3) == [P(()), P((1,))]
    # (1) is excluded: |(2,1)/(1)| = 2 exceeds n - s = 1
    assert intermediate_partitions(P((2, 1)), P((1,)), 2, 3) == [P((2,)), P((1, 1)), P((2, 1))]
    assert intermediate_partitions(P((2, 1)), P((1,)), 2, 4) == [P((1,)), P((2,)), P((1, 1)), P((2, 1))]
    assert intermediate_partitions(P((2,)), P((2,)), 1, 3) == [P((2,))]


def test_sort_sign():
    assert sign_of_sort((1, 2, 3)) == 1
    assert sign_of_sort((2, 1, 3)) == -1
    assert sign_of_sort((1, 1)) == 0


small_partitions = st.integers(0, 7).flatmap(lambda r: st.sampled_from(enumerate_partitions(r)))


@given(small_partitions)
def test_conjugation_is_involution(lam):
    assert lam.conjugate().conjugate() == lam
    assert lam.conjugate().size() == lam.size()


@given(st.integers(0, 7))
def test_sum_of_squares_of_standard_counts(r):
    assert sum(count_standard(lam) ** 2 for lam in enumerate_partitions(r)) == factorial(r)


@given(st.sampled_from(skew_shapes(5)))
def test_standard_count_matches_corner_recursion(shape):
    assert count_standard(shape) == count_standard_by_corners(shape.outer, shape.inner)


@given(st.sampled_from(skew_shapes(4)), st.integers(1, 3))
def test_semistandard_conjugate_duality(shape, n):
    # strict rows / weak columns on a shape equals weak rows / strict columns on its conjugate
    assert count_sst(shape, n) == count_csst(shape.conjugate(), n)


@given(st.sampled_from(skew_shapes(4)), st.integers(1, 3))
def test_enumeration_predicates_agree(shape, n):
    sst = enumerate_tableaux(shape, n, "semistandard")
    assert all(t.is_semistandard() for t in sst)
    everything = enumerate_tableaux(shape, n, "all")
    assert len(everything) == n ** shape.size()
    assert sum(t.is_semistandard() for t in everything) == len(sst)


@given(st.sampled_from(skew_shapes(4)))
def test_tableau_json_round_trip(shape):
    for t in enumerate_tableaux(shape, 2, "semistandard")[:5]:
        assert Tableau.from_json(t.to_json(), shape) == t


def _brute_column_strict(lam: Partition, n: int) -> int:
    """Classical count: weak rows, strict columns, on all fillings."""
    from itertools import product
    cells = [(i, j) for i, k in enumerate(lam.parts) for j in range(k)]
    count = 0
    for vals in product(range(1, n + 1), repeat=len(cells)):
        f = dict(zip(cells, vals))
        if all(f[(i, j)] <= f[(i, j + 1)] for (i, j) in cells if (i, j + 1) in f) and \
                all(f[(i, j)] < f[(i + 1, j)] for (i, j) in cells if (i + 1, j) in f):
            count += 1
    return count


@pytest.mark.parametrize("lam", [lam for r in range(0, 6) for lam in enumerate_partitions(r)], ids=str)
def test_semistandard_count_against_classical_brute_force(lam):
    for n in range(1, 5):
        assert count_sst(SkewShape(lam, P(())), n) == _brute_column_strict(lam.conjugate(), n)
