import pytest
from hypothesis import given, strategies as st

from curvecount.checks import vectors
from curvecount.model import DimensionMismatch, InvalidInput
from curvecount.schubert import (
    basis, complement, line_count, line_count_table, multiply, pieri_product, point_class,
)


def test_pieri_identity_times_generator():
    assert pieri_product({(0, 0): 1}, 1, 3) == {(1, 0): 1}


def test_pieri_g13():
    assert pieri_product({(1, 0): 1}, 1, 3) == {(2, 0): 1, (1, 1): 1}


def test_pieri_g14_drops_outside_box():
    assert pieri_product({(3, 1): 1}, 1, 4) == {(3, 2): 1}


@pytest.mark.parametrize("k", [0, 4])
def test_pieri_index_range(k):
    with pytest.raises(InvalidInput):
        pieri_product({(0, 0): 1}, k, 4)


def test_pieri_rejects_partition_outside_box():
    with pytest.raises(InvalidInput):
        pieri_product({(3, 0): 1}, 1, 3)


@pytest.mark.parametrize(
    "n,conds,expected",
    [(3, (2, 2, 2, 2), 2), (3, (3, 3), 1), (3, (3, 2, 2), 1), (4, (2,) * 6, 5), (4, (3, 3, 2, 2), 2)],
)
def test_line_count_anchors(n, conds, expected):
    assert line_count(n, conds) == expected == line_count_table(n, conds)


@pytest.mark.parametrize("n", range(3, 7))
def test_pieri_matches_table_everywhere(n):
    for v in vectors(2 * (n - 1), n):
        assert line_count(n, v) == line_count_table(n, v), v


@pytest.mark.parametrize("n", range(3, 7))
def test_poincare_pairing(n):
    pt = point_class(n)
    for lam in basis(n):
        for mu in basis(n):
            if sum(lam) + sum(mu) != 2 * (n - 1):
                continue
            expected = {pt: 1} if mu == complement(lam, n) else {}
            assert multiply({lam: 1}, {mu: 1}, n) == expected


def test_line_count_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        line_count(3, (2, 2, 2))


def test_line_count_hyperplane_neutral():
    assert line_count(4, (3, 3, 2, 2, 1)) == line_count(4, (3, 3, 2, 2))


@given(st.integers(3, 6).flatmap(lambda n: st.tuples(st.just(n), st.sampled_from(list(vectors(2 * (n - 1), n))), st.randoms())))
def test_line_count_symmetric(args):
    n, v, rnd = args
    w = list(v)
    rnd.shuffle(w)
    assert line_count(n, w) == line_count(n, v) >= 0
