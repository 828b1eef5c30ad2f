import pytest
from hypothesis import given, settings, strategies as st

from curvecount import boundary as B
from curvecount.checks import family_problems
from curvecount.degrees import Engine
from curvecount.model import DimensionMismatch, InvalidInput, Problem

E = Engine()
COUNT = E.lower_count
SEPT = Problem(3, 2, (2,) * 7)


def test_no_splittings_for_lines():
    p = Problem(3, 1, (2, 2, 2))
    assert B.enumerate_splittings(p, 0, None, COUNT) == []
    assert B.section_dot_R(p, 0, 1, COUNT) == 0
    assert B.boundary_square_sum(p, 0, COUNT) == 0
    assert B.boundary_linear_sum(Problem(3, 1, (3, 2)), 0, 1, COUNT) == 0


def test_pinned_splitting_count():
    sp = B.enumerate_splittings(SEPT, 0, 1, COUNT)
    assert len(sp) == 20
    assert {len(s.S1) for s in sp} == {3, 4}
    assert all(s.weight == 4 and s.c1 + s.c2 == 3 for s in sp)


def test_unpinned_splitting_count():
    assert len(B.enumerate_splittings(SEPT, 0, None, COUNT)) == 35


def test_sums_for_seven_lines():
    assert B.section_dot_R(SEPT, 0, 1, COUNT) == 80
    assert B.boundary_square_sum(SEPT, 0, COUNT) == 140
    assert B.boundary_linear_sum(SEPT, 0, 1, COUNT) == 80


def test_errors():
    with pytest.raises(DimensionMismatch):
        B.section_dot_R(Problem(3, 2, (2,) * 8), 0, 1, COUNT)
    with pytest.raises(InvalidInput):
        B.enumerate_splittings(SEPT, 2, 2, COUNT)
    with pytest.raises(InvalidInput):
        B.section_dot_R(SEPT, 1, 1, COUNT)


def test_subqueries_are_lower_degree_and_excess_zero():
    seen = []

    def spy(n, d, conds):
        seen.append((n, d, conds))
        return COUNT(n, d, conds)

    for n, d in [(3, 2), (3, 3), (4, 2)]:
        for p in family_problems(n, d):
            B.boundary_square_sum(p, 0, spy)
            assert all(dd < d and Problem(nn, dd, c).excess == 0 for nn, dd, c in seen)
            seen.clear()


FAMILIES = [p for n, d in [(3, 2), (3, 3), (4, 2), (5, 2)] for p in family_problems(n, d)]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(FAMILIES), st.data())
def test_grouped_sums_match_labeled_enumeration(p, data):
    k = len(p.conds)
    i = data.draw(st.integers(0, k - 1))
    j = data.draw(st.integers(0, k - 1).filter(lambda t: t != i))
    lab = B.labeled_sums(p, i, j, COUNT)
    assert lab["dot_R"] == B.section_dot_R(p, i, j, COUNT) == B.section_dot_R(p, j, i, COUNT)
    assert lab["linear"] == B.boundary_linear_sum(p, i, j, COUNT)
    assert B.labeled_sums(p, i, None, COUNT)["square"] == B.boundary_square_sum(p, i, COUNT)
    assert lab["linear"] <= B.boundary_square_sum(p, i, COUNT)
