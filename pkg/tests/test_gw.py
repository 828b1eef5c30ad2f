import pytest

from curvecount.checks import count_problems
from curvecount.gw import OutsideEnvelope, _gw, gw_invariant
from curvecount.model import DimensionMismatch
from curvecount.schubert import line_count


@pytest.mark.parametrize(
    "n,d,conds,expected",
    [(3, 1, (3, 3), 1), (3, 2, (3, 3, 3, 3), 0), (3, 2, (2,) * 8, 92), (3, 3, (2,) * 12, 80160),
     (3, 2, (3, 3, 3, 2, 2), 1)],
)
def test_values(n, d, conds, expected):
    assert gw_invariant(n, d, conds) == expected


@pytest.mark.parametrize("n", range(3, 7))
def test_degree_one_is_line_count(n):
    for p in count_problems(n, 1):
        assert gw_invariant(n, 1, p.conds) == line_count(n, p.conds)


def test_divisor_relation():
    for n, d in [(3, 2), (3, 3), (4, 2)]:
        for p in count_problems(n, d):
            assert _gw(n, d, p.conds + (1,)) == d * _gw(n, d, p.conds)
            assert gw_invariant(n, d, p.conds[::-1]) == gw_invariant(n, d, p.conds) >= 0


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        gw_invariant(3, 2, (2, 2))


def test_envelope():
    with pytest.raises(OutsideEnvelope, match="envelope"):
        gw_invariant(5, 2, (5, 5, 5, 3))
