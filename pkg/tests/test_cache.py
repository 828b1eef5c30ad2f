import pytest
from hypothesis import given, settings, strategies as st

from curvecount import cache
from curvecount.checks import count_problems
from curvecount.degrees import Engine, MemoStore


def _warm():
    e = Engine()
    e.count(3, 2, (2,) * 8)
    e.count(4, 2, (2,) * 11)
    return e.store


def test_round_trip(tmp_path):
    store = _warm()
    path = tmp_path / "c.txt"
    cache.save(path, store)
    again = cache.load(path)
    assert again.items() == store.items()
    assert path.read_text().splitlines()[0] == cache.HEADER
    cache.save(path, again)
    assert path.read_text() == cache.dumps(store)


@pytest.mark.parametrize(
    "body,lineno",
    [
        ("3 1 3,3 1\n3 1 3,3 1\n", 3),
        ("3 1 2,3,2,2 2\n", 2),
        ("3 1 3,3 -1\n", 2),
        ("3 1 3,3 1.5\n", 2),
        ("3 1 3,3\n", 2),
        ("3 1 3,2 1\n", 2),
        ("3 1 3,3 1\n3 1 2,2,1,2,2 2\n", 3),
    ],
)
def test_rejects_bad_records(tmp_path, body, lineno):
    path = tmp_path / "c.txt"
    path.write_text(cache.HEADER + "\n" + body)
    with pytest.raises(cache.CacheError) as exc:
        cache.load(path)
    assert exc.value.lineno == lineno and f":{lineno}:" in str(exc.value)


def test_rejects_header(tmp_path):
    path = tmp_path / "c.txt"
    path.write_text("curvecount-cache v0\n")
    with pytest.raises(cache.CacheError):
        cache.load(path)


def test_conflicting_preloaded_value(tmp_path):
    path = tmp_path / "c.txt"
    path.write_text(cache.HEADER + "\n3 1 3,3 1\n")
    store = MemoStore({(3, 1, (3, 3)): 2})
    with pytest.raises(cache.CacheError):
        cache.load(path, store)


PROBLEMS = [p for n, d in [(3, 1), (3, 2), (3, 3), (4, 1), (4, 2)] for p in count_problems(n, d)]


@settings(max_examples=25, deadline=None)
@given(st.lists(st.sampled_from(PROBLEMS), min_size=1, max_size=6))
def test_warm_cache_reproduces_cold_values(tmp_path_factory, probs):
    path = tmp_path_factory.mktemp("c") / "c.txt"
    cold = Engine()
    vals = [cold.count(p.n, p.d, p.conds) for p in probs]
    cache.save(path, cold.store)
    warm = Engine(cache.load(path))
    assert [warm.count(p.n, p.d, p.conds) for p in probs] == vals
