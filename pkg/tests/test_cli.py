import json
import subprocess
import sys

import pytest

from curvecount import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count(capsys):
    assert run(capsys, "count", "--n", "3", "--d", "1", "--conds", "3,3")[:2] == (0, "1\n")
    assert run(capsys, "count", "--n", "3", "--d", "2", "--conds", "2,2,2,2,2,2,2,2")[:2] == (0, "92\n")


def test_count_mismatch(capsys):
    code, out, err = run(capsys, "count", "--n", "3", "--d", "2", "--conds", "2,2")
    assert code != 0 and out == "" and "dimension mismatch: excess = 6" in err


def test_genus(capsys):
    code, out, _ = run(capsys, "genus", "--n", "3", "--d", "1", "--conds", "2,2,2")
    assert code == 0
    assert json.loads(out) == {"deg_K": -2, "genus_if_connected": 0, "thickening": [2, 2, None]}
    code, out, _ = run(capsys, "genus", "--n", "3", "--d", "1", "--conds", "3,2")
    assert json.loads(out)["deg_K"] == -2
    code, _, err = run(capsys, "genus", "--n", "3", "--d", "1", "--conds", "3,3")
    assert code != 0 and "dimension mismatch" in err


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "--n", "3", "--d-max", "1", "--format", "csv")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "d,conds,N"
    assert "1,3;3,1" in lines and "1,2;2;2;2,2" in lines


def test_table_json_deterministic(capsys):
    a = run(capsys, "table", "--n", "3", "--d-max", "2", "--format", "json")[1]
    b = run(capsys, "table", "--n", "3", "--d-max", "2", "--format", "json")[1]
    assert a == b
    rows = json.loads(a)
    assert {"d": 2, "conds": [3, 3, 3, 2, 2], "N": 1} in rows
    keys = [(r["d"], r["conds"]) for r in rows]
    assert keys == sorted(keys)


def test_table_envelope(capsys):
    code, _, err = run(capsys, "table", "--n", "5", "--d-max", "2", "--format", "csv")
    assert code != 0 and "envelope" in err


def test_selfcheck(capsys):
    code, out, _ = run(capsys, "selfcheck", "--n", "3", "--d-max", "2")
    assert code == 0 and "0 failed" in out and "passed" in out


def test_selfcheck_rejects_plane(capsys):
    code, _, err = run(capsys, "selfcheck", "--n", "2", "--d-max", "1")
    assert code != 0 and "n >= 3" in err


def test_selfcheck_reports_offending_key(capsys, monkeypatch):
    from curvecount import checks

    def broken(e, n, d_max):
        yield (3, 2, (2,) * 7), False, "planted"

    monkeypatch.setitem(checks.SUITES, "planted", broken)
    monkeypatch.setattr(checks.SelfcheckConfig, "__init__", _cfg_init)
    code, out, _ = run(capsys, "selfcheck", "--n", "3", "--d-max", "1")
    assert code == 1 and "(3, 2, (2, 2, 2, 2, 2, 2, 2))" in out


def _cfg_init(self, n, d_max):
    self.n, self.d_max, self.suites = n, d_max, ("planted",)


def test_cache_and_trace_files(tmp_path, capsys):
    cache_path, trace_path = tmp_path / "c.txt", tmp_path / "t.json"
    argv = ["count", "--n", "3", "--d", "2", "--conds", "3,3,2,2,2,2", "--cache", str(cache_path)]
    cold = run(capsys, *argv, "--trace", str(trace_path))
    warm = run(capsys, *argv)
    assert cold == warm == (0, "4\n", "")
    doc = json.loads(trace_path.read_text(encoding="utf-8"))
    assert doc["trace"]["value"] == 4 and doc["trace"]["rule"] == "eq9-shift"
    assert cache_path.read_text().startswith("curvecount-cache v1\n3 1 ")


def test_corrupt_cache_reported(tmp_path, capsys):
    path = tmp_path / "c.txt"
    path.write_text("curvecount-cache v1\n3 1 3,3 -4\n")
    code, _, err = run(capsys, "count", "--n", "3", "--d", "1", "--conds", "3,3", "--cache", str(path))
    assert code != 0 and ":2:" in err


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "curvecount", "count", "--n", "4", "--d", "1", "--conds", "3,3,2,2"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "2\n"
