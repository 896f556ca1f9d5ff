import io
import json
import subprocess
import sys

import pytest

from rwgraphs.cli import run
from rwgraphs.manifolds import default_dataset


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_reduce_dumbbell():
    code, text = call("reduce", "edges: 1-1, 2-2, 1-2")
    assert code == 0
    assert "coordinates = (0)" in text


def test_reduce_records_format():
    code, text = call("reduce", "theta2", "--format", "records")
    assert code == 0
    rec = json.loads(text.strip().splitlines()[0])
    assert rec["ok"] is True and rec["check"] == "reduce theta2"
    # exact rationals travel as strings; the basis graph is theta2 with one edge reversed
    assert rec["fields"]["degree"] == "2" and rec["fields"]["coordinates"] == ["0", "-1"]


def test_basis():
    code, text = call("basis", "--degree", "3")
    assert code == 0 and "dimension = 3" in text


def test_polywheel_plain_and_bold():
    code, text = call("polywheel", "<w(2) w(2)>")
    assert code == 0 and "coordinates" in text
    code, text = call("polywheel", "<W(2, E)>")
    assert code == 0 and "normal form" in text


def test_rw():
    code, text = call("rw", "--manifold", "S[2]", "--graph", "theta2")
    assert code == 0
    assert "value = -144" in text and "<w4>: 2/5" in text


def test_omega():
    code, text = call("omega", "--terms", "2")
    assert code == 0 and "b2 = 1/48" in text and "b4 = -1/5760" in text
    assert call("omega", "--terms", "9")[0] == 2


@pytest.mark.parametrize("argv", [
    ("verify", "table1", "--k", "2"),
    ("verify", "wheeling", "--k", "1"),
    ("verify", "stu", "--degree", "2"),
    ("verify", "td-half", "--manifold", "S[2]"),
    ("verify", "omega"),
    ("verify", "c4-bound"),
    ("verify", "chern-gap"),
    ("verify", "closed-forms"),
    ("dataset", "validate"),
])
def test_passing_suites(argv):
    code, text = call(*argv)
    assert code == 0, text
    assert "FAIL" not in text


def test_corrupted_dataset_fails(tmp_path):
    recs = [d.record() for d in default_dataset().values()]
    for r in recs:
        if r["name"] in ("S[2]", "S^[2]"):
            r["chern_numbers"]["c4"] = 325
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"manifolds": recs}))
    code, text = call("dataset", "validate", str(path))
    assert code == 1
    assert "FAIL" in text and "chi(O)" in text


@pytest.mark.parametrize("argv", [
    ("reduce", "edges: 1-2"),
    ("reduce", "theta", "--degree", "9"),
    ("rw", "--manifold", "T[2]", "--graph", "theta"),
    ("rw", "--manifold", "S[2]", "--graph", "theta"),
    ("verify", "nosuch"),
    ("verify", "stu", "--degree", "4"),
    ("dataset", "validate", "/nonexistent/file.json"),
    ("polywheel", "w(2)"),
])
def test_usage_errors(argv):
    assert call(*argv)[0] == 2


def test_module_entry_point_runs_everything():
    proc = subprocess.run([sys.executable, "-m", "rwgraphs", "verify", "all"],
                          capture_output=True, text=True, timeout=600)
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert "FAIL" not in proc.stdout
