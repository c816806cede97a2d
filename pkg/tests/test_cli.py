import io
import json
import subprocess
import sys

import pytest

from homlie import Matrix, load_fixture, serialize
from homlie.cli import run


def call(*argv):
    buf = io.StringIO()
    code = run(list(argv), buf)
    return code, buf.getvalue()


@pytest.mark.parametrize("command", ["verify", "analyze", "killing", "forms", "ideals", "decompose", "criterion"])
def test_deterministic_output(command):
    for fmt in ([], ["--json"]):
        first = call(command, "osp12", *fmt)
        assert first == call(command, "osp12", *fmt)
        assert first[0] == 0


def test_json_key_order():
    code, text = call("verify", "sl2", "--json")
    rep = json.loads(text)
    assert list(rep)[:2] == ["algebra", "dimension"]
    assert rep["axioms_hold"] is True


def test_file_and_fixture_agree(tmp_path):
    path = tmp_path / "a.alg"
    path.write_text(serialize(load_fixture("hosp12")))
    assert call("killing", str(path), "--json") == call("killing", "hosp12", "--json")


def test_exit_codes(tmp_path):
    assert call("verify", "nonexistent_thing")[0] == 2
    bad = tmp_path / "bad.alg"
    bad.write_text("name broken\neven a\nodd\nalpha identity\nbracket a q = 1 a\n")
    assert call("verify", str(bad))[0] == 2
    broken = load_fixture("sl2").with_alpha(Matrix.diag([2, 1, 1]))
    good = tmp_path / "fails.alg"
    good.write_text(serialize(broken))
    assert call("verify", str(good))[0] == 1
    assert call("decompose", "osp12")[0] == 0


def test_derivations_command():
    code, text = call("derivations", "sl2", "--k", "0", "--parity", "even", "--json")
    rep = json.loads(text)
    assert code == 0
    assert rep["spaces"][0]["dimension"] == 3
    assert rep["spaces"][0]["all_inner"] is True


def test_ideals_seed():
    code, text = call("ideals", "heis3", "--seed", "z", "--json")
    rep = json.loads(text)
    assert code == 0
    assert rep["closure"] == ["z"] and rep["closure_dim"] == 1


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "homlie.cli", "verify", "c11"], capture_output=True, text=True)
    assert out.returncode == 0
    assert "c11" in out.stdout
