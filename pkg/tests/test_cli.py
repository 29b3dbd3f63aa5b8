import io
import json
import subprocess
import sys

import pytest

from raymate import cli


@pytest.fixture(autouse=True)
def _cache(tmp_path, monkeypatch):
    monkeypatch.setenv("RAYMATE_CACHE", str(tmp_path / "cache.json"))


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_angle_command():
    code, out, _ = run("--json", "angle", "86/255")
    rec = json.loads(out)
    assert code == 0
    assert rec["period"] == 8
    assert rec["two_rotation_number"] == "1/4"


def test_mate_obstructed_is_a_verdict():
    code, out, _ = run("--json", "mate", "1/7,2/7", "5/7,6/7")
    rec = json.loads(out)
    assert code == 0
    assert rec["obstructed"] is True
    assert rec["cluster"] is None


def test_mate_cluster_and_dot(tmp_path):
    dot = tmp_path / "g.dot"
    code, out, _ = run("mate", "1/7,2/7", "3/7,4/7", "--dot", str(dot))
    assert code == 0
    assert "cluster: period 1, rho 1/3, delta 3" in out
    assert dot.read_text().startswith("graph raymate {")


def test_poly_uses_cache(tmp_path):
    code, out, _ = run("--json", "poly", "3/7", "4/7", "--bound", "6")
    assert code == 0
    assert len(json.loads(out)["nontrivial_classes"]) == 10
    assert (tmp_path / "cache.json").exists()
    code2, out2, _ = run("--json", "poly", "3/7", "4/7", "--bound", "6")
    assert out2 == out


def test_table_command():
    code, out, _ = run("--json", "table", "--rho", "1/4")
    rec = json.loads(out)
    assert code == 0
    assert [g["multiplicity"] for g in rec["groups"]] == [4, 3, 2, 3]


def test_enumerate_command():
    code, out, _ = run("--json", "enumerate", "--period", "1", "--rho", "1/3")
    rec = json.loads(out)
    assert code == 0
    assert [r["delta"] for r in rec["results"]] == [3]
    assert rec["results"][0]["count"] == 2


def test_json_round_trip_is_byte_identical():
    _, out, _ = run("--json", "mate", "1/7,2/7", "3/7,4/7")
    assert cli.dumps(json.loads(out)) + "\n" == out


@pytest.mark.parametrize(
    "argv",
    [
        ("angle", "1/0"),
        ("mate", "1/7,3/7", "5/7,6/7"),
        ("mate", "1/7", "5/7,6/7"),
        ("enumerate", "--period", "1", "--rho", "1/3", "--delta", "1"),
        ("table", "--rho", "0"),
        ("angle", "1/3", "--degree", "1"),
    ],
)
def test_invalid_input_exit_two(argv):
    code, _, err = run(*argv)
    assert code == 2
    assert err.startswith("error:")


def test_usage_error_exit_two():
    out = subprocess.run([sys.executable, "-m", "raymate", "bogus"], capture_output=True, text=True)
    assert out.returncode == 2


def test_internal_error_exit_three(monkeypatch):
    from raymate.errors import TheoremViolation

    def boom(*a, **k):
        raise TheoremViolation("forced")

    monkeypatch.setattr(cli.atlas, "shared_mating_table", boom)
    code, _, err = run("table", "--rho", "1/4")
    assert code == 3
    assert "TheoremViolation" in err
