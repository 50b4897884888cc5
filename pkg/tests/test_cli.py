import json
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ellipcp import cli
from ellipcp.cli import Report, main
from ellipcp.reps import CircleRep


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    assert code == 0, err
    return json.loads(out)


@pytest.mark.parametrize(
    "rep, reduced",
    [("eps+4z", [0, 4]), ("3z^5", [2, 2]), ("eps+z+3z^2", [0, 16]), ("eps+z^2", [0, 4]), ("eps+16z", [0, 16])],
)
def test_cp_reduced_values(capsys, rep, reduced):
    data = run_json(capsys, "cp", rep)
    assert data["reduced"] == reduced
    assert data["schema"] == "ellipcp/1"


def test_cp_text_output(capsys):
    code, out, err = run(capsys, "cp", "eps+4z")
    assert code == 0 and err == ""
    assert "k even -> C^0, k odd -> C^4" in out
    assert "d = 4" in out


def test_cp_verify_reports_oracle(capsys):
    code, out, _ = run(capsys, "cp", "eps+z+3z^2", "--verify")
    assert code == 0
    assert "k odd -> C^16" in out and "oracle OK" in out
    data = run_json(capsys, "cp", "eps+z+3z^2", "--verify")
    assert all(o["count"] == o["det2"] for o in data["oracle"])
    assert len(data["oracle"]) == 3


def test_cp_unreduced(capsys):
    code, out, _ = run(capsys, "cp", "eps+4z", "--unreduced")
    assert code == 0 and "k even -> C^1, k odd -> C^5" in out


def test_report_internally_consistent(capsys):
    data = run_json(capsys, "cp", "eps+z+3z^2")
    assert [u - p for u, p in zip(data["unreduced"], data["point"])] == data["reduced"]
    assert data["point"] == [1, 1]
    assert data["d_invariant"] == data["reduced"][1]


@pytest.mark.parametrize(
    "rep, value", [("x^0y^1 + 4x^1y^1", [4, 0]), ("2x^1y^1", [2, 2]), ("eps", None), ("x^0y^0", None)]
)
def test_sphere(capsys, rep, value):
    code, out, err = run(capsys, "sphere", rep, "--json")
    if value is None:
        assert code == 3 and out == ""
        assert "fixed points" in err
    else:
        assert code == 0 and json.loads(out)["value"] == value


def test_oracle_examples(capsys):
    assert run_json(capsys, "oracle", "intersect", "2,1", "0,1")["count"] == 4
    t = run_json(capsys, "oracle", "torsion", "6")
    assert (t["torsion"], t["exact"], t["jordan_totient"]) == (36, 24, 24)
    assert run_json(capsys, "oracle", "subgroups", "12,cyclic")["count"] == 6
    code, out, _ = run(capsys, "oracle", "intersect", "2,1", "0,1")
    assert "enumerated 4, det^2 = 4" in out


def test_cell_examples(capsys):
    data = run_json(capsys, "cell", "codim1", "1,0", "--family", "trivial")
    assert data["codim1"] == [{"v": [1, 0], "value": "ΣQ"}]
    assert data["bottom"][0]["dim_deg1"] == 1
    code, out, _ = run(capsys, "cell", "finite", "1/2,1/2")
    assert code == 0 and "Σ²Q^2" in out
    code, out, _ = run(capsys, "cell", "finite", "trivial")
    assert code == 0 and "Σ²Q^1" in out


def test_euler_subcommand(capsys):
    code, out, _ = run(capsys, "euler", "x^1y^1", "--subgroup", "trivial")
    assert code == 0 and "x_A + x_B" in out


@pytest.mark.parametrize(
    "argv, code",
    [
        (["cp", "eps+"], 2),
        (["cp", "eps + 0z"], 2),
        (["sphere", "x^1y^"], 2),
        (["cell", "finite", "1/2,"], 2),
        (["cell", "codim1", "1,0", "--family", "1/x,0"], 2),
        (["cp", "0"], 3),
        (["oracle", "torsion", "101"], 5),
        (["oracle", "intersect", "13,0", "0,1"], 5),
        (["oracle", "subgroups", "101,cyclic"], 5),
    ],
)
def test_exit_codes_and_clean_stdout(capsys, argv, code):
    got, out, err = run(capsys, *argv)
    assert got == code
    assert out == ""
    assert err.startswith("ellipcp: error:")


def test_verify_guard(capsys):
    # |det(C(0,1), C(31,1))| = 31 is past the verification guard
    code, out, err = run(capsys, "cp", "eps+z^31", "--verify")
    assert code == 5 and out == ""


def test_oracle_mismatch_exit_code(capsys, monkeypatch):
    monkeypatch.setattr(cli.lattice, "intersection_count_oracle", lambda v, w: 0)
    code, out, err = run(capsys, "cp", "eps+z", "--verify")
    assert code == 4 and out == ""
    assert "mismatch" in err


circle_reps = st.dictionaries(st.integers(-6, 6), st.integers(1, 4), min_size=1, max_size=4).map(CircleRep)


@settings(max_examples=40)
@given(circle_reps)
def test_json_round_trip(v):
    report = cli.build_cp_report(str(v))
    emitted = json.loads(json.dumps(report.to_json()))
    assert Report.from_json(emitted).to_json() == emitted
    assert Report.from_json(emitted) == report


def test_color_never_has_no_escapes(capsys, monkeypatch):
    monkeypatch.setenv("ELLIPCP_COLOR", "never")
    _, out, _ = run(capsys, "cp", "eps+4z")
    assert "\x1b[" not in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "ellipcp", "cp", "eps+4z", "--json"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["reduced"] == [0, 4]
    assert proc.stderr == ""
