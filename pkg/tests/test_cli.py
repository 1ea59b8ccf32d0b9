import json
import shutil
import subprocess
import sys
from pathlib import Path

import pytest

from mfcat import cli
from mfcat.cli import Problem, main

DOCS = Path(__file__).resolve().parent.parent / "docs"
EX = DOCS / "examples"


def run(tmp_path, command, doc, *extra):
    """Run the CLI in-process and return (exit code, parsed report)."""
    if isinstance(doc, dict):
        path = tmp_path / "doc.json"
        path.write_text(json.dumps(doc))
    else:
        path = doc
    out = tmp_path / f"{command}.report.json"
    code = main([command, "--input", str(path), "--json", str(out), *extra])
    return code, json.loads(out.read_text())


XY = json.loads((EX / "xy.json").read_text())


def test_verify_ok(tmp_path, capsys):
    code, report = run(tmp_path, "verify", EX / "xy.json")
    assert code == 0
    assert "K: curvature: ok, homogeneity: ok" in capsys.readouterr().out
    assert report["result"]["K"] == {"curvature": "ok", "homogeneity": "ok", "errors": []}


def test_verify_corrupted_beta(tmp_path, capsys):
    code, report = run(tmp_path, "verify", EX / "xy_corrupted.json")
    assert code == 1
    out = capsys.readouterr().out
    assert "curvature: fail" in out
    assert "beta column 0" in out


def test_verify_names_inhomogeneous_entry(tmp_path):
    # curvature holds, but beta has the wrong degree for these shifts
    doc = {"ring": {"variables": [{"name": "x"}]}, "potential": "x^2",
           "factorizations": {"K": {"shifts0": [0], "shifts1": [2], "alpha": [["x"]], "beta": [["x"]]}}}
    code, report = run(tmp_path, "verify", doc)
    assert code == 1
    assert any("beta[0][0]" in e for e in report["result"]["K"]["errors"])


def test_ext_xy(tmp_path):
    code, report = run(tmp_path, "ext", EX / "xy.json", "--window=-3..3")
    assert code == 0
    assert report["result"]["nonzero"] == [[0]]
    slice0 = [s for s in report["result"]["slices"] if s["degree"] == [0]][0]
    assert slice0["dim_H_even"] == 1 and slice0["dim_H_odd"] == 0


def test_report_fields_and_determinism(tmp_path):
    outs = []
    for i in range(2):
        out = tmp_path / f"r{i}.json"
        assert main(["ext", "--input", str(EX / "xy.json"), "--json", str(out)]) == 0
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]
    report = json.loads(outs[0])
    assert set(report) == {"command", "input_hash", "result", "diagnostics", "timing_ms"}
    assert report["timing_ms"] == 0


def test_timing_flag(tmp_path):
    code, report = run(tmp_path, "milnor", EX / "milnor.json", "--timing")
    assert code == 0 and report["timing_ms"] >= 0


def test_seed_is_recorded(tmp_path):
    _, report = run(tmp_path, "milnor", EX / "milnor.json", "--seed", "7")
    assert "seed 7" in report["diagnostics"]


CASES = [
    ("verify", "xy.json", {}),
    ("suspend", "xy.json", {}),
    ("twist", "xy.json", {"k": 3}),
    ("cone", "xy.json", {}),
    ("sum", "xy.json", {"a": "K", "b": "K"}),
    ("dual", "xy.json", {}),
    ("tensor", "xy.json", {"a": "K", "b": "K"}),
    ("koszul", "xy.json", {}),
    ("knorrer", "xy.json", {"base_shifts": [0, 2]}),
    ("coker", "xy.json", {}),
    ("ext", "cubic_cone.json", {}),
    ("nullhomotopy", "xy.json", {}),
    ("annihilation", "xy.json", {}),
    ("jacobi", "milnor.json", {}),
    ("milnor", "milnor.json", {}),
    ("segal", "segal.json", {}),
    ("degenerate", "rees.json", {"mf": "K"}),
]


def test_every_subcommand_is_covered():
    assert sorted(c for c, _, _ in CASES) == sorted(cli.COMMANDS)


@pytest.mark.parametrize("command,doc,args", CASES, ids=[c for c, _, _ in CASES])
def test_subcommands_succeed(tmp_path, capsys, command, doc, args):
    data = json.loads((EX / doc).read_text())
    data.setdefault("command", {}).setdefault("args", {}).update(args)
    code, report = run(tmp_path, command, data)
    assert code == 0, report
    assert report["command"] == command
    assert capsys.readouterr().out.strip()


@pytest.mark.parametrize("command,doc,args", [c for c in CASES if c[0] in
                                              ("suspend", "twist", "cone", "sum", "dual", "tensor", "koszul",
                                               "knorrer")])
def test_round_trip(tmp_path, command, doc, args):
    data = json.loads((EX / doc).read_text())
    data.setdefault("command", {}).setdefault("args", {}).update(args)
    _, report = run(tmp_path, command, data)
    emitted = report["result"]["factorization"]
    again = {"ring": data["ring"], "factorizations": {"E": emitted}}
    rebuilt = Problem(again).factorization("E")
    assert rebuilt.to_dict() == emitted
    assert rebuilt.is_valid()


def test_results(tmp_path):
    _, r = run(tmp_path, "milnor", EX / "milnor.json")
    assert r["result"]["milnor"] == 6
    _, r = run(tmp_path, "milnor", {"ring": {"variables": [{"name": "x"}, {"name": "y"}]}, "potential": "x^2*y"})
    assert r["result"]["milnor"] == "infinite"
    _, r = run(tmp_path, "segal", EX / "segal.json")
    assert r["result"]["canonicalize"][0] == {"input": [5, 4], "canonical": [11, 0]}
    _, r = run(tmp_path, "degenerate", EX / "rees.json")
    assert [f["potential"] for f in r["result"]["fibers"]] == ["x*p", "x^2*p + x*p"]
    _, r = run(tmp_path, "coker", EX / "xy.json", "--window=0..4")
    assert list(r["result"]["hilbert_function"].values()) == [1] * 5
    _, r = run(tmp_path, "nullhomotopy", EX / "xy.json")
    assert r["result"]["nullhomotopic"] is False


def test_annihilation_negative_control(tmp_path):
    doc = {
        "ring": {"variables": [{"name": "x"}, {"name": "y"}]},
        "potential": "x*y",
        "factorizations": {"B": {"shifts0": [0], "shifts1": [1], "alpha": [["x"]], "beta": [["x"]]}},
        "command": {"args": {"unchecked": True, "window": [-2, 2]}},
    }
    code, report = run(tmp_path, "annihilation", doc)
    assert code == 1
    assert report["result"]["ok"] is False


@pytest.mark.parametrize("doc,fragment", [
    ({"ring": {}}, "ring"),
    ({"ring": {"variables": [{"name": "x"}]}, "potential": "x^-1"}, "potential"),
    ({"ring": {"variables": [{"name": "x"}]}, "potential": "x + q"}, "potential"),
    ({"ring": {"variables": [{"name": "x"}]}, "potential": "x^2",
      "factorizations": {"K": {"shifts0": [0], "shifts1": [1], "alpha": [["x"]], "beta": [["2x"]]}}},
     "factorizations/K/beta[0][0]"),
    ({"ring": {"variables": [{"name": "x"}]}, "bogus": 1}, "<root>"),
])
def test_input_errors_exit_2_with_location(tmp_path, capsys, doc, fragment):
    command = "verify" if "factorizations" in doc else "milnor"
    code, report = run(tmp_path, command, doc)
    assert code == 2
    assert report["result"]["error"]["location"] == fragment
    assert fragment in capsys.readouterr().err


def test_malformed_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    code, report = run(tmp_path, "milnor", path)
    assert code == 2
    assert report["result"]["error"]["type"] == "SchemaError"


def test_unknown_name_and_mismatched_command(tmp_path):
    data = dict(XY, command={"args": {"mf": "nope"}})
    assert run(tmp_path, "dual", data)[0] == 2
    data = dict(XY, command={"name": "ext"})
    assert run(tmp_path, "dual", data)[0] == 2


def test_math_failure_exit_1(tmp_path):
    data = json.loads(json.dumps(XY))
    data["morphisms"]["id"]["block1"] = [["0"]]
    code, report = run(tmp_path, "cone", data)
    assert code == 1
    assert report["result"]["error"]["type"] == "NotClosed"


def test_schema_copy_in_docs_matches_package():
    from importlib import resources
    shipped = resources.files("mfcat").joinpath("data/problem.schema.json").read_bytes()
    assert (DOCS / "problem.schema.json").read_bytes() == shipped
    assert json.loads(shipped) == cli.load_schema()


def test_console_script(tmp_path):
    exe = shutil.which("mfcat")
    cmd = [exe] if exe else [sys.executable, "-m", "mfcat.cli"]
    proc = subprocess.run(cmd + ["verify", "--input", str(EX / "xy.json")], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "curvature: ok, homogeneity: ok" in proc.stdout
