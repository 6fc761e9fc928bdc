import json

import pytest

from cotriple.cli import main
from cotriple.report import validate_report


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


FAST = ("--algebra", "builtin:A1", "--triple", "trivial",
        "--bound", "6", "--imax", "3")


def test_list_modules(capsys):
    code, out, _ = run_cli(capsys, "list-modules", "--algebra", "builtin:A2")
    assert code == 0
    lines = dict(l.split("\t") for l in out.strip().splitlines())
    assert lines["A"] == "dim 3"
    assert "S1" in lines and "P1" in lines


def test_run_single_check_emits_valid_report(capsys, tmp_path):
    out_path = tmp_path / "report.json"
    code, out, _ = run_cli(capsys, "run", *FAST, "--suite", "prop_2_2",
                           "--out", str(out_path))
    assert code == 0
    report = json.loads(out_path.read_text())
    validate_report(report)
    assert report["summary"]["fail"] == 0
    assert [r["check"] for r in report["checks"]] == ["prop_2_2"]
    assert report["checks"][0]["anchor"] == "Prop 2.2"


def test_run_is_byte_identical_without_timestamps(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    args = ("run", *FAST, "--suite", "prop_2_2 prop_4_2", "--seed", "7",
            "--no-timestamps")
    assert run_cli(capsys, *args, "--out", str(a))[0] == 0
    assert run_cli(capsys, *args, "--out", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_compute_ext_table(capsys):
    code, out, _ = run_cli(capsys, "compute", *FAST, "ext-table", "k", "k")
    assert code == 0
    report = json.loads(out)
    details = report["checks"][0]["details"]
    assert details["ext_xy_via_x_resolution"] == details["ext_xy_via_y_coresolution"]
    # over k[x]/(x^2) the simple module has 1-dimensional Ext in all degrees
    assert details["ext_absolute"] == [1, 1, 1, 1]


def test_compute_z_pd_reports_exceeds_bound(capsys):
    code, out, _ = run_cli(capsys, "compute", *FAST, "z-pd", "k")
    assert code == 0
    report = json.loads(out)
    assert report["checks"][0]["details"]["value"] == "ExceedsBound(6)"


def test_compute_ho_hom_and_stable_eq(capsys):
    code, out, _ = run_cli(capsys, "compute", "--algebra", "builtin:A1",
                           "--triple", "gorenstein", "ho-hom", "k", "k")
    assert code == 0
    assert json.loads(out)["checks"][0]["details"]["dim"] == 1
    code, out, _ = run_cli(capsys, "compute", "--algebra", "builtin:A1",
                           "--triple", "gorenstein", "stable-eq", "k", "A")
    assert code == 0
    details = json.loads(out)["checks"][0]["details"]
    assert details["verdict"] == "no" and details["complete_search"]


def test_config_errors_exit_2(capsys):
    assert run_cli(capsys, "list-modules", "--algebra", "builtin:A9")[0] == 2
    assert run_cli(capsys, "run", "--algebra", "builtin:A1",
                   "--triple", "mystery", "--suite", "prop_2_2")[0] == 2
    assert run_cli(capsys, "run", *FAST, "--suite", "prop_9_9")[0] == 2
    assert run_cli(capsys, "compute", *FAST, "ext-table", "k")[0] == 2
    assert run_cli(capsys, "compute", *FAST, "z-pd", "no-such-module")[0] == 2


def test_gorenstein_triple_rejected_on_non_gorenstein_input(capsys, tmp_path):
    # a local algebra with radical square zero on two generators is not
    # Gorenstein: requesting the triple is a configuration error
    import numpy as np
    mul = np.zeros((3, 3, 3), dtype=np.int64).tolist()
    mul[0][0][0] = 1
    mul[0][1][1] = mul[1][0][1] = 1
    mul[0][2][2] = mul[2][0][2] = 1
    spec = {"dim": 3, "char": 2, "unit": [1, 0, 0], "mul": mul,
            "name": "local-radical-square-zero"}
    path = tmp_path / "alg.json"
    path.write_text(json.dumps(spec))
    code, _, err = run_cli(capsys, "run", "--algebra", str(path),
                           "--triple", "gorenstein", "--bound", "4",
                           "--suite", "prop_2_2")
    assert code == 2
    assert "gorenstein" in err.lower() or "injective" in err.lower()
