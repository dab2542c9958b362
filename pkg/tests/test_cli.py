"""CLI behavior through main(): output contracts, schemas, exit codes."""

from __future__ import annotations

import csv
import io
import json
import shutil
import subprocess
from importlib import resources

import jsonschema
import pytest

from symgame.cli import build_report, main
from symgame.payoff import PayoffMatrix


def _schema(name: str) -> dict:
    text = (resources.files("symgame") / "schemas" / name).read_text(encoding="utf-8")
    return json.loads(text)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# classify


def test_classify_text_report(capsys) -> None:
    code, out, err = run_cli(capsys, "classify", "3,1;4,2")
    assert code == 0 and err == ""
    assert "matrix: [[3,1],[4,2]]" in out
    assert "g-vector: g0=5 ga=-1 gb=2 gab=0" in out
    assert "region: 13 (c>a>d>b)" in out
    assert "class: Prisoner's Dilemma" in out
    assert "nash equilibria: (1,1)" in out
    assert "relaxed pareto optima: (0,0)" in out
    assert "mixed nash: none" in out
    assert "comparison: NE payoff 2 vs PO payoff 3" in out
    assert "map point: u=-1/2 v=2 (face gb+)" in out
    assert "reconstruction exact: True" in out


def test_classify_json_matches_schema(capsys) -> None:
    code, out, _ = run_cli(capsys, "classify", "3,1;4,2", "--json")
    assert code == 0
    report = json.loads(out)
    jsonschema.validate(report, _schema("report.v1.json"))
    assert report["schema"] == "report.v1"
    assert report["degenerate"] is None
    assert report["region"] == {"id": 13, "ordering": "c>a>d>b"}
    assert report["game_class"]["display_name"] == "Prisoner's Dilemma"
    assert report["game_class"]["fraction"] == "1/12"
    assert report["nash_equilibria"] == [[1, 1]]
    assert report["pareto_optima"] == [[0, 0]]
    assert report["mixed_nash"] is None
    assert report["map_point"] == {
        "u": "-1/2", "v": "2", "u_decimal": -0.5, "v_decimal": 2.0, "face": "gb+",
    }
    dec = report["decomposition"]
    assert dec["reconstruction_exact"] is True
    assert dec["offset"] == "1"


def test_classify_reports_mixed_profiles(capsys) -> None:
    code, out, _ = run_cli(capsys, "classify", "4,2;5,1", "--json")
    assert code == 0
    report = json.loads(out)
    assert report["game_class"]["display_name"] == "Chicken"
    assert report["mixed_nash"] == {
        "p": "1/2", "p_decimal": 0.5, "value": "3", "value_decimal": 3.0,
    }
    assert report["comparison"]["ne_value"] == "3"
    assert report["comparison"]["po_value"] == "4"


def test_classify_constant_matrix_reports_degenerate(capsys) -> None:
    code, out, _ = run_cli(capsys, "classify", "1,1;1,1", "--json")
    assert code == 0
    report = json.loads(out)
    jsonschema.validate(report, _schema("report.v1.json"))
    assert report["degenerate"] == "trivial"
    assert report["region"] is None and report["map_point"] is None
    assert report["decomposition"] is None
    assert report["nash_equilibria"] == [[0, 0], [0, 1], [1, 0], [1, 1]]


def test_classify_boundary_matrix_reports_neighbours(capsys) -> None:
    code, out, _ = run_cli(capsys, "classify", "3,3;0,0", "--json")
    assert code == 0
    report = json.loads(out)
    jsonschema.validate(report, _schema("report.v1.json"))
    assert report["degenerate"] == "boundary"
    assert report["boundary"] == {
        "tied_pairs": [["a", "b"], ["c", "d"]],
        "adjacent_region_ids": [0, 1, 6, 7],
    }
    assert report["region"] is None and report["game_class"] is None
    assert report["decomposition"]["reconstruction_exact"] is True


def test_classify_accepts_json_matrices_with_exact_decimals(capsys) -> None:
    code, out, _ = run_cli(capsys, "classify", '{"payoff": [[0.5, 0], [1, 0.25]]}', "--json")
    assert code == 0
    report = json.loads(out)
    assert report["matrix"]["rational"] == [["1/2", "0"], ["1", "1/4"]]
    assert report == build_report(PayoffMatrix("1/2", 0, 1, "1/4"))


def test_classify_parse_errors_exit_2(capsys) -> None:
    for bad in ("1,2;3", "1,x;3,4", '{"payoff": [[1, 2]]}', "{oops"):
        code, out, err = run_cli(capsys, "classify", bad)
        assert code == 2, bad
        assert out == "" and err.startswith("error:")
    _, _, err = run_cli(capsys, "classify", "1,x;3,4")
    assert "'x'" in err


def test_unknown_subcommand_exits_2(capsys) -> None:
    with pytest.raises(SystemExit) as excinfo:
        main(["frobnicate"])
    assert excinfo.value.code == 2
    capsys.readouterr()


# ---------------------------------------------------------------------------
# decompose


def test_decompose_document_frozen(capsys) -> None:
    code, out, _ = run_cli(capsys, "decompose", "--", "-9,-3;-1,1")
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, _schema("decompose.v1.json"))
    assert doc["schema"] == "decompose.v1"
    assert doc["degenerate"] is None and doc["boundary"] is False
    assert doc["offset"] == "-9" and doc["offset_decimal"] == -9.0
    assert doc["scale"] == "4"
    assert doc["weights"] == ["3/4", "1/12", "1/6"]
    assert [v["matrix"]["rational"] for v in doc["vertices"]] == [
        [["0", "2"], ["2", "2"]],
        [["0", "0"], ["0", "6"]],
        [["0", "0"], ["3", "3"]],
    ]
    assert doc["region"]["ordering"] == "d>c>b>a"
    assert doc["reconstruction_exact"] is True


def test_decompose_boundary_flagged_not_fatal(capsys) -> None:
    code, out, _ = run_cli(capsys, "decompose", "3,3;0,0")
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, _schema("decompose.v1.json"))
    assert doc["boundary"] is True
    assert doc["region"] == {"id": 0, "ordering": "a>b>c>d"}
    assert doc["weights"] == ["0", "0", "1"]
    assert doc["reconstruction_exact"] is True


def test_decompose_trivial_degenerate(capsys) -> None:
    code, out, _ = run_cli(capsys, "decompose", "5,5;5,5")
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, _schema("decompose.v1.json"))
    assert doc["degenerate"] == "trivial"
    assert doc["offset"] is None and doc["weights"] is None


# ---------------------------------------------------------------------------
# census and fractions


def test_census_self_test_passes(capsys) -> None:
    code, out, err = run_cli(capsys, "census")
    assert code == 0 and err == ""
    lines = out.strip().splitlines()
    assert len(lines) == 11  # header, nine rows, total
    assert sum(1 for l in lines if l.endswith(" ok")) == 9
    assert "MISMATCH" not in out
    assert lines[-1].split() == ["total", "24", "24"]


def test_fractions_csv_layout_and_determinism(capsys) -> None:
    argv = ("fractions", "--samples", "20000", "--seed", "3")
    code, out1, _ = run_cli(capsys, *argv)
    assert code == 0
    code, out2, _ = run_cli(capsys, *argv)
    assert code == 0 and out1 == out2
    lines = out1.strip().splitlines()
    assert lines[0] == "kind,id,name,exact,estimate,abs_error,std_error"
    assert len(lines) == 1 + 9 + 24
    rows = list(csv.reader(io.StringIO(out1)))[1:]
    class_rows = [r for r in rows if r[0] == "class"]
    region_rows = [r for r in rows if r[0] == "region"]
    assert len(class_rows) == 9 and len(region_rows) == 24
    assert class_rows[0][:4] == ["class", "0", "Cholesterol: friend or foe", "1/6"]
    assert region_rows[0][:4] == ["region", "0", "a>b>c>d", "1/24"]
    # Nine decimal places on every numeric column.
    for row in rows:
        for value in row[4:]:
            assert len(value.split(".")[1]) == 9


def test_fractions_json_matches_schema(capsys) -> None:
    code, out, _ = run_cli(
        capsys, "fractions", "--samples", "5000", "--seed", "1", "--format", "json",
    )
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, _schema("fractions.v1.json"))
    assert doc["samples"] == 5000 and doc["workers"] == 1
    assert [row["exact"] for row in doc["classes"]] == [
        "1/6", "1/12", "1/12", "1/8", "1/24", "1/4", "1/24", "1/24", "1/6",
    ]
    assert abs(sum(row["estimate"] for row in doc["classes"]) - 1.0) < 1e-12
    assert all(row["exact"] == "1/24" for row in doc["regions"])


def test_fractions_single_sample(capsys) -> None:
    code, out, _ = run_cli(
        capsys, "fractions", "--samples", "1", "--format", "json", "--seed", "9",
    )
    assert code == 0
    doc = json.loads(out)
    estimates = sorted(row["estimate"] for row in doc["classes"])
    assert estimates == [0.0] * 8 + [1.0]


def test_fractions_worker_split_is_deterministic(capsys) -> None:
    argv = ("fractions", "--samples", "9999", "--seed", "2", "--workers", "3")
    _, out1, _ = run_cli(capsys, *argv)
    _, out2, _ = run_cli(capsys, *argv)
    assert out1 == out2


# ---------------------------------------------------------------------------
# ordergraph and map


def test_ordergraph_stdout_and_file_output(capsys, tmp_path) -> None:
    code, out, _ = run_cli(capsys, "ordergraph", "3,1;4,2")
    assert code == 0
    assert out.startswith("digraph order_graph {")
    assert out.count("->") == 8
    target = tmp_path / "graph.dot"
    code, _, _ = run_cli(capsys, "ordergraph", "3,1;4,2", "--out", str(target))
    assert code == 0
    assert target.read_text(encoding="utf-8") == out


def test_ordergraph_simplified(capsys) -> None:
    code, out, _ = run_cli(capsys, "ordergraph", "3,1;4,2", "--simplified")
    assert code == 0
    assert "->" not in out and "doublecircle" in out


def test_map_renders_deterministic_svg(capsys, tmp_path) -> None:
    target = tmp_path / "map.svg"
    code, _, _ = run_cli(capsys, "map", "--out", str(target))
    assert code == 0
    svg = target.read_text(encoding="utf-8")
    assert svg.count("<polygon") == 24
    assert svg.rstrip().endswith("</svg>")
    code, _, _ = run_cli(capsys, "map", "--out", str(target))
    assert code == 0
    assert target.read_text(encoding="utf-8") == svg


def test_map_marks_points_and_warns_on_constant(capsys, tmp_path) -> None:
    points = tmp_path / "points.txt"
    points.write_text("3,1;4,2\n\n# a comment\n2,2;2,2\n", encoding="utf-8")
    target = tmp_path / "map.svg"
    code, _, err = run_cli(capsys, "map", "--points", str(points), "--out", str(target))
    assert code == 0
    assert "skipping constant matrix [[2,2],[2,2]]" in err
    svg = target.read_text(encoding="utf-8")
    assert "[[3,1],[4,2]]" in svg
    assert "[[2,2],[2,2]]" not in svg


def test_map_trajectory_flag(capsys, tmp_path) -> None:
    target = tmp_path / "map.svg"
    code, _, _ = run_cli(
        capsys, "map", "--trajectory=-9,-3;-1,1;9,15;5,7;21", "--out", str(target),
    )
    assert code == 0
    svg = target.read_text(encoding="utf-8")
    assert "<polyline" in svg


def test_map_bad_inputs_exit_2(capsys, tmp_path) -> None:
    code, _, err = run_cli(capsys, "map", "--trajectory=1,2;3,4;5")
    assert code == 2 and "trajectory spec" in err
    code, _, err = run_cli(capsys, "map", "--points", str(tmp_path / "missing.txt"))
    assert code == 2 and err.startswith("error:")


# ---------------------------------------------------------------------------
# installed entry point


@pytest.mark.skipif(shutil.which("symgame") is None, reason="entry point not installed")
def test_console_script_smoke() -> None:
    result = subprocess.run(
        ["symgame", "census"], capture_output=True, text=True, check=False,
    )
    assert result.returncode == 0
    assert "Chicken" in result.stdout
