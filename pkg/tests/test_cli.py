"""Command-line interface: arguments, formats, schemas, exit codes."""

import json
import subprocess
import sys
from importlib.resources import files

import jsonschema
import pytest

from eigensieve.cli import EXIT_NUMERICAL, EXIT_OK, main


def run_cli(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def load_schema(name):
    path = files("eigensieve").joinpath("schemas", name)
    return json.loads(path.read_text())


class TestAnalyze:
    def test_csv_header_and_shape(self, capsys):
        code, out, _ = run_cli(capsys, "analyze", "--problem", "canuto", "--n", "8")
        assert code == EXIT_OK
        lines = out.strip().split("\n")
        assert lines[0] == "rank,re_lambda,im_lambda,s_norm,theta,zero_mode"
        assert len(lines) == 1 + 14  # r = 2n - 2 modes
        first = lines[1].split(",")
        assert first[0] == "0"
        assert first[5] in ("true", "false")

    def test_csv_floats_roundtrip_exactly(self, capsys):
        code, csv_out, _ = run_cli(capsys, "analyze", "--problem", "canuto", "--n", "8")
        code2, json_out, _ = run_cli(
            capsys, "analyze", "--problem", "canuto", "--n", "8", "--format", "json"
        )
        assert code == code2 == EXIT_OK
        rows = json.loads(json_out)["rows"]
        for line, row in zip(csv_out.strip().split("\n")[1:], rows):
            cells = line.split(",")
            assert float(cells[1]) == row["re_lambda"]
            assert float(cells[4]) == row["theta"]

    def test_generalized_problem_blanks_the_derivative_score(self, capsys):
        code, out, _ = run_cli(
            capsys, "analyze", "--problem", "orr-sommerfeld", "--n", "16"
        )
        assert code == EXIT_OK
        for line in out.strip().split("\n")[1:]:
            assert line.split(",")[3] == ""

    def test_json_meta_echoes_configuration(self, capsys):
        code, out, _ = run_cli(
            capsys, "analyze", "--problem", "heat", "--n", "12", "--k", "2",
            "--format", "json",
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        meta = payload["meta"]
        assert meta["command"] == "analyze"
        assert meta["problem"] == "heat"
        assert meta["n"] == 12 and meta["k"] == 2
        assert meta["null_tol"] == 1e-10

    def test_json_matches_schema(self, capsys):
        _, out, _ = run_cli(
            capsys, "analyze", "--problem", "acoustic", "--n", "8", "--format", "json"
        )
        jsonschema.validate(json.loads(out), load_schema("analyze.schema.json"))

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "report.csv"
        code, out, _ = run_cli(
            capsys, "analyze", "--problem", "heat", "--n", "8", "--out", str(target)
        )
        assert code == EXIT_OK
        assert out == ""
        assert target.read_text().startswith("rank,")

    def test_deterministic_output(self, capsys):
        _, first, _ = run_cli(capsys, "analyze", "--problem", "canuto", "--n", "12")
        _, second, _ = run_cli(capsys, "analyze", "--problem", "canuto", "--n", "12")
        assert first == second


class TestSweepK:
    def test_summary_csv(self, capsys):
        code, out, _ = run_cli(capsys, "sweep-k", "--n", "8", "--k-max", "25")
        assert code == EXIT_OK
        lines = out.strip().split("\n")
        assert lines[0] == "k,r,proxy_real_error,max_abs_error,min_abs_error,max_abs_real"
        assert len(lines) == 1 + 8  # depth 9 leaves nothing, sweep stops
        assert [line.split(",")[1] for line in lines[1:]] == [
            "14", "12", "10", "8", "6", "4", "2", "1",
        ]

    def test_grid_csv(self, capsys):
        code, out, _ = run_cli(capsys, "sweep-k", "--n", "8", "--k-max", "2", "--grid")
        assert code == EXIT_OK
        lines = out.strip().split("\n")
        assert lines[0] == (
            "k,rank,re_lambda,im_lambda,abs_error,rel_error,s_norm,theta,zero_mode"
        )
        assert len(lines) == 1 + 14 + 12

    def test_json_matches_schema_both_layouts(self, capsys):
        schema = load_schema("sweep_k.schema.json")
        _, out, _ = run_cli(
            capsys, "sweep-k", "--n", "8", "--k-max", "2", "--format", "json"
        )
        jsonschema.validate(json.loads(out), schema)
        _, out, _ = run_cli(
            capsys, "sweep-k", "--n", "8", "--k-max", "2", "--grid", "--format", "json"
        )
        jsonschema.validate(json.loads(out), schema)


class TestReduce:
    def test_csv(self, capsys):
        code, out, _ = run_cli(
            capsys, "reduce", "--n", "32", "--ic", "sine", "--r-list", "2,6"
        )
        assert code == EXIT_OK
        lines = out.strip().split("\n")
        assert lines[0] == "r,size,rel_error,theta_r"
        assert len(lines) == 3
        assert lines[1].split(",")[0] == "2"
        assert lines[2].split(",")[0] == "6"

    def test_json_matches_schema_and_keeps_r_list(self, capsys):
        _, out, _ = run_cli(
            capsys, "reduce", "--n", "32", "--ic", "sine", "--r-list", "2,6",
            "--format", "json",
        )
        payload = json.loads(out)
        jsonschema.validate(payload, load_schema("reduce.schema.json"))
        assert payload["meta"]["r_list"] == [2, 6]
        assert payload["meta"]["ic"] == "sine"

    def test_non_wave_problem_fails_numerically(self, capsys):
        code, _, err = run_cli(
            capsys, "reduce", "--problem", "heat", "--n", "16", "--ic", "sine",
            "--r-list", "2",
        )
        assert code == EXIT_NUMERICAL
        assert "error:" in err


class TestProblems:
    def test_listing(self, capsys):
        code, out, _ = run_cli(capsys, "problems")
        assert code == EXIT_OK
        lines = out.strip().split("\n")
        assert lines[0] == "name,params"
        assert lines[1] == "heat,n"
        assert "orr-sommerfeld,n;alpha;reynolds" in lines

    def test_json_matches_schema(self, capsys):
        _, out, _ = run_cli(capsys, "problems", "--format", "json")
        jsonschema.validate(json.loads(out), load_schema("problems.schema.json"))


class TestExitCodes:
    def test_usage_error_unknown_problem(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["analyze", "--problem", "laplace", "--n", "8"])
        assert exc.value.code == 2
        capsys.readouterr()

    def test_usage_error_bad_number(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["analyze", "--problem", "heat", "--n", "-4"])
        assert exc.value.code == 2
        capsys.readouterr()

    def test_usage_error_bad_r_list(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["reduce", "--n", "16", "--ic", "sine", "--r-list", "2,zero"])
        assert exc.value.code == 2
        capsys.readouterr()

    def test_numerical_error_depth_past_cap(self, capsys):
        code, _, err = run_cli(
            capsys, "analyze", "--problem", "canuto", "--n", "8", "--k", "99"
        )
        assert code == EXIT_NUMERICAL
        assert "cap" in err

    def test_numerical_error_trivial_subspace(self, capsys):
        code, _, err = run_cli(
            capsys, "analyze", "--problem", "canuto", "--n", "8", "--k", "9"
        )
        assert code == EXIT_NUMERICAL
        assert "error:" in err


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "eigensieve", "problems"],
        capture_output=True, text=True, timeout=120,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("name,params")
