"""Tests for cyclocode.cli, commands driven through typer's CliRunner."""

from __future__ import annotations

import json

import pytest
from typer.testing import CliRunner

from cyclocode.cli import app, parse_r, parse_t
from cyclocode.data.grid import default_grid
from cyclocode.data.report import VerificationRecord

runner = CliRunner()

FLAGSHIP = ["--p", "2", "--m", "6", "--h", "3", "--t", "0"]
GAP = ["--p", "2", "--m", "4", "--h", "3", "--t", "0"]


@pytest.fixture(autouse=True)
def isolated_store(monkeypatch, tmp_path):
    monkeypatch.setenv("CYCLOCODE_DB", str(tmp_path / "cli.db"))
    for name in ("FIELD_CAP", "SUBSPACE_BUDGET", "ENUMERATION_BUDGET", "TOLERANCE", "THREADS"):
        monkeypatch.delenv(f"CYCLOCODE_{name}", raising=False)
    monkeypatch.delenv("CYCLOCODE_FULL_GRID", raising=False)


# ── Option parsing ───────────────────────────────────────────────────


class TestParsing:
    def test_parse_t(self):
        assert parse_t("0,1,2") == (0, 1, 2)

    def test_parse_r(self):
        assert parse_r(None, 6) is None
        assert parse_r("3", 6) == (3, 3)
        assert parse_r("1..6", 6) == (1, 6)


# ── info ─────────────────────────────────────────────────────────────


class TestInfo:
    def test_flagship_json(self):
        result = runner.invoke(app, ["info", *FLAGSHIP, "--format", "json"])
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert (data["n0"], data["n"], data["s"]) == (21, 21, 1)
        assert data["semiprimitive"] == {"k": 3, "l": 1, "h0": 0, "sign": -1}

    def test_s_equals_h(self):
        args = ["info", "--p", "2", "--m", "4", "--h", "3", "--t", "0,1,2", "--format", "json"]
        data = json.loads(runner.invoke(app, args).output)
        assert data["s"] == 3
        assert data["s_equals_h"] is True

    def test_text(self):
        result = runner.invoke(app, ["info", *FLAGSHIP])
        assert result.exit_code == 0
        assert "Semi-primitive" in result.output

    def test_h_out_of_range(self):
        result = runner.invoke(app, ["info", "--p", "2", "--m", "4", "--h", "5", "--t", "0"])
        assert result.exit_code == 2
        assert "HOutOfRange" in result.output

    def test_rejects_csv(self):
        result = runner.invoke(app, ["info", *FLAGSHIP, "--format", "csv"])
        assert result.exit_code == 2


# ── wdist / ghw / periods / bounds ───────────────────────────────────


class TestWdist:
    def test_flagship(self):
        result = runner.invoke(app, ["wdist", *FLAGSHIP, "--format", "json"])
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["weight_distribution"] == {"0": 1, "8": 21, "12": 42}
        assert data["table1_match"] is True
        assert data["dual_distance_at_least_3"] is True

    def test_csv_to_file(self, tmp_path):
        out = tmp_path / "wdist.csv"
        result = runner.invoke(app, ["wdist", *GAP, "--format", "csv", "--out", str(out)])
        assert result.exit_code == 0
        assert out.read_text(encoding="utf-8").splitlines() == [
            "weight,count",
            "0,1",
            "2,10",
            "4,5",
        ]

    def test_budget_exit_code(self):
        result = runner.invoke(app, ["wdist", *FLAGSHIP, "--enumeration-budget", "16"])
        assert result.exit_code == 3

    def test_field_cap_exit_code(self):
        result = runner.invoke(app, ["wdist", *FLAGSHIP, "--field-cap", "32"])
        assert result.exit_code == 2


class TestGhw:
    def test_flagship_thm1(self):
        args = ["ghw", *FLAGSHIP, "--method", "thm1", "--r", "1..3", "--format", "json"]
        result = runner.invoke(app, args)
        assert result.exit_code == 0
        rows = json.loads(result.output)["rows"]
        assert [row["d_r"]["thm1"] for row in rows] == [8, 12, 14]
        assert [row["corollary1"] for row in rows] == [8, 12, 14]

    def test_all_methods_agree(self):
        result = runner.invoke(app, ["ghw", *GAP, "--format", "json"])
        assert result.exit_code == 0
        rows = json.loads(result.output)["rows"]
        assert all(row["agree"] for row in rows)
        assert [row["d_r"]["thm2_period"] for row in rows] == [2, 3, 4, 5]
        assert rows[1]["corollary2"] == "not_covered"

    def test_csv(self):
        result = runner.invoke(app, ["ghw", *GAP, "--method", "direct", "--format", "csv"])
        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert lines[0] == "r,d_direct,corollary1,corollary2,remark"
        assert lines[1] == "1,2,n/a,2,"

    def test_unknown_method(self):
        result = runner.invoke(app, ["ghw", *GAP, "--method", "bogus"])
        assert result.exit_code == 2
        assert "Unknown method" in result.output

    def test_bad_r(self):
        result = runner.invoke(app, ["ghw", *GAP, "--r", "0..9"])
        assert result.exit_code == 2


class TestPeriods:
    def test_flagship(self):
        result = runner.invoke(app, ["periods", *FLAGSHIP, "--format", "json"])
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert [round(re) for re, _ in data["eta"]] == [5, -3, -3]
        assert [round(re) for re, _ in data["S"]] == [16, -8, -8]
        assert max(data["identity_residuals"]) < 1e-9
        assert data["eta_closed_form"] == [5.0, -3.0, -3.0]
        assert data["ok"] is True

    def test_csv(self):
        result = runner.invoke(app, ["periods", *FLAGSHIP, "--format", "csv"])
        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert lines[0] == "i,eta,S,residual,eta_closed_form"
        rows = [line.split(",") for line in lines[1:]]
        assert [(row[0], row[1], row[2], row[4]) for row in rows] == [
            ("0", "5", "16", "5"),
            ("1", "-3", "-8", "-3"),
            ("2", "-3", "-8", "-3"),
        ]

    def test_csv_without_closed_form(self):
        args = ["periods", "--p", "2", "--m", "6", "--h", "7", "--t", "0", "--format", "csv"]
        result = runner.invoke(app, args)
        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert len(lines) == 8
        assert all(line.endswith(",") for line in lines[1:])


class TestBounds:
    def test_flagship(self):
        result = runner.invoke(app, ["bounds", *FLAGSHIP, "--r", "1", "--format", "json"])
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["d1"] == 8
        assert data["rows"] == [
            {"r": 1, "singleton_lo": 1, "singleton_hi": 16, "griesmer_lo": 8, "plotkin_hi": 10}
        ]

    def test_csv(self):
        result = runner.invoke(app, ["bounds", *FLAGSHIP, "--r", "1..2", "--format", "csv"])
        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert lines[0] == "r,singleton_lo,singleton_hi,griesmer_lo,plotkin_hi"
        assert lines[1] == "1,1,16,8,10"
        assert len(lines) == 3

    def test_threads(self):
        args = ["bounds", *FLAGSHIP, "--r", "1", "--threads", "2", "--format", "json"]
        result = runner.invoke(app, args)
        assert result.exit_code == 0
        assert json.loads(result.output)["d1"] == 8

    def test_bad_threads(self):
        result = runner.invoke(app, ["bounds", *FLAGSHIP, "--threads", "-1"])
        assert result.exit_code == 2


# ── verify-grid / history ────────────────────────────────────────────


class TestVerifyGrid:
    def test_grid_file(self, tmp_path):
        grid = tmp_path / "grid.txt"
        grid.write_text("2 1 4 3 0\n3 1 2 2 0\n", encoding="utf-8")
        out = tmp_path / "records.jsonl"
        result = runner.invoke(app, ["verify-grid", "--grid", str(grid), "--out", str(out)])
        assert result.exit_code == 0
        records = [
            VerificationRecord.from_json(line)
            for line in out.read_text(encoding="utf-8").splitlines()
        ]
        assert [r.key for r in records] == ["2 1 4 3 0", "3 1 2 2 0"]
        assert all(r.passed for r in records)
        assert "2 passed" in result.output

    def test_invalid_spec_isolated(self, tmp_path):
        grid = tmp_path / "grid.txt"
        grid.write_text("2 1 4 5 0\n3 1 2 2 0\n", encoding="utf-8")
        out = tmp_path / "records.jsonl"
        result = runner.invoke(
            app, ["verify-grid", "--grid", str(grid), "--out", str(out), "--no-save"]
        )
        assert result.exit_code == 0
        lines = out.read_text(encoding="utf-8").splitlines()
        first, second = (json.loads(line) for line in lines)
        assert first["valid"] is False
        assert second["passed"] is True

    def test_quick_runs_worked_examples(self, tmp_path):
        out = tmp_path / "records.jsonl"
        result = runner.invoke(app, ["verify-grid", "--quick", "--out", str(out), "--no-save"])
        assert result.exit_code == 0
        records = [
            VerificationRecord.from_json(line)
            for line in out.read_text(encoding="utf-8").splitlines()
        ]
        assert [r.key for r in records] == [entry.key for entry in default_grid()]
        assert all(r.passed for r in records)
        assert "5 passed" in result.output

    def test_empty_grid(self, tmp_path):
        grid = tmp_path / "empty.txt"
        grid.write_text("# nothing here\n", encoding="utf-8")
        result = runner.invoke(app, ["verify-grid", "--grid", str(grid)])
        assert result.exit_code == 0
        assert "0 total" in result.output

    def test_malformed_grid(self, tmp_path):
        grid = tmp_path / "bad.txt"
        grid.write_text("2 1 4\n", encoding="utf-8")
        result = runner.invoke(app, ["verify-grid", "--grid", str(grid)])
        assert result.exit_code == 2

    def test_csv_output(self, tmp_path):
        grid = tmp_path / "grid.txt"
        grid.write_text("3 1 2 2 0\n", encoding="utf-8")
        out = tmp_path / "records.csv"
        args = ["verify-grid", "--grid", str(grid), "--format", "csv", "--out", str(out)]
        assert runner.invoke(app, args).exit_code == 0
        lines = out.read_text(encoding="utf-8").splitlines()
        assert lines[0].startswith("p,e,m,h,t,n,rank,r,")
        assert len(lines) == 3

    def test_history_lists_saved_runs(self, tmp_path):
        grid = tmp_path / "grid.txt"
        grid.write_text("3 1 2 2 0\n", encoding="utf-8")
        runner.invoke(app, ["verify-grid", "--grid", str(grid), "--out", str(tmp_path / "o")])
        result = runner.invoke(app, ["history"])
        assert result.exit_code == 0
        assert "3 1 2 2 0" in result.output

    def test_history_empty(self):
        result = runner.invoke(app, ["history"])
        assert result.exit_code == 0
        assert "No verification runs" in result.output


# ── config / version ─────────────────────────────────────────────────


class TestConfigCommand:
    def test_set_and_get(self):
        assert runner.invoke(app, ["config", "set", "threads", "2"]).exit_code == 0
        result = runner.invoke(app, ["config", "get", "threads"])
        assert "threads = 2" in result.output

    def test_get_all(self):
        result = runner.invoke(app, ["config", "get"])
        assert result.exit_code == 0
        assert "field-cap" in result.output

    def test_rejects_unknown_key(self):
        result = runner.invoke(app, ["config", "set", "colour", "blue"])
        assert result.exit_code == 2

    def test_rejects_bad_value(self):
        result = runner.invoke(app, ["config", "set", "threads", "-1"])
        assert result.exit_code == 2

    def test_unknown_action(self):
        assert runner.invoke(app, ["config", "drop"]).exit_code == 2

    def test_stored_setting_is_used(self):
        runner.invoke(app, ["config", "set", "enumeration-budget", "16"])
        result = runner.invoke(app, ["wdist", *FLAGSHIP])
        assert result.exit_code == 3


def test_version():
    result = runner.invoke(app, ["version"])
    assert result.exit_code == 0
    assert "cyclocode" in result.output
