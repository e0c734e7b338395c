"""Command-line interface: subcommands, formats, and exit codes."""

import json

import pytest

from salpeter_qho.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCorrect:
    def test_3d_ground_text(self, capsys):
        code, out, _ = run(capsys, "correct", "--d", "3", "--n", "0", "--l", "0")
        assert code == 0
        assert "epsilon0 = 3/2" in out
        assert "-15/32" in out and "255/512" in out
        assert "verdict: AGREE" in out

    def test_2d_ladder_included(self, capsys):
        code, out, _ = run(capsys, "correct", "--d", "2", "--N", "2", "--m", "0")
        assert code == 0
        assert "ladder" in out and "verdict: AGREE" in out

    def test_json_format(self, capsys):
        code, out, _ = run(
            capsys, "correct", "--d", "2", "--n", "1", "--l", "1", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["verdict"] == "AGREE"
        assert payload["epsilon0"]["pq"] == "4"
        methods = payload["methods"]
        assert {"closed_form", "kramers", "laguerre"} <= set(methods)
        assert methods["closed_form"]["epsilon1_pq"] == methods["kramers"]["epsilon1_pq"]

    def test_d1_by_principal_number(self, capsys):
        code, out, _ = run(capsys, "correct", "--d", "1", "--N", "1")
        assert code == 0
        assert "epsilon0 = 3/2" in out and "-15/32" in out

    def test_ladder_requires_d2(self, capsys):
        code, _, err = run(capsys, "correct", "--d", "3", "--n", "0", "--method", "ladder")
        assert code == 2 and "error" in err

    def test_invalid_dimension(self, capsys):
        code, _, err = run(capsys, "correct", "--d", "0", "--n", "0")
        assert code == 2 and "error" in err

    def test_missing_state(self, capsys):
        code, _, err = run(capsys, "correct", "--d", "3")
        assert code == 2 and "error" in err


class TestTable:
    def test_row_count_3d(self, capsys):
        code, out, _ = run(capsys, "table", "--d", "3", "--Nmax", "4")
        assert code == 0
        lines = out.strip().split("\n")
        # split counts 1,1,2,2,3 plus header
        assert len(lines) == 1 + 9

    def test_d1_rows(self, capsys):
        code, out, _ = run(capsys, "table", "--d", "1", "--Nmax", "3")
        assert code == 0
        rows = out.strip().split("\n")[1:]
        assert len(rows) == 4
        assert all(row.split(",")[-1] == "1" for row in rows)

    def test_csv_json_same_values(self, capsys):
        _, csv_out, _ = run(capsys, "table", "--d", "4", "--Nmax", "3")
        _, json_out, _ = run(capsys, "table", "--d", "4", "--Nmax", "3", "--format", "json")
        csv_rows = [row.split(",") for row in csv_out.strip().split("\n")[1:]]
        json_rows = json.loads(json_out)["rows"]
        assert [r[2:6] for r in csv_rows] == [
            [j["eps0"], j["eps1"], j["eps2"], j["energy"]] for j in json_rows
        ]

    def test_lambda_option(self, capsys):
        code, out, _ = run(capsys, "table", "--d", "3", "--Nmax", "0", "--lambda", "1/100")
        assert code == 0
        row = out.strip().split("\n")[1].split(",")
        # 3/2 - (15/32)/100 + (255/512)/10000
        assert row[5] == "1531251/1024000"

    def test_bad_lambda(self, capsys):
        with pytest.raises(SystemExit) as exc:
            run(capsys, "table", "--d", "3", "--Nmax", "2", "--lambda", "x")
        assert exc.value.code == 2

    def test_negative_lambda(self, capsys):
        code, _, err = run(capsys, "table", "--d", "3", "--Nmax", "2", "--lambda=-1/2")
        assert code == 2 and "error" in err

    def test_write_to_file(self, capsys, tmp_path):
        target = tmp_path / "out.csv"
        code, out, _ = run(capsys, "table", "--d", "3", "--Nmax", "2", "--out", str(target))
        assert code == 0 and out == ""
        assert target.read_text().startswith("N,l,eps0,")

    def test_unwritable_path(self, capsys):
        with pytest.raises(SystemExit) as exc:
            run(capsys, "table", "--d", "3", "--Nmax", "2", "--out", "/nonexistent/dir/out.csv")
        assert exc.value.code == 3


class TestDiagram:
    def test_sublevel_count(self, capsys):
        code, out, _ = run(capsys, "diagram", "--d", "3", "--Nmax", "5")
        assert code == 0
        assert out.startswith("<svg") or out.startswith("<?xml")
        assert out.count("firebrick") == 12

    def test_deterministic(self, capsys):
        _, a, _ = run(capsys, "diagram", "--d", "3", "--Nmax", "4")
        _, b, _ = run(capsys, "diagram", "--d", "3", "--Nmax", "4")
        assert a == b

    def test_exaggeration_option(self, capsys):
        code, out, _ = run(
            capsys, "diagram", "--d", "2", "--Nmax", "3", "--exaggeration", "5"
        )
        assert code == 0 and "firebrick" in out


class TestVerify:
    def test_small_grid_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--grid", "small")
        assert code == 0
        report = json.loads(out)
        assert report["passed"] is True
        assert all(rec["status"] == "pass" for rec in report["checks"])

    def test_perturb_fails(self, capsys):
        code, out, _ = run(capsys, "verify", "--grid", "small", "--perturb")
        assert code == 1
        report = json.loads(out)
        assert report["passed"] is False
        assert any(rec["status"] == "FAIL" for rec in report["checks"])

    def test_report_file(self, capsys, tmp_path):
        target = tmp_path / "report.json"
        code, out, _ = run(capsys, "verify", "--report", str(target))
        assert code == 0
        assert json.loads(target.read_text())["passed"] is True
        # summary lines still go to stdout
        assert "[pass]" in out


class TestOracleCommand:
    def test_agreement(self, capsys):
        code, out, _ = run(capsys, "oracle", "--d", "3", "--n", "0", "--l", "0", "--s", "2")
        assert code == 0
        assert "exact      = 15/4" in out
        rel = float(out.strip().split("\n")[-1].split("=")[1])
        assert rel < 1e-40

    def test_invalid_state(self, capsys):
        code, _, err = run(capsys, "oracle", "--d", "3", "--n", "-1", "--l", "0")
        assert code == 2 and "error" in err


class TestParser:
    def test_no_command(self, capsys):
        with pytest.raises(SystemExit) as exc:
            run(capsys, )
        assert exc.value.code == 2

    def test_unknown_command(self, capsys):
        with pytest.raises(SystemExit) as exc:
            run(capsys, "frobnicate")
        assert exc.value.code == 2
