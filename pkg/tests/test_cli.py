"""CLI tests through typer's CliRunner"""

import json
import sys

import pytest

from quandle_lab.cli.common import EXIT_MISMATCH, EXIT_USAGE, EXIT_VALIDATION
from quandle_lab.cli.main import app, cli_main
from quandle_lab.reproduction import CheckResult, RowStatus
from quandle_lab.surfaces.presets import TWIST_SPUN_TREFOIL_REVERSED
from quandle_lab.surfaces.triple_linking import TripleLinkingData


def _json(result):
    assert result.exit_code == 0, result.output
    return json.loads(result.stdout)


@pytest.fixture
def quandle_file(tmp_path):
    path = tmp_path / "t2.json"
    path.write_text(json.dumps({"n": 2, "op": [[0, 0], [1, 1]]}))
    return path


class TestGeneral:
    def test_version(self, runner):
        result = runner.invoke(app, ["version"])
        assert result.exit_code == 0
        assert "Quandle Lab" in result.stdout

    def test_invalid_configuration_is_a_usage_error(self, runner, isolated_config):
        isolated_config.write_text("threads: 0\n")
        result = runner.invoke(app, ["quandle", "list"])
        assert result.exit_code == EXIT_USAGE

    def test_configured_output_format(self, runner, isolated_config):
        isolated_config.write_text("output_format: json\n")
        rows = _json(runner.invoke(app, ["quandle", "list"]))
        assert {"name": "R3", "n": 3, "involutory": True, "trivial": False} in rows


class TestQuandleCommands:
    def test_list(self, runner):
        result = runner.invoke(app, ["quandle", "list"])
        assert result.exit_code == 0
        assert "S4" in result.stdout

    def test_show_json(self, runner):
        data = _json(runner.invoke(app, ["quandle", "show", "R3", "--format", "json"]))
        assert data == {"n": 3, "op": [[0, 2, 1], [2, 1, 0], [1, 0, 2]], "name": "R3"}

    def test_show_file(self, runner, quandle_file):
        data = _json(runner.invoke(app, ["quandle", "show", str(quandle_file), "-f", "json"]))
        assert data["name"] == "t2"

    def test_check_valid(self, runner, quandle_file):
        result = runner.invoke(app, ["quandle", "check", str(quandle_file)])
        assert result.exit_code == 0
        assert "Valid quandle" in result.stdout

    def test_check_axiom_failure(self, runner, tmp_path):
        path = tmp_path / "shift.json"
        path.write_text(json.dumps({"n": 2, "op": [[1, 1], [0, 0]]}))
        result = runner.invoke(app, ["quandle", "check", str(path)])
        assert result.exit_code == EXIT_VALIDATION
        assert "axiom I" in result.stdout
        rack = runner.invoke(app, ["quandle", "check", str(path), "--allow-rack"])
        assert rack.exit_code == 0
        assert "Valid rack" in rack.stdout

    def test_check_schema_failure(self, runner, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"op": [[0]]}))
        assert runner.invoke(app, ["quandle", "check", str(path)]).exit_code == EXIT_USAGE

    def test_iso(self, runner):
        assert runner.invoke(app, ["quandle", "iso", "Alex(2;T^2+T+1)", "S4"]).exit_code == 0
        result = runner.invoke(app, ["quandle", "iso", "R4", "S4"])
        assert result.exit_code == EXIT_VALIDATION

    def test_unknown_quandle(self, runner):
        assert runner.invoke(app, ["quandle", "show", "Q7"]).exit_code == EXIT_USAGE


class TestCohomologyCommands:
    def test_group(self, runner):
        data = _json(
            runner.invoke(
                app, ["cohomology", "group", "-q", "S4", "-k", "3", "-A", "Z4", "-f", "json"]
            )
        )
        assert data["group"] == "Z2 ⊕ Z2 ⊕ Z4"
        assert data["summands"] == [2, 2, 4]
        assert "representatives" not in data

    def test_group_with_representatives(self, runner):
        data = _json(
            runner.invoke(
                app, ["cohomology", "group", "-q", "R3", "-k", "3", "-A", "Z3", "-r", "-f", "json"]
            )
        )
        assert data["group"] == "Z3"
        assert len(data["representatives"]) == 1
        assert data["representatives"][0]["coeff"] == "Z3"

    def test_rational(self, runner):
        args = ["cohomology", "group", "-q", "R4", "-k", "2", "-A", "Q", "-f", "json"]
        data = _json(runner.invoke(app, args))
        assert data["group"] == "Q ⊕ Q"

    def test_default_coefficients_from_config(self, runner, isolated_config):
        isolated_config.write_text("default_coefficients: Z2\n")
        args = ["cohomology", "group", "-q", "S4", "-k", "2", "-f", "json"]
        assert _json(runner.invoke(app, args))["coeff"] == "Z2"

    def test_bad_theory(self, runner):
        result = runner.invoke(app, ["cohomology", "group", "-q", "R3", "-k", "2", "-t", "X"])
        assert result.exit_code == EXIT_USAGE

    def test_homology(self, runner):
        args = ["cohomology", "homology", "-q", "R3", "-k", "3", "-f", "json"]
        data = _json(runner.invoke(app, args))
        assert data["group"] == "Z3"
        assert data["torsion"] == [3]

    def test_check_nontrivial_cocycle(self, runner):
        result = runner.invoke(app, ["cohomology", "check", "-q", "R3", "-c", "eta1"])
        assert result.exit_code == 0
        assert "nonzero class" in result.stdout

    def test_check_coboundary(self, runner):
        result = runner.invoke(app, ["cohomology", "check", "-q", "R3", "-c", "eta3"])
        assert result.exit_code == 0
        assert "Coboundary" in result.stdout

    def test_check_not_a_cocycle(self, runner):
        result = runner.invoke(app, ["cohomology", "check", "-q", "R3", "-c", "eta1", "-A", "Z"])
        assert result.exit_code == EXIT_VALIDATION

    def test_check_cochain_file(self, runner, tmp_path):
        path = tmp_path / "phi.json"
        path.write_text(json.dumps({"degree": 2, "coeff": "Z", "values": {"(0,1)": 1}}))
        args = ["cohomology", "check", "-q", "T2", "-c", str(path)]
        assert runner.invoke(app, args).exit_code == 0


class TestInvariantCommands:
    def test_knot(self, runner, tmp_path):
        output = tmp_path / "out" / "trefoil.json"
        args = ["invariant", "knot", "-b", "3_1", "-q", "S4", "-c", "phi_S4"]
        data = _json(runner.invoke(app, args + ["-o", str(output), "-f", "json"]))
        assert data["display"] == "4 + 12t"
        assert data["colorings"] == 16
        assert data["result"] == {"coeff": "Z2", "terms": {"0": 4, "1": 12}}
        assert json.loads(output.read_text()) == data

    def test_knot_text_with_timing(self, runner):
        args = ["invariant", "knot", "-b", "1 1", "-q", "T2", "-c", "chi(0,1)", "--timing"]
        result = runner.invoke(app, args)
        assert result.exit_code == 0
        assert "2 + 2t" in result.stdout
        assert "Elapsed" in result.stdout

    def test_knot_with_non_cocycle(self, runner):
        args = ["invariant", "knot", "-b", "3_1", "-q", "R3", "-c", "chi(0,1)"]
        assert runner.invoke(app, args).exit_code == EXIT_VALIDATION

    def test_knot_with_bad_braid(self, runner):
        args = ["invariant", "knot", "-b", "1 x", "-q", "R3", "-c", "chi(0,1)"]
        assert runner.invoke(app, args).exit_code == EXIT_USAGE

    def test_surface_preset(self, runner):
        args = ["invariant", "surface", "-p", "twist_spun_trefoil", "-q", "R3", "-c", "eta1"]
        data = _json(runner.invoke(app, args + ["-f", "json"]))
        assert data["display"] == "3 + 6t"
        assert data["coeff"] == "Z3"

    def test_surface_presentation_file(self, runner, tmp_path):
        path = tmp_path / "reversed.json"
        path.write_text(json.dumps(TWIST_SPUN_TREFOIL_REVERSED.to_json()))
        args = ["invariant", "surface", "-P", str(path), "-q", "R3", "-c", "eta1", "-f", "json"]
        data = _json(runner.invoke(app, args))
        assert data["display"] == "3 + 6t^2"
        assert data["input"] == "reversed"

    def test_surface_needs_exactly_one_source(self, runner, tmp_path):
        assert runner.invoke(
            app, ["invariant", "surface", "-q", "R3", "-c", "eta1"]
        ).exit_code == EXIT_USAGE

    def test_triple_linking(self, runner, tmp_path):
        path = tmp_path / "linked.json"
        path.write_text(json.dumps(TripleLinkingData.from_ab(1, 0).to_json()))
        data = _json(runner.invoke(app, ["invariant", "triple-linking", str(path), "-f", "json"]))
        assert data["valid"] is True
        assert data["ab"] == [1, 0]
        assert data["invariant"] == {"coeff": "Z", "terms": {"-1": 2, "0": 23, "1": 2}}

    def test_triple_linking_violation(self, runner, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"n": 3, "values": {"1,2,1": 1}}))
        result = runner.invoke(app, ["invariant", "triple-linking", str(path)])
        assert result.exit_code == EXIT_VALIDATION


class TestReproduce:
    def _rows(self, status):
        return [CheckResult("knots", "Φ(3_1)", "4 + 12t", "4 + 12t", status, 0.01)]

    def test_all_rows_pass(self, runner, mocker, tmp_path):
        mocker.patch("quandle_lab.cli.main.run_acceptance", return_value=self._rows(RowStatus.PASS))
        report = tmp_path / "report.md"
        result = runner.invoke(app, ["reproduce", "--report", str(report)])
        assert result.exit_code == 0
        assert "1/1 rows passed" in report.read_text()

    def test_mismatch_exit_code(self, runner, mocker):
        mocker.patch("quandle_lab.cli.main.run_acceptance", return_value=self._rows(RowStatus.FAIL))
        result = runner.invoke(app, ["reproduce"])
        assert result.exit_code == EXIT_MISMATCH

    def test_threads_option_reaches_runner(self, runner, mocker):
        run = mocker.patch(
            "quandle_lab.cli.main.run_acceptance", return_value=self._rows(RowStatus.PASS)
        )
        runner.invoke(app, ["reproduce", "-j", "3"])
        run.assert_called_once_with(3)

    def test_save_writes_into_reports_dir(self, runner, mocker, isolated_config, tmp_path):
        reports = tmp_path / "reports"
        isolated_config.write_text(f"reports_dir: {reports}\n")
        mocker.patch("quandle_lab.cli.main.run_acceptance", return_value=self._rows(RowStatus.PASS))
        result = runner.invoke(app, ["reproduce", "--save"])
        assert result.exit_code == 0
        assert "1/1 rows passed" in (reports / "reproduce.md").read_text()

    def test_explicit_report_wins_over_save(self, runner, mocker, isolated_config, tmp_path):
        isolated_config.write_text(f"reports_dir: {tmp_path / 'reports'}\n")
        mocker.patch("quandle_lab.cli.main.run_acceptance", return_value=self._rows(RowStatus.PASS))
        report = tmp_path / "elsewhere.md"
        runner.invoke(app, ["reproduce", "--save", "--report", str(report)])
        assert report.exists()
        assert not (tmp_path / "reports").exists()


class TestEntryPoint:
    @pytest.mark.parametrize(
        "argv, code",
        [
            (["cohomology", "group", "--bogus"], EXIT_USAGE),
            (["invariant", "knot", "-b", "3_1", "-q", "R3", "-c", "chi(0,1)"], EXIT_VALIDATION),
            (["quandle", "show", "R3"], 0),
        ],
    )
    def test_exit_codes(self, monkeypatch, argv, code):
        monkeypatch.setattr(sys, "argv", ["quandle-lab", *argv])
        with pytest.raises(SystemExit) as excinfo:
            cli_main()
        assert excinfo.value.code == code
