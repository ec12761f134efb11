"""Tests for the command-line interface.

Commands are exercised through ``fracpois.cli.main`` with captured
stdout/stderr rather than subprocesses, keeping the suite fast; one
test drives the installed console script end to end.
"""

import csv
import io
import json
import math
import subprocess
import sys

import numpy as np
import pytest
from numpy.testing import assert_allclose

from fracpois.cli import OutputRecord, build_parser, main


def run_cli(argv, capsys):
    """Invoke main() and return (exit_code, stdout, stderr)."""
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(argv, capsys):
    """Invoke main(), require success, and parse the JSON records."""
    code, out, err = run_cli(argv, capsys)
    assert code == 0, err
    return json.loads(out)


class TestOutputRecord:
    def test_as_dict_shape(self):
        rec = OutputRecord(x=1.0, y=2.0, meta={"command": "eval"})
        assert rec.as_dict() == {"x": 1.0, "y": 2.0,
                                 "meta": {"command": "eval"}}

    def test_meta_defaults_to_empty(self):
        assert OutputRecord(x=0.0, y=0.0).meta == {}


class TestEval:
    def test_ml_at_zero_is_one(self, capsys):
        records = run_json(["eval", "ml", "--alpha", "1", "--beta", "1",
                            "--x", "0"], capsys)
        assert records[0]["x"] == 0.0
        assert records[0]["y"] == 1.0
        assert records[0]["meta"]["command"] == "eval"
        assert records[0]["meta"]["provenance"] in ("series", "integral")

    def test_ml_exponential_grid(self, capsys):
        records = run_json(["eval", "ml", "--alpha", "1", "--beta", "1",
                            "--x", "-1", "0.5", "2"], capsys)
        got = [r["y"] for r in records]
        assert_allclose(got, [math.exp(-1), math.exp(0.5), math.exp(2)],
                        rtol=1e-12)

    def test_gml_negative_argument(self, capsys):
        records = run_json(["eval", "gml", "--alpha", "1", "--beta", "3",
                            "--gamma", "3", "--x", "-1"], capsys)
        assert_allclose(records[0]["y"], 0.18393972058572114, rtol=1e-10)

    def test_gml_meta_parameters(self, capsys):
        records = run_json(["eval", "gml", "--alpha", "0.5", "--beta", "1",
                            "--gamma", "2", "--x", "0.25"], capsys)
        params = records[0]["meta"]["parameters"]
        assert params["function"] == "gml"
        assert params["alpha"] == 0.5
        assert params["gamma"] == 2.0

    def test_wright_m_density_value(self, capsys):
        records = run_json(["eval", "wright", "--lam", "-0.5", "--beta",
                            "0.5", "--x", "-1"], capsys)
        assert_allclose(records[0]["y"], 0.43939128946772243, rtol=1e-10)

    def test_large_negative_argument_routes_to_integral(self, capsys):
        records = run_json(["eval", "ml", "--alpha", "0.5", "--beta", "1",
                            "--x", "-40"], capsys)
        assert records[0]["meta"]["provenance"] == "integral"
        assert 0.0 < records[0]["y"] < 0.05

    def test_invalid_alpha_exits_2(self, capsys):
        code, _, err = run_cli(["eval", "ml", "--alpha", "-1", "--beta",
                                "1", "--x", "0"], capsys)
        assert code == 2
        assert "invalid parameter" in err


class TestDistPmf:
    def test_classical_k_max(self, capsys):
        records = run_json(["dist", "--n", "1", "--nu", "1", "--lambda",
                            "1", "pmf", "--t", "1", "--k-max", "3"], capsys)
        assert [r["x"] for r in records] == [0.0, 1.0, 2.0, 3.0]
        expected = [math.exp(-1) / math.factorial(k) for k in range(4)]
        assert_allclose([r["y"] for r in records], expected, rtol=1e-12)

    def test_fractional_single_k(self, capsys):
        records = run_json(["dist", "--n", "1", "--nu", "0.5", "--lambda",
                            "1", "pmf", "--t", "1", "--k", "0"], capsys)
        assert len(records) == 1
        assert_allclose(records[0]["y"], 0.42758357615580694, rtol=1e-10)

    def test_meta_carries_model_parameters(self, capsys):
        records = run_json(["dist", "--n", "2", "--nu", "0.7", "--lambda",
                            "1.5", "pmf", "--t", "0.5", "--k", "1"], capsys)
        params = records[0]["meta"]["parameters"]
        assert params["n"] == 2
        assert params["nu"] == 0.7
        assert params["lam"] == 1.5
        assert params["quantity"] == "pmf"
        assert params["t"] == 0.5

    def test_k_and_k_max_together_exits_2(self, capsys):
        code, _, err = run_cli(["dist", "--n", "1", "--nu", "0.5",
                                "--lambda", "1", "pmf", "--t", "1",
                                "--k", "0", "--k-max", "3"], capsys)
        assert code == 2
        assert "exactly one" in err

    def test_neither_k_nor_k_max_exits_2(self, capsys):
        code, _, _ = run_cli(["dist", "--n", "1", "--nu", "0.5",
                              "--lambda", "1", "pmf", "--t", "1"], capsys)
        assert code == 2

    def test_bad_model_order_exits_2(self, capsys):
        code, _, err = run_cli(["dist", "--n", "0", "--nu", "0.5",
                                "--lambda", "1", "pmf", "--t", "1",
                                "--k", "0"], capsys)
        assert code == 2
        assert "invalid parameter" in err


class TestDistOtherQuantities:
    def test_wtpdf_matches_library(self, capsys):
        from fracpois import ProcessSpec, waiting_time_pdf
        records = run_json(["dist", "--n", "2", "--nu", "0.6", "--lambda",
                            "1", "wtpdf", "--k", "1", "--t", "0.5", "1.0",
                            "2.0"], capsys)
        spec = ProcessSpec(2, 0.6, 1.0)
        expected = [waiting_time_pdf(spec, 1, t) for t in (0.5, 1.0, 2.0)]
        assert_allclose([r["y"] for r in records], expected, rtol=1e-12)

    def test_wtcdf_monotone(self, capsys):
        records = run_json(["dist", "--n", "1", "--nu", "0.5", "--lambda",
                            "1", "wtcdf", "--k", "1", "--t", "0.5", "1",
                            "2", "4"], capsys)
        values = [r["y"] for r in records]
        assert all(b >= a for a, b in zip(values, values[1:]))
        assert 0.0 <= values[0] and values[-1] <= 1.0

    def test_iapdf_classical(self, capsys):
        records = run_json(["dist", "--n", "1", "--nu", "1", "--lambda",
                            "2", "iapdf", "--t", "0.5", "1.0"], capsys)
        expected = [2 * math.exp(-2 * t) for t in (0.5, 1.0)]
        assert_allclose([r["y"] for r in records], expected, rtol=1e-12)

    def test_pgf_at_one_is_one(self, capsys):
        records = run_json(["dist", "--n", "2", "--nu", "0.6", "--lambda",
                            "1", "pgf", "--t", "1.5", "--u", "0.2", "0.5",
                            "1.0"], capsys)
        assert [r["x"] for r in records] == [0.2, 0.5, 1.0]
        assert_allclose(records[-1]["y"], 1.0, atol=1e-12)

    def test_renewal_order2_classical(self, capsys):
        records = run_json(["dist", "--n", "2", "--nu", "1", "--lambda",
                            "1", "renewal", "--t", "1"], capsys)
        expected = 0.5 + 0.25 * (math.exp(-2.0) - 1.0)
        assert_allclose(records[0]["y"], expected, rtol=1e-12)

    def test_moments_default_orders(self, capsys):
        records = run_json(["dist", "--n", "1", "--nu", "0.6", "--lambda",
                            "2", "moments", "--t", "1.0"], capsys)
        assert [r["x"] for r in records] == [1.0, 2.0, 3.0]
        from fracpois import ProcessSpec, factorial_moment
        spec = ProcessSpec(1, 0.6, 2.0)
        expected = [factorial_moment(spec, r, 1.0) for r in (1, 2, 3)]
        assert_allclose([r["y"] for r in records], expected, rtol=1e-12)

    def test_renewal_order3_without_formula_exits_3(self, capsys):
        code, _, err = run_cli(["dist", "--n", "3", "--nu", "0.5",
                                "--lambda", "1", "renewal", "--t", "1"],
                               capsys)
        assert code in (2, 3)
        assert err


class TestSimulateCommand:
    def test_record_families_and_se(self, capsys):
        records = run_json(["simulate", "--n", "1", "--nu", "1",
                            "--lambda", "1", "--horizon", "2",
                            "--paths", "1500", "--seed", "7"], capsys)
        stats = [r["meta"]["parameters"]["statistic"] for r in records]
        assert stats.count("mean") == 1
        assert stats.count("pmf") == len(records) - 1
        for rec in records:
            assert rec["meta"]["provenance"] == "simulation"
            assert rec["meta"]["se"] >= 0.0
        mean_rec = records[-1]
        assert mean_rec["meta"]["parameters"]["statistic"] == "mean"
        assert abs(mean_rec["y"] - mean_rec["meta"]["analytic"]) \
            <= 4.0 * mean_rec["meta"]["se"]

    def test_pmf_records_match_analytic_within_bands(self, capsys):
        records = run_json(["simulate", "--n", "1", "--nu", "0.5",
                            "--lambda", "1", "--horizon", "1",
                            "--paths", "4000", "--seed", "11"], capsys)
        for rec in records:
            if rec["meta"]["parameters"]["statistic"] != "pmf":
                continue
            if rec["meta"]["analytic"] * 4000 < 25:
                continue
            assert abs(rec["y"] - rec["meta"]["analytic"]) \
                <= 4.0 * rec["meta"]["se"] + 1e-12

    def test_probe_times_override_horizon(self, capsys):
        records = run_json(["simulate", "--n", "1", "--nu", "1",
                            "--lambda", "1", "--horizon", "2",
                            "--paths", "200", "--seed", "5",
                            "--probe", "0.5", "1.5"], capsys)
        probe_ts = {r["meta"]["parameters"]["probe_t"] for r in records}
        assert probe_ts == {0.5, 1.5}

    def test_deterministic_given_seed(self, capsys):
        argv = ["simulate", "--n", "2", "--nu", "0.7", "--lambda", "1",
                "--horizon", "1", "--paths", "300", "--seed", "42"]
        first = run_json(argv, capsys)
        second = run_json(argv, capsys)
        assert first == second

    def test_out_writes_jsonl(self, capsys, tmp_path):
        out = tmp_path / "paths.jsonl"
        run_json(["simulate", "--n", "1", "--nu", "0.5", "--lambda", "1",
                  "--horizon", "1", "--paths", "50", "--seed", "1",
                  "--out", str(out)], capsys)
        lines = out.read_text().strip().split("\n")
        assert len(lines) == 50
        first = json.loads(lines[0])
        assert "events" in first and "horizon" in first

    def test_mean_analytic_present_only_for_low_order(self, capsys):
        records = run_json(["simulate", "--n", "3", "--nu", "1",
                            "--lambda", "1", "--horizon", "1",
                            "--paths", "100", "--seed", "2"], capsys)
        mean_rec = [r for r in records
                    if r["meta"]["parameters"]["statistic"] == "mean"][0]
        assert "analytic" not in mean_rec["meta"]

    def test_bad_paths_exits_2(self, capsys):
        code, _, _ = run_cli(["simulate", "--n", "1", "--nu", "0.5",
                              "--lambda", "1", "--horizon", "1",
                              "--paths", "0", "--seed", "1"], capsys)
        assert code == 2


class TestVerifyCommand:
    def test_only_filter_returns_matching_reports(self, capsys):
        code, out, _ = run_cli(["verify", "--only", "ml-recurrence"],
                               capsys)
        assert code == 0
        rows = json.loads(out)
        assert len(rows) >= 2
        assert all("ml-recurrence" in row["name"] for row in rows)
        assert all(row["pass"] for row in rows)

    def test_report_schema(self, capsys):
        _, out, _ = run_cli(["verify", "--only", "renewal-forms"], capsys)
        row = json.loads(out)[0]
        assert set(row) == {"name", "lhs", "rhs", "abs_err", "rel_err",
                            "tol", "pass"}

    def test_csv_format(self, capsys):
        code, out, _ = run_cli(["verify", "--only", "ml-kernel-laplace",
                                "--format", "csv"], capsys)
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 3
        assert all(float(r["abs_err"]) <= float(r["tol"]) for r in rows)

    def test_impossible_tol_exits_1(self, capsys):
        code, out, _ = run_cli(["verify", "--only", "ml-kernel-laplace",
                                "--tol", "1e-18"], capsys)
        assert code == 1
        rows = json.loads(out)
        assert any(not row["pass"] for row in rows)

    def test_no_matching_checks_passes_vacuously(self, capsys):
        code, out, _ = run_cli(["verify", "--only",
                                "no-such-check-name"], capsys)
        assert code == 0
        assert json.loads(out) == []


class TestOutputFormats:
    def test_json_round_trips(self, capsys):
        _, out, _ = run_cli(["dist", "--n", "1", "--nu", "0.5", "--lambda",
                             "1", "pmf", "--t", "1", "--k-max", "2"],
                            capsys)
        records = json.loads(out)
        assert json.loads(json.dumps(records)) == records
        for rec in records:
            assert set(rec) == {"x", "y", "meta"}
            assert {"command", "parameters",
                    "provenance"} <= set(rec["meta"])

    def test_all_values_finite_unless_flagged(self, capsys):
        records = run_json(["dist", "--n", "2", "--nu", "0.6", "--lambda",
                            "1", "wtpdf", "--k", "1", "--t", "0.1", "1",
                            "10"], capsys)
        for rec in records:
            if not rec["meta"].get("divergent"):
                assert math.isfinite(rec["y"])

    def test_csv_header_starts_with_x_y(self, capsys):
        _, out, _ = run_cli(["dist", "--n", "1", "--nu", "1", "--lambda",
                             "1", "pmf", "--t", "1", "--k-max", "1",
                             "--format", "csv"], capsys)
        header = out.splitlines()[0].split(",")
        assert header[:2] == ["x", "y"]
        assert "provenance" in header

    def test_csv_values_match_json(self, capsys):
        argv = ["dist", "--n", "1", "--nu", "0.5", "--lambda", "1",
                "pmf", "--t", "1", "--k-max", "2"]
        json_records = run_json(argv, capsys)
        _, out, _ = run_cli(argv + ["--format", "csv"], capsys)
        csv_rows = list(csv.DictReader(io.StringIO(out)))
        assert len(csv_rows) == len(json_records)
        for rec, row in zip(json_records, csv_rows):
            assert float(row["x"]) == rec["x"]
            assert_allclose(float(row["y"]), rec["y"], rtol=1e-15)

    def test_provenance_vocabulary(self, capsys):
        records = run_json(["dist", "--n", "1", "--nu", "0.5", "--lambda",
                            "1", "pmf", "--t", "1", "--k-max", "3"],
                           capsys)
        for rec in records:
            assert rec["meta"]["provenance"] in (
                "series", "integral", "simulation", "quadrature")


class TestExitCodes:
    def test_usage_error_exits_2(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["eval", "ml", "--alpha", "1"])
        assert excinfo.value.code == 2

    def test_unknown_command_exits_2(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["frobnicate"])
        assert excinfo.value.code == 2

    def test_numerical_failure_exits_3(self, capsys, monkeypatch):
        monkeypatch.setenv("FRACPOIS_MAX_TERMS", "12")
        code, _, err = run_cli(["eval", "ml", "--alpha", "0.5", "--beta",
                                "1", "--x", "25"], capsys)
        assert code == 3
        assert "numerical failure" in err

    def test_success_exits_0(self, capsys):
        code, _, _ = run_cli(["eval", "ml", "--alpha", "1", "--beta", "1",
                              "--x", "1"], capsys)
        assert code == 0


class TestMaxTermsEnv:
    def test_env_override_restored_after_run(self, capsys, monkeypatch):
        from fracpois import special
        before = special._DEF_SERIES
        monkeypatch.setenv("FRACPOIS_MAX_TERMS", "5000")
        code, _, _ = run_cli(["eval", "ml", "--alpha", "0.5", "--beta",
                              "1", "--x", "25"], capsys)
        assert code == 0
        assert special._DEF_SERIES is before

    def test_env_default_budget_sufficient(self, capsys, monkeypatch):
        monkeypatch.delenv("FRACPOIS_MAX_TERMS", raising=False)
        code, _, _ = run_cli(["eval", "ml", "--alpha", "0.5", "--beta",
                              "1", "--x", "25"], capsys)
        assert code == 0

    def test_non_integer_env_exits_2(self, capsys, monkeypatch):
        monkeypatch.setenv("FRACPOIS_MAX_TERMS", "many")
        code, _, err = run_cli(["eval", "ml", "--alpha", "1", "--beta",
                                "1", "--x", "0"], capsys)
        assert code == 2
        assert "FRACPOIS_MAX_TERMS" in err


class TestConsoleScript:
    def test_module_invocation_end_to_end(self):
        proc = subprocess.run(
            [sys.executable, "-m", "fracpois", "dist", "--n", "1", "--nu",
             "1", "--lambda", "1", "pmf", "--t", "1", "--k-max", "1"],
            capture_output=True, text=True)
        assert proc.returncode == 0
        records = json.loads(proc.stdout)
        assert_allclose(records[0]["y"], math.exp(-1), rtol=1e-12)


class TestParserShape:
    def test_subcommands_registered(self):
        parser = build_parser()
        args = parser.parse_args(["verify"])
        assert args.command == "verify"
        assert args.only is None and args.tol is None

    def test_lambda_stored_as_lam(self):
        parser = build_parser()
        args = parser.parse_args(["dist", "--n", "1", "--nu", "0.5",
                                  "--lambda", "2.5", "pmf", "--t", "1",
                                  "--k", "0"])
        assert args.lam == 2.5

    def test_simulate_defaults(self):
        parser = build_parser()
        args = parser.parse_args(["simulate", "--n", "1", "--nu", "0.5",
                                  "--lambda", "1", "--horizon", "1",
                                  "--paths", "10"])
        assert args.seed == 0
        assert args.probe is None
        assert args.out is None
        assert args.format == "json"
