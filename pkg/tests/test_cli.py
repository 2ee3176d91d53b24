"""Command line behavior: outputs, formats, exit codes, and report schema."""

import json
import os
from pathlib import Path

import jsonschema
import pytest

from apery.cli import main, parse_range

SCHEMA = json.loads(
    (Path(__file__).resolve().parent.parent / "schema" / "report.schema.json").read_text()
)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_report(capsys, *argv):
    code, out, err = run_cli(capsys, *argv, "--format", "json")
    payload = json.loads(out)
    jsonschema.validate(payload, SCHEMA)
    return code, payload


class TestParseRange:
    def test_basic(self):
        assert parse_range("-10..10") == (-10, 10)
        assert parse_range("0..5") == (0, 5)

    def test_rejects_garbage(self):
        for bad in ("10", "a..b", "5..1"):
            with pytest.raises(ValueError):
                parse_range(bad)


class TestAperyCommand:
    def test_value(self, capsys):
        assert run_cli(capsys, "apery", "4") == (0, "33001\n", "")

    def test_negative_argument(self, capsys):
        assert run_cli(capsys, "apery", "-1") == (0, "1\n", "")

    def test_modulus(self, capsys):
        assert run_cli(capsys, "apery", "7", "--mod", "25") == (0, "15\n", "")

    def test_modulus_fast_paths_match_exact(self, capsys):
        # prime, prime square, and generic modulus must agree
        from apery.sequence import apery

        for mod in ("13", "169", "1000"):
            code, out, _ = run_cli(capsys, "apery", "123", "--mod", mod)
            assert code == 0
            assert int(out) == apery(123) % int(mod)

    def test_json(self, capsys):
        code, out, _ = run_cli(capsys, "apery", "6", "--format", "json")
        assert code == 0
        assert json.loads(out) == {"n": 6, "value": "21460825"}

    def test_bad_modulus(self, capsys):
        code, _, err = run_cli(capsys, "apery", "3", "--mod", "1")
        assert code == 2 and "error" in err

    def test_malformed_n(self, capsys):
        code, _, _ = run_cli(capsys, "apery", "x")
        assert code == 2

    def test_prints_values_beyond_interpreter_digit_cap(self, capsys):
        code, out, _ = run_cli(capsys, "apery", "3000")
        assert code == 0
        assert len(out.strip()) > 4300 and out.strip().isdigit()


class TestAperydCommand:
    def test_integer_value(self, capsys):
        assert run_cli(capsys, "aperyd", "3") == (0, "4438/1\n", "")

    def test_fractional_value(self, capsys):
        assert run_cli(capsys, "aperyd", "5") == (0, "13276637/5\n", "")

    def test_negative_rejected(self, capsys):
        code, _, err = run_cli(capsys, "aperyd", "-2")
        assert code == 2 and "n >= 0" in err


class TestDigitsCommand:
    def test_single_prime(self, capsys):
        assert run_cli(capsys, "digits", "7") == (0, "7: 0 2 3 4 6\n", "")

    def test_p2(self, capsys):
        assert run_cli(capsys, "digits", "2") == (0, "2: 0 1\n", "")

    def test_composite_rejected(self, capsys):
        code, _, err = run_cli(capsys, "digits", "9")
        assert code == 2 and "not prime" in err

    def test_scan_plain(self, capsys):
        code, out, _ = run_cli(capsys, "digits", "--scan", "30", "--min-size", "4")
        assert code == 0
        assert out == "7: 0 2 3 4 6\n23: 0 7 11 15 22\n"

    def test_scan_csv(self, capsys):
        code, out, _ = run_cli(
            capsys, "digits", "--scan", "30", "--min-size", "4", "--format", "csv"
        )
        assert code == 0
        assert out.splitlines() == ["p,digits", "7,0 2 3 4 6", "23,0 7 11 15 22"]

    def test_scan_json(self, capsys):
        code, out, _ = run_cli(
            capsys, "digits", "--scan", "10", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert {"p": 7, "digits": [0, 2, 3, 4, 6]} in payload["digit_sets"]

    def test_workers_do_not_change_bytes(self, capsys):
        _, out1, _ = run_cli(capsys, "digits", "--scan", "60", "--workers", "1")
        _, out4, _ = run_cli(capsys, "digits", "--scan", "60", "--workers", "4")
        assert out1 == out4

    def test_missing_arguments(self, capsys):
        code, _, err = run_cli(capsys, "digits")
        assert code == 2


class TestCsvRestriction:
    def test_csv_only_for_digit_scans(self, capsys):
        for argv in (["apery", "3"], ["aperyd", "3"], ["taylor", "2"], ["eval", "1"]):
            code, _, err = run_cli(capsys, *argv, "--format", "csv")
            assert code == 2
            assert "csv" in err


class TestTaylorCommand:
    def test_term_listing(self, capsys):
        code, out, _ = run_cli(capsys, "taylor", "5", "--terms")
        assert code == 0
        assert out == "(3,2): -4\n"

    def test_exact(self, capsys):
        assert run_cli(capsys, "taylor", "1", "--exact", "--N", "40") == (0, "0/1\n", "")

    def test_default_is_exact(self, capsys):
        code, out, _ = run_cli(capsys, "taylor", "0")
        assert code == 0 and out == "1/1\n"

    def test_float(self, capsys):
        import math

        code, out, _ = run_cli(capsys, "taylor", "2", "--float", "--N", "10000")
        assert code == 0
        assert abs(float(out) - math.pi**2 / 6) < 1e-6

    def test_json_combined(self, capsys):
        code, out, _ = run_cli(
            capsys, "taylor", "4", "--terms", "--exact", "--N", "20", "--format", "json"
        )
        payload = json.loads(out)
        assert payload["m"] == 4
        assert payload["terms"] == [
            {"composition": [2, 2], "coefficient": "-2"},
            {"composition": [4], "coefficient": "1"},
        ]
        assert "/" in payload["exact"]

    def test_negative_m(self, capsys):
        code, _, _ = run_cli(capsys, "taylor", "-3")
        assert code == 2


class TestEvalCommand:
    def test_integer_point(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "1", "--terms", "10")
        assert code == 0 and float(out) == 5.0

    def test_complex_point(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "0.25+0.25j", "--terms", "1000")
        assert code == 0 and "j" in out

    def test_json_carries_residual(self, capsys):
        code, out, _ = run_cli(
            capsys, "eval", "-0.5", "--terms", "5000", "--format", "json"
        )
        payload = json.loads(out)
        assert payload["terms"] == 5000
        assert payload["residual"] < 1e-6

    def test_bad_point(self, capsys):
        code, _, err = run_cli(capsys, "eval", "zebra")
        assert code == 2


class TestVerifyCommand:
    def test_unknown_theorem(self, capsys):
        code, _, _ = run_cli(capsys, "verify", "pumpkin")
        assert code == 2

    def test_lucas_p(self, capsys):
        code, payload = run_report(capsys, "verify", "lucas-p", "--p", "7", "--n", "-10..10")
        assert code == 0
        assert payload["pass"] and payload["checked"] == 7 * 21

    def test_gessel_p2(self, capsys):
        code, payload = run_report(capsys, "verify", "gessel-p2", "--p", "5", "--n", "-6..6")
        assert code == 0 and payload["pass"]

    def test_p3_suite(self, capsys):
        for p in ("2", "3", "5"):
            code, payload = run_report(capsys, "verify", "p3-suite", "--p", p, "--n", "-6..6")
            assert code == 0 and payload["pass"]

    def test_digitset(self, capsys):
        code, payload = run_report(capsys, "verify", "digitset-p2", "--p", "7")
        assert code == 0
        assert payload["conclusive"]
        assert sorted({w["d"] for w in payload["witnesses"]}) == [1, 5]

    def test_digitset_inconclusive_exits_nonzero(self, capsys):
        code, payload = run_report(
            capsys, "verify", "digitset-p2", "--p", "5", "--n", "0..0"
        )
        assert code == 1
        assert payload["pass"] and not payload["conclusive"]

    def test_corollary(self, capsys):
        code, payload = run_report(
            capsys, "verify", "corollary", "--p", "5", "--depth", "3"
        )
        assert code == 0 and payload["pass"]

    def test_lucas_p3(self, capsys):
        code, payload = run_report(
            capsys, "verify", "lucas-p3", "--p", "5", "--depth", "3"
        )
        assert code == 0 and payload["pass"]

    def test_taylor_identity(self, capsys):
        code, payload = run_report(
            capsys, "verify", "taylor-identity", "--m", "1..6", "--N", "12"
        )
        assert code == 0 and payload["pass"]
        assert [c["label"] for c in payload["checks"]] == [f"m={m}" for m in range(1, 7)]

    def test_reduced_forms(self, capsys):
        code, payload = run_report(capsys, "verify", "reduced-forms", "--N", "2000")
        assert code == 0 and payload["pass"]
        twelve = [c for c in payload["checks"] if c["label"] == "m=12"]
        assert twelve and twelve[0]["asserted"] is False
        assert "residual" in twelve[0]

    def test_stuffle(self, capsys):
        code, payload = run_report(capsys, "verify", "stuffle", "--N", "2000", "--tol", "1e-5")
        assert code == 0 and payload["pass"]
        assert len(payload["checks"]) == 6

    def test_functional_eq(self, capsys):
        code, payload = run_report(
            capsys, "verify", "functional-eq", "--z", "0.5", "--terms", "20000", "--tol", "1e-3"
        )
        assert code == 0 and payload["pass"]

    def test_jacobsthal(self, capsys):
        code, payload = run_report(capsys, "verify", "jacobsthal", "--p", "7")
        assert code == 0 and payload["pass"]

    def test_wolstenholme(self, capsys):
        code, payload = run_report(capsys, "verify", "wolstenholme", "--p", "13")
        assert code == 0 and payload["pass"]

    def test_missing_p(self, capsys):
        code, _, err = run_cli(capsys, "verify", "lucas-p")
        assert code == 2 and "--p" in err

    def test_bad_tolerance(self, capsys):
        code, _, _ = run_cli(capsys, "verify", "stuffle", "--tol", "-1")
        assert code == 2


class TestCacheCommand:
    def test_fill_info_verify(self, capsys, tmp_path):
        path = str(tmp_path / "a.cache")
        code, out, _ = run_cli(capsys, "cache", "fill", "--n", "0..30", "--cache", path)
        assert code == 0 and "records=31" in out
        code, out, _ = run_cli(capsys, "cache", "info", "--cache", path)
        assert code == 0 and "n_max=30" in out
        code, out, _ = run_cli(capsys, "cache", "verify", "--cache", path)
        assert code == 0

    def test_fill_merges(self, capsys, tmp_path):
        path = str(tmp_path / "a.cache")
        run_cli(capsys, "cache", "fill", "--n", "0..5", "--cache", path)
        run_cli(capsys, "cache", "fill", "--n", "10..12", "--cache", path)
        code, out, _ = run_cli(capsys, "cache", "info", "--cache", path)
        assert code == 0 and "records=9" in out

    def test_env_var_supplies_path(self, capsys, tmp_path, monkeypatch):
        path = str(tmp_path / "a.cache")
        monkeypatch.setenv("APERY_CACHE", path)
        code, _, _ = run_cli(capsys, "cache", "fill", "--n", "0..3")
        assert code == 0 and os.path.exists(path)

    def test_corrupt_cache_reports_line(self, capsys, tmp_path):
        path = tmp_path / "a.cache"
        run_cli(capsys, "cache", "fill", "--n", "0..10", "--cache", str(path))
        path.write_text(path.read_text().replace("\n2\t73\n", "\n2\t93\n"))
        code, _, err = run_cli(capsys, "cache", "verify", "--cache", str(path))
        assert code == 2 and "line 4" in err

    def test_fill_needs_range(self, capsys, tmp_path):
        code, _, err = run_cli(capsys, "cache", "fill", "--cache", str(tmp_path / "c"))
        assert code == 2 and "--n" in err

    def test_needs_path(self, capsys, monkeypatch):
        monkeypatch.delenv("APERY_CACHE", raising=False)
        code, _, err = run_cli(capsys, "cache", "info")
        assert code == 2 and "APERY_CACHE" in err

    def test_commands_accept_cache(self, capsys, tmp_path):
        path = str(tmp_path / "a.cache")
        run_cli(capsys, "cache", "fill", "--n", "0..50", "--cache", path)
        code, out, _ = run_cli(capsys, "apery", "40", "--cache", path)
        from apery.sequence import apery

        assert code == 0 and int(out) == apery(40)


class TestConfigFile:
    def test_config_defaults_flags_win(self, capsys, tmp_path, monkeypatch):
        config = tmp_path / "config.json"
        config.write_text(json.dumps({"format": "json"}))
        monkeypatch.setenv("APERY_CONFIG", str(config))
        # config default applies
        code, out, _ = run_cli(capsys, "apery", "2")
        assert code == 0 and json.loads(out)["value"] == "73"
        # an explicit flag overrides it
        code, out, _ = run_cli(capsys, "apery", "2", "--format", "plain")
        assert code == 0 and out == "73\n"

    def test_bad_config(self, capsys, tmp_path, monkeypatch):
        config = tmp_path / "config.json"
        config.write_text("[1, 2]")
        monkeypatch.setenv("APERY_CONFIG", str(config))
        code, _, err = run_cli(capsys, "apery", "2")
        assert code == 2


def test_help_exits_zero(capsys):
    code, out, _ = run_cli(capsys, "--help")
    assert code == 0
    for sub in ("apery", "aperyd", "digits", "verify", "taylor", "eval", "cache"):
        assert sub in out
