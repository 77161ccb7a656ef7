"""CLI surface: flags, output formats, exit codes, determinism."""

import json
import subprocess
import sys

import pytest

from partition_diamonds.cli import DEFAULT_SEED, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_coeffs_sd_json(capsys):
    code, out, _ = run_cli(capsys, "coeffs", "--series", "sd",
                           "--d", "1", "--N", "6")
    assert code == 0
    payload = json.loads(out)
    assert payload["ring"] == "Z"
    assert payload["coeffs"] == ["1", "2", "5", "10", "20", "36"]


def test_coeffs_rd_minimal(capsys):
    code, out, _ = run_cli(capsys, "coeffs", "--series", "rd",
                           "--d", "2", "--N", "1", "--format", "plain")
    assert code == 0
    assert out.strip() == "0 1"


def test_coeffs_sd_forced_value(capsys):
    code, out, _ = run_cli(capsys, "coeffs", "--series", "sd",
                           "--d", "3", "--N", "2", "--format", "plain")
    assert code == 0
    assert out.splitlines() == ["0 1", "1 8"]


def test_coeffs_mod_reduction(capsys):
    code, out, _ = run_cli(capsys, "coeffs", "--series", "sd", "--d", "1",
                           "--N", "5", "--mod", "5", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["ring"] == {"mod": 5}
    assert payload["coeffs"] == ["1", "2", "0", "0", "0"]


def test_coeffs_csv_quotes_values(capsys):
    code, out, _ = run_cli(capsys, "coeffs", "--series", "sd", "--d", "4",
                           "--N", "30", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == '"index","coefficient"'
    # big coefficients stay quoted strings, safe from float mangling
    assert all('"' in line.split(",")[1] for line in lines[1:])


def test_coeffs_ddn_requires_length(capsys):
    code, _, err = run_cli(capsys, "coeffs", "--series", "ddn",
                           "--d", "2", "--N", "5")
    assert code == 2
    assert "requires --n" in err


def test_usage_error_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["coeffs", "--series", "nope", "--d", "1"])
    assert exc.value.code == 2


def test_identities_eulerian(capsys):
    code, out, _ = run_cli(capsys, "identities", "--only", "eulerian",
                           "--d-max", "12")
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] is True
    assert payload["checks"][0]["name"] == "eulerian"


def test_identities_omega_deterministic(capsys):
    args = ("identities", "--only", "omega", "--instances", "40",
            "--seed", "7")
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    detail = json.loads(out1)["checks"][0]["detail"]
    assert detail["instances"] == 40
    assert detail["failures"] == []


def test_identities_quick_suite(capsys):
    code, out, _ = run_cli(capsys, "identities", "--N", "60",
                           "--instances", "25", "--d-max", "8")
    assert code == 0
    payload = json.loads(out)
    names = [c["name"] for c in payload["checks"]]
    assert names == ["eulerian", "euler-factor", "pentagonal", "jacobi",
                     "mersmann", "omega", "crude"]
    assert payload["passed"] is True


def test_oracle_kinds(capsys):
    for extra in (("--kind", "sd", "--d", "2", "--N", "12"),
                  ("--kind", "rd", "--d", "1", "--N", "10"),
                  ("--kind", "ddn", "--d", "2", "--n", "2", "--N", "10")):
        code, out, _ = run_cli(capsys, "oracle", *extra)
        assert code == 0
        assert json.loads(out)["equal"] is True


def test_oracle_budget_exit_2(capsys):
    code, _, err = run_cli(capsys, "oracle", "--kind", "rd", "--d", "3",
                           "--N", "40", "--budget", "10")
    assert code == 2
    assert "budget" in err.lower()


def test_verify_list_and_single_claim(capsys):
    code, out, _ = run_cli(capsys, "verify", "--list")
    assert code == 0
    assert "mod11" in out and "mod7_6k2_r45" in out
    code, out, _ = run_cli(capsys, "verify", "--claim", "mod5_4k1_r2",
                           "--k-max", "1", "--n-max", "8")
    assert code == 0
    report = json.loads(out)["reports"][0]
    assert report["status"] == "verified"
    assert report["witness"] is None


def test_verify_conjecture_status(capsys):
    code, out, _ = run_cli(capsys, "verify", "--claim", "mod7_6k2_r31",
                           "--k-max", "0", "--n-max", "3")
    assert code == 0
    report = json.loads(out)["reports"][0]
    assert report["status"] == "conjecture-held"
    assert report["claim"]["conjectural"] is True


def test_verify_unknown_claim(capsys):
    code, _, err = run_cli(capsys, "verify", "--claim", "nope")
    assert code == 2
    assert "nope" in err


def test_scan_plain_matches_known_progressions(capsys):
    code, out, _ = run_cli(capsys, "scan", "--series", "sd", "--d", "1",
                           "--m", "5", "--M-max", "6", "--N", "500",
                           "--format", "plain")
    assert code == 0
    assert out.splitlines() == ["5 2", "5 3", "5 4"]


def test_scan_json_shape(capsys):
    code, out, _ = run_cli(capsys, "scan", "--series", "sd", "--d", "2",
                           "--m", "2", "--M-max", "4", "--N", "200")
    assert code == 0
    payload = json.loads(out)
    assert {"M": 2, "r": 1} in payload["progressions"]


def test_default_seed_is_64_bit():
    assert 0 < DEFAULT_SEED < 1 << 64


def test_d_capped_at_64(capsys):
    code, _, err = run_cli(capsys, "coeffs", "--series", "sd",
                           "--d", "65", "--N", "3")
    assert code == 2
    assert "capped" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "partition_diamonds", "coeffs", "--series",
         "sd", "--d", "1", "--N", "3", "--format", "plain"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines() == ["0 1", "1 2", "2 5"]
