import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from regulus.cli import RunConfig, parse_range, run

GOLDEN = Path(__file__).parent / "golden"
CASES = json.loads((GOLDEN / "cases.json").read_text())


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden_files(name):
    code, out, _ = call(*CASES[name])
    assert out == (GOLDEN / name).read_text()
    assert code == (1 if "probe" in name else 0)


def test_expand_partition_numbers():
    code, out, _ = call("expand", "--spec", "1^-1", "--n", "10")
    rows = json.loads(out)["results"]
    assert [r["coefficient"] for r in rows] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_psi_support_from_expand():
    _, out, _ = call("expand", "--spec", "psi", "--n", "10")
    rows = json.loads(out)["results"]
    assert [r["n"] for r in rows if r["coefficient"]] == [0, 1, 3, 6, 10]


def test_builtin_names_match_eta_quotients():
    _, a, _ = call("expand", "--spec", "b5", "--n", "30", "--format", "csv")
    _, b, _ = call("expand", "--spec", "5^1,1^-1", "--n", "30", "--format", "csv")
    assert a == b


def test_probe_row():
    code, out, _ = call(*CASES["family_combined4_probe.json"])
    row = json.loads(out)["results"][0]
    assert code == 1
    assert row["counterexample"] == {"n": 0, "argument": 5, "residue": 6,
                                     "exact_value": 6, "oracle_value": 6}


def test_output_is_identical_across_worker_counts():
    argv = ["verify-family", "--id", "fp-mod3", "--alpha", "0..1", "--count", "100"]
    _, one, _ = call(*argv)
    _, four, _ = call(*argv, "--jobs", "4")
    assert one == four


def test_timing_is_opt_in():
    _, out, _ = call("expand", "--spec", "p", "--n", "3")
    assert json.loads(out)["timing_ms"] is None
    _, out, _ = call("expand", "--spec", "p", "--n", "3", "--timing")
    assert isinstance(json.loads(out)["timing_ms"], float)


@pytest.mark.parametrize("argv,code", [
    (["verify-identity", "--id", "f-dissect:4"], 2),
    (["verify-identity", "--id", "nonsense"], 2),
    (["verify-identity", "--id", "jtp:1"], 2),
    (["verify-identity", "--id", "psi-dissect:7", "--n", "10"], 2),
    (["expand", "--spec", "5^x"], 2),
    (["expand", "--spec", "psi", "--mod", "1"], 2),
    (["search", "--function", "b5", "--mod", "2", "--a-max", "0"], 2),
    (["verify-family", "--id", "b2-even-i", "--p", "5", "--alpha", "0"], 2),
    (["verify-family", "--id", "b2-even-j", "--p", "7", "--i", "1"], 2),
    (["verify-family", "--id", "b2-even-j", "--p", "7", "--j", "0"], 2),
    (["verify-family", "--id", "no-such-entry"], 2),
    (["verify-family", "--id", "b13-even-i", "--p", "13", "--alpha", "2"], 3),
    (["expand", "--spec", "p", "--n", "1000", "--max-truncation", "100"], 3),
    (["verify-family", "--id", "ped-3", "--count", "10", "--max-count", "5"], 3),
    (["bogus"], 2),
])
def test_exit_codes(argv, code):
    got, out, err = call(*argv)
    assert got == code
    assert out == ""
    assert err


def test_env_var_cap(monkeypatch):
    monkeypatch.setenv("REGULUS_MAX_TRUNCATION", "50")
    code, _, err = call("expand", "--spec", "p", "--n", "60")
    assert code == 3 and "cap" in err
    assert call("expand", "--spec", "p", "--n", "60", "--max-truncation", "100")[0] == 0


def test_partial_scan_flag():
    argv = ["verify-family", "--id", "b13-even-i", "--p", "13", "--i", "1", "--count", "200",
            "--partial", "--max-truncation", "300000"]
    # 114244 n + 23068 fits three terms below the cap
    code, out, _ = call(*argv, "--alpha", "1")
    row = json.loads(out)["results"][0]
    assert code == 0 and row["capped"] and row["n_checked"] == 3
    # at alpha = 2 even n = 0 is past the cap
    code, out, _ = call(*argv, "--alpha", "2")
    row = json.loads(out)["results"][0]
    assert code == 3 and row["outcome"] == "not_scanned"


def test_verify_identity_reports_match():
    code, out, _ = call("verify-identity", "--id", "quintuple:1:2", "--n", "200")
    assert code == 0 and json.loads(out)["results"][0]["matched"]


def test_text_format_runs():
    code, out, _ = call("support", "--function", "psi", "--p", "7", "--format", "text")
    assert code == 0 and "special_class=6" in out


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig(fmt="xml")
    with pytest.raises(ValueError):
        RunConfig(max_count=0)
    with pytest.raises(ValueError):
        RunConfig(jobs=0)


def test_parse_range():
    assert parse_range("0..2") == [0, 1, 2]
    assert parse_range("3") == [3]
    assert parse_range(None) == [None]
    with pytest.raises(ValueError):
        parse_range("2..1")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "regulus", "expand", "--spec", "p", "--n", "4",
                           "--format", "csv"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "n,coefficient\n0,1\n1,1\n2,2\n3,3\n4,5\n"
