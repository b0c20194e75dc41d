import csv
import io
import json
import math
import subprocess
import sys
from pathlib import Path

import pytest

from chainfib.cli import export_domain, real, run

GOLDEN = Path(__file__).parent / "golden"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, _ = call(*argv, "--format", "json")
    return code, json.loads(out)


def test_magic_record():
    code, rec = call_json("magic", "class", "5", "5", "3")
    assert code == 0
    assert rec["command"] == "magic class"
    r = rec["result"]
    assert (r["norm"], r["boundaries"], r["genus"], r["primitive"]) == (7, 3, 3, True)
    assert set(rec) == {"command", "inputs", "result", "provenance"}


def test_chain_record():
    code, rec = call_json("chain", "class", "2", "2", "2", "1", "1", "1")
    assert code == 0 and rec["result"]["type"] == "S_{2,7}"


def test_stretch_record():
    code, rec = call_json("stretch", "--n", "6")
    r = rec["result"]
    assert code == 0
    assert r["lambda"] == pytest.approx(4 + math.sqrt(15), rel=1e-11)
    assert r["exact_form"] == [8, 60]
    assert r["entropy"] == pytest.approx(math.log(4 + math.sqrt(15)), rel=1e-11)
    assert r["trace"] == 8


def test_stretch_word_and_mu():
    code, rec = call_json("stretch", "--word", "A B^-1", "--mu", "1")
    assert code == 0
    assert rec["result"]["kind"] == "hyperbolic"
    assert rec["result"]["lambda"] == pytest.approx((3 + math.sqrt(5)) / 2, rel=1e-11)
    code, rec = call_json("stretch", "--word", "A", "--mu", "2.5")
    assert rec["result"]["kind"] == "parabolic"
    assert not rec["result"]["pseudo_anosov"]


def test_format_before_or_after_subcommand():
    a = call("--format", "json", "target", "--k", "5", "--g", "2", "--n", "6")
    b = call("target", "--k", "5", "--g", "2", "--n", "6", "--format", "json")
    assert a == b and a[0] == 0
    assert json.loads(a[1])["result"]["class"] == [2, 2, 1, 1, 1, 1]


def test_seq_and_family():
    code, rec = call_json("seq", "--m", "1", "--pad", "0", "--i", "2", "--t", "2")
    assert rec["result"]["class"] == [3, 3, 2, 2, 2, 2]
    assert rec["result"]["type"] == "S_{4,8}" and rec["result"]["matches_claim"]
    code, rec = call_json("family", "--id", "PlanarA", "--k", "2")
    assert rec["result"]["class"] == [3, 4, 0] and rec["result"]["type"] == "S_{0,9}"


def test_bounds_outside_domain_is_not_an_error():
    code, rec = call_json("bounds", "--k", "3", "--g", "2", "--n", "6")
    assert code == 0
    assert rec["result"]["in_theorem_domain"] is False
    assert rec["result"]["upper"] is None
    assert rec["result"]["failed_conditions"] == ["n <= 2k-4g+6"]


@pytest.mark.parametrize("argv, kind", [
    (["magic", "class", "1", "0", "0"], "OutsideCone"),
    (["magic", "class", "4", "4", "2"], "NotPrimitive"),
    (["chain", "class", "1", "1", "0", "1"], "OutsideCone"),
    (["target", "--k", "5", "--g", "2", "--n", "9"], "DomainError"),
    (["family", "--id", "ThreeBdry3", "--k", "4"], "ExcludedResidue"),
    (["stretch", "--n", "3"], "DomainError"),
    (["bounds", "--k", "1", "--g", "0", "--n", "2"], "NonHyperbolicSurface"),
])
def test_model_errors_exit_1(argv, kind):
    code, rec = call_json(*argv)
    assert code == 1
    assert rec["result"]["error"]["type"] == kind


def test_domain_error_lists_conditions():
    code, rec = call_json("target", "--k", "5", "--g", "2", "--n", "9")
    assert rec["result"]["error"]["failed"] == ["n <= 2k-4g+6"]


@pytest.mark.parametrize("argv", [
    [],
    ["magic", "class", "1", "2"],
    ["magic", "class", "a", "b", "c"],
    ["seq"],
    ["bounds", "--k", "1"],
    ["stretch", "--mu", "x", "--word", "A"],
    ["domain", "--g", "1", "--max-k", "3"],
    ["seq", "--m", "0"],
    ["family", "--id", "Nope", "--k", "1"],
    ["magic", "class", "1", "1", "0", "--format", "xml"],
])
def test_usage_errors_exit_2(argv):
    code, out, _ = call(*argv)
    assert code == 2
    assert out == ""


def test_domain_export():
    rows = export_domain(2, 7)
    pairs = {(r["k"], r["n"]) for r in rows}
    assert {(5, 6), (7, 8)} <= pairs and (3, 6) not in pairs
    assert {(r["k"], r["n"]) for r in export_domain(3, 8)} >= {(8, 9)}
    code, out, _ = call("domain", "--g", "2", "--max-k", "7", "--format", "csv")
    parsed = list(csv.DictReader(io.StringIO(out)))
    assert len(parsed) == len(rows)
    assert list(parsed[0]) == ["k", "n", "chi_abs", "upper", "lower"]
    for row in parsed:
        k, n = int(row["k"]), int(row["n"])
        chi = 2 * 2 - 2 + n
        assert float(row["upper"]) == pytest.approx(2 * (k + 1) * math.log(k + 3) / chi, rel=1e-11)


def test_json_round_trip():
    for argv in (["magic", "class", "5", "5", "3"], ["stretch", "--n", "6"],
                 ["domain", "--g", "3", "--max-k", "12"], ["bounds", "--k", "9", "--g", "3", "--n", "10"]):
        _, out, _ = call(*argv, "--format", "json")
        assert json.dumps(json.loads(out), sort_keys=True, indent=2) + "\n" == out


def test_reals_are_rounded():
    assert real(math.pi) == 3.14159265359
    assert real(1 / 3) == 0.333333333333


def test_out_writes_payload(tmp_path):
    target = tmp_path / "rec.json"
    code, out, _ = call("stretch", "--n", "6", "--format", "json", "--out", str(target))
    assert code == 0 and out == ""
    _, direct, _ = call("stretch", "--n", "6", "--format", "json")
    assert target.read_text() == direct


@pytest.mark.parametrize("name, argv", [
    ("magic_5_5_3.json", ["magic", "class", "5", "5", "3", "--format", "json"]),
    ("chain_2_2_2_1_1_1.txt", ["chain", "class", "2", "2", "2", "1", "1", "1"]),
    ("stretch_6.json", ["stretch", "--n", "6", "--format", "json"]),
    ("domain_g2_k7.csv", ["domain", "--g", "2", "--max-k", "7", "--format", "csv"]),
    ("bounds_3_2_6.json", ["bounds", "--k", "3", "--g", "2", "--n", "6", "--format", "json"]),
    ("family_excluded.json", ["family", "--id", "ThreeBdry3", "--k", "4", "--format", "json"]),
])
def test_golden(name, argv):
    _, out, _ = call(*argv)
    assert out == (GOLDEN / name).read_text()


def test_verify_subset():
    code, rec = call_json("verify", "--only", "core.gcd0", "--only", "bounds.domain_nonempty")
    assert code == 0 and rec["result"]["passed"]
    assert [r["name"] for r in rec["result"]["rows"]] == ["core.gcd0", "bounds.domain_nonempty"]
    code, _, err = call("verify", "--only", "no.such.check")
    assert code == 2 and "unknown check" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "chainfib", "magic", "class", "5", "5", "3", "--format", "csv"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0, proc.stderr
    (rec,) = csv.DictReader(io.StringIO(proc.stdout))
    assert rec["type"] == "S_{3,3}" and rec["norm"] == "7"
    proc = subprocess.run([sys.executable, "-m", "chainfib", "bogus"], capture_output=True, text=True)
    assert proc.returncode == 2
