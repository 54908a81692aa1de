import json
import subprocess
import sys
from pathlib import Path

import pytest

from tests.test_acceptance import _run_cli

CASES = json.loads((Path(__file__).parent / "golden" / "cli_cases.json").read_text())
G22 = ["--m", "2", "--n", "2"]


@pytest.mark.parametrize("case", CASES, ids=lambda c: " ".join(c["args"][4:]) or "empty")
def test_golden(case):
    assert _run_cli(case["args"]) == (case["exit"], case["stdout"])


def json_out(*args):
    code, out = _run_cli(G22 + ["--json", *args])
    return code, json.loads(out)


def test_normalize_examples():
    assert json_out("normalize", "a^2 b^2 a^-2 b^-2") == (0, {
        "schema": 1, "group": {"m": 2, "n": 2, "t": None},
        "normal": "", "length": 1, "syllables": [], "tail": [0, 0],
    })
    code, out = json_out("normalize", "a b")
    assert code == 0 and out["normal"] == "a b" and out["length"] == 2
    code, out = json_out("normalize", "a^0")
    assert code == 0 and out["normal"] == ""


def test_conj_examples():
    assert json_out("conj", "a b", "b a") == (0, {"schema": 1, "verdict": "conjugate", "conjugator": "a"})
    code, out = json_out("conj", "a", "b")
    assert code == 1 and out["verdict"] == "non_conjugate" and "certificate" in out
    assert json_out("conj", "a b", "a b") == (0, {"schema": 1, "verdict": "conjugate", "conjugator": ""})


def test_witness_examples():
    code, out = json_out("--minimize", "witness", "a", "a^-1")
    assert code == 0 and out["certificate"]["t"] == 2
    assert json_out("witness", "a b", "b a") == (4, {"schema": 1, "verdict": "conjugate", "conjugator": "a"})


@pytest.mark.parametrize("pair", [("a", "a^-1"), ("a b", "a b^-1"), ("a b^6 a b", "a b"), ("a b", "a")])
def test_emitted_certificates_verify(pair):
    code, out = json_out("witness", *pair)
    assert code == 0
    t = str(out["certificate"]["t"])
    assert json_out("verify", *pair, t) == (0, {"schema": 1, "t": int(t), "verified": True})


def test_exit_codes():
    assert _run_cli(G22 + ["normalize", "a^"])[0] == 2
    assert _run_cli(["--m", "2", "normalize", "a"])[0] == 3
    assert _run_cli(G22 + ["--cap", "0", "normalize", "a"])[0] == 3
    assert _run_cli(G22 + ["--cap", "1", "witness", "a", "a^5"])[0] == 5
    assert _run_cli(G22 + ["eq", "a", "b"])[0] == 1


def test_console_script():
    proc = subprocess.run(
        [sys.executable, "-m", "gmnconj", *G22, "conj", "a b", "b a"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "conjugate\nconjugator: a\n"
