import json
import subprocess
import sys
from pathlib import Path

import pytest

from heckeform.cli import main

REPO = Path(__file__).resolve().parent.parent
TESTDATA = REPO / "testdata"


def run_cli(*argv):
    proc = subprocess.run([sys.executable, "-m", "heckeform.cli", *argv],
                          capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def test_gram_symbolic_shape():
    code, out, _ = run_cli("gram", "--lambda", "2,1")
    assert code == 0
    data = json.loads(out)
    assert data["lambda"] == "2,1"
    assert len(data["matrix"]) == 2 and len(data["matrix"][0]) == 2
    assert data["matrix"][0][0] == {"0": 1, "1": 1}


def test_gram_hermitian():
    code, out, _ = run_cli("gram", "--lambda", "2", "--c", "1/3", "--hermitian")
    assert code == 0
    data = json.loads(out)
    assert len(data["matrix"]) == 1
    assert "alpha" in data


def test_gram_sign_module():
    code, out, _ = run_cli("gram", "--lambda", "1,1,1")
    data = json.loads(out)
    assert data["matrix"] == [[{"0": 1}]]


def test_unitary_verdicts():
    code, out, _ = run_cli("unitary", "--lambda", "3,1", "--c", "1/4")
    assert code == 0 and json.loads(out)["status"] == "NonzeroUnitary"
    code, out, _ = run_cli("unitary", "--lambda", "3,1", "--c", "1/3")
    assert code == 0 and json.loads(out)["status"] == "NonzeroNotUnitary"
    code, out, _ = run_cli("unitary", "--lambda", "1,1", "--c", "1/2")
    assert code == 0 and json.loads(out)["status"] == "NonzeroUnitary"


def test_locus_agreement_exit_codes():
    code, out, _ = run_cli("locus", "--lambda", "2,2", "--bound", "12")
    assert code == 0 and json.loads(out)["agreement"] is True
    # a shape with a known divergence from the closed-form locus exits 1
    code, out, _ = run_cli("locus", "--lambda", "4,1", "--bound", "12")
    assert code == 1 and json.loads(out)["agreement"] is False


def test_verify_smoke():
    code, out, _ = run_cli("verify", "--n-max", "3", "--threads", "1")
    assert code == 0
    data = json.loads(out)
    assert data["agreement"] is True and len(data["shapes"]) == 5


def test_usage_errors_exit_2():
    code, _, err = run_cli("unitary", "--lambda", "3,1")
    assert code == 2
    code, _, err = run_cli("unitary", "--lambda", "fish", "--c", "1/3")
    assert code == 2
    code, _, err = run_cli("nonsense")
    assert code == 2
    code, _, err = run_cli("verify", "--n-max", "6", "--bound", "4")
    assert code == 2


def test_resource_guard_exit_3():
    code, _, err = run_cli("det", "--lambda", "9,1,1")
    assert code == 3
    code, _, err = run_cli("verify", "--n-max", "9")
    assert code == 3


def test_element_dump(tmp_path):
    out_file = tmp_path / "el.json"
    code, out, _ = run_cli("element", "--lambda", "2,1", "--kind", "m",
                           "--dump-element", str(out_file))
    assert code == 0
    data = json.loads(out_file.read_text())
    assert data["terms"] == [{"word": "1,2,3", "coeff": {"0": 1}},
                             {"word": "2,1,3", "coeff": {"0": 1}}]
    code, out, _ = run_cli("element", "--lambda", "3", "--kind", "jm:2")
    assert code == 0
    assert json.loads(out)["terms"]


def test_determinism_across_threads_and_runs():
    _, out1, _ = run_cli("verify", "--n-max", "3", "--threads", "1")
    _, out2, _ = run_cli("verify", "--n-max", "3", "--threads", "4")
    _, out3, _ = run_cli("verify", "--n-max", "3", "--threads", "2")
    assert out1 == out2 == out3


def test_json_round_trip_under_schema():
    code, out, _ = run_cli("locus", "--lambda", "2,1", "--bound", "8")
    data = json.loads(out)
    assert set(data) == {"lambda", "predicted", "points", "agreement"}
    for p in data["points"]:
        assert set(p) == {"c", "status", "signature"}
        assert len(p["signature"]) == 3


@pytest.mark.parametrize("rel,args", [
    ("gram/2/2.json", ("gram", "--lambda", "2")),
    ("gram/3/2,1.json", ("gram", "--lambda", "2,1")),
    ("gram/4/3,1.json", ("gram", "--lambda", "3,1")),
    ("gram/4/2,2.json", ("gram", "--lambda", "2,2")),
    ("golden/unitary_31_quarter.json", ("unitary", "--lambda", "3,1", "--c", "1/4")),
    ("golden/locus_21_bound8.json", ("locus", "--lambda", "2,1", "--bound", "8")),
    ("golden/det_21.json", ("det", "--lambda", "2,1")),
    ("golden/jantzen_31_quarter.json", ("jantzen", "--lambda", "3,1", "--c", "1/4")),
    ("golden/locus_21_bound8.csv",
     ("locus", "--lambda", "2,1", "--bound", "8", "--format", "csv")),
])
def test_golden_outputs(rel, args):
    code, out, _ = run_cli(*args)
    assert code == 0
    assert out == (TESTDATA / rel).read_text()


def test_main_entry_point_importable():
    assert main(["unitary", "--lambda", "2", "--c", "1/3"]) == 0
