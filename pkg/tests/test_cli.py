import csv
import io
import json
import subprocess
import sys

import pytest

from fps_exact.cli import run
from fps_exact.identities import REGISTRY


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def test_bernoulli_csv():
    code, out = call("bernoulli", "--max", "4", "--method", "determinant", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["n,value", "0,1", "1,-1/2", "2,1/6", "3,0", "4,-1/30"]


def test_bernoulli_json():
    code, out = call("bernoulli", "--max", "2", "--format", "json")
    assert json.loads(out) == ["1", "-1/2", "1/6"]


def test_det_all():
    assert call("det", "--band", "1,3,5", "--alg", "all") == (0, "4 (all methods agree)\n")
    assert call("det", "--band", "1,2,3,4", "--alg", "trudi") == (0, "0\n")


def test_pow_from_file(tmp_path):
    path = tmp_path / "f.json"
    path.write_text(json.dumps({"order": 2, "coeffs": ["1", "1", "1/2"]}))
    code, out = call("pow", "--series", str(path), "--k", "3", "--alg", "closed")
    assert code == 0
    assert out.splitlines()[1:] == ["0,1", "1,3", "2,9/2"]
    code, out = call("pow", "--series", str(path), "--k", "-2", "--alg", "all", "--order", "4")
    assert code == 0
    assert out.splitlines()[-1] == "# all algorithms agree: miller,closed,deriv"
    assert len(out.splitlines()) == 1 + 5 + 1


def test_inv_both():
    code, out = call("inv", "--coeffs", "1,1", "--order", "3", "--alg", "both")
    assert code == 0
    assert out.splitlines()[1:5] == ["0,1", "1,-1", "2,1", "3,-1"]


def test_non_invertible_exits_1(capsys):
    assert call("inv", "--coeffs", "0,1")[0] == 1
    assert call("pow", "--coeffs", "0,1", "--k", "-1")[0] == 1
    assert "zero" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        ["pow", "--coeffs", "1,x", "--k", "2"],
        ["pow", "--k", "2"],
        ["pow", "--coeffs", "1,1", "--k", "-1", "--alg", "hat"],
        ["det", "--band", "1,,2"],
        ["bernoulli", "--max", "-1"],
        ["bernoulli", "--max", "3", "--bogus"],
        ["verify", "--id", "nope"],
        ["verify", "--k-range", "3..1"],
        ["bench", "--order-range", "2..3", "--algs", "fast"],
        ["frobnicate"],
        [],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    assert call(*argv)[0] == 2


def test_bad_series_file(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"order": 3, "coeffs": ["1"]}')
    assert call("pow", "--series", str(path), "--k", "1")[0] == 2
    assert call("pow", "--series", str(tmp_path / "missing.json"), "--k", "1")[0] == 2


def test_tables():
    code, out = call("stirling", "--max", "4", "--method", "paper")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "k", "value"] and ["4", "2", "7"] in rows
    code, out = call("partition", "--max", "5", "--method", "determinant")
    assert out.splitlines() == ["n,p", "0,1", "1,1", "2,2", "3,3", "4,5", "5,7"]
    assert call("genbernoulli", "--m", "2", "--max", "1", "--method", "multinomial-pos")[1].splitlines()[-1] == "1,-1"
    assert call("powersum", "--m", "5", "--n", "10", "--method", "stirling") == (0, "220825\n")


def test_verify_small_and_deterministic():
    args = ["verify", "--suite", "all", "--max-n", "8", "--k-range", "-3..3"]
    code, out = call(*args)
    assert code == 0
    assert out.endswith("reports passed\n")
    for identity in REGISTRY:
        assert f"# {identity}: checked=" in out
    assert call(*args, "--jobs", "4") == (0, out)
    assert call(*args, "--seed", "5")[0] == 0


def test_verify_single_identity():
    code, out = call("verify", "--id", "genb_ladder", "--max-n", "5", "--k-range=-2..2")
    assert code == 0
    assert "# genb_ladder: checked=20 passed=20 flagged=0" in out


def test_verify_flags_but_passes():
    code, out = call("verify", "--id", "genb_split_recurrences", "--max-n", "4")
    assert code == 0
    first = json.loads(out.splitlines()[0])
    assert first["pass"] and first["flagged"]


def test_bench_cli():
    code, out = call("bench", "--order-range", "3..5", "--k", "2", "--repeats", "1", "--omit-time",
                     "--backend", "python", "--algs", "miller,closed")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 6 and set(rows[0]) == {"algorithm", "backend", "order", "k", "term_count"}


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "fps_exact", "det", "--band", "1,3,5", "--alg", "all"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "4 (all methods agree)\n"
