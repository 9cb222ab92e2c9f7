import json
import subprocess
import sys

import pytest

from hjext.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_witness_constant(capsys, tmp_path):
    out_path = tmp_path / "w.json"
    code, _, _ = run(capsys, "witness", "--N", "3", "--sigma", "2", "--family", "ap:1", "--coloring", "const:1", "--out", str(out_path))
    assert code == 0
    cert = json.loads(out_path.read_text())
    assert cert["kind"] == "witness"
    assert cert["witness"] == {"alpha": "{}", "gamma": [3], "F": [1, 2], "color": 1}
    code, out, _ = run(capsys, "verify", str(out_path))
    assert code == 0 and out.startswith("verified")


def test_verify_tampered(capsys, tmp_path):
    path = tmp_path / "w.json"
    run(capsys, "witness", "--N", "3", "--sigma", "2", "--family", "ap:1", "--coloring", "const:1", "--out", str(path))
    obj = json.loads(path.read_text())
    obj["coloring"][obj["coloring"].index(1, 1)] = 2  # keep r=1 so colour 2 is out of range
    path.write_text(json.dumps(obj, sort_keys=True) + "\n")
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 1 and out.startswith("refuted")


def test_witness_pullback_none(capsys):
    # N=1 has no room for an extended line
    code, _, _ = run(capsys, "witness", "--N", "2", "--sigma", "2", "--family", "ap:1", "--coloring", "mod:2:1,2")
    assert code == 1


def test_min_n(capsys, tmp_path):
    path = tmp_path / "m.json"
    code, out, _ = run(capsys, "min-n", "--sigma", "1", "--r", "1", "--family", "ap:1", "--nmax", "5", "--out", str(path))
    assert code == 0 and out.strip() == "3"
    assert run(capsys, "verify", str(path))[0] == 0
    code, out, _ = run(capsys, "min-n", "--sigma", "2", "--r", "2", "--family", "ap:1", "--nmax", "3")
    assert code == 1 and "exceeded" in out


def test_reduce(capsys):
    assert run(capsys, "reduce", "--kind", "affine", "--A", "1", "--D", "2", "--word", "{1:1,2:1}")[1].strip() == "15"
    assert run(capsys, "reduce", "--kind", "multiplicative", "--word", "{2:3}")[1].strip() == "8"
    assert run(capsys, "reduce", "--kind", "additive", "--word", "{}")[1].strip() == "1"
    assert run(capsys, "reduce", "--kind", "affine", "--word", "{1:1}")[0] == 3


def test_export_cnf(capsys, tmp_path):
    code, out, _ = run(capsys, "export-cnf", "--N", "1", "--sigma", "2", "--r", "2", "--family", "plain")
    assert code == 0
    assert out.splitlines()[0] == "p cnf 6 8"
    path = tmp_path / "x.cnf"
    run(capsys, "export-cnf", "--N", "1", "--sigma", "2", "--r", "2", "--family", "plain", "--cnf", str(path))
    assert path.read_text() == out


def test_counterexample(capsys, tmp_path):
    path = tmp_path / "g.json"
    code, _, _ = run(capsys, "counterexample", "--K", "2", "--A", "1", "--D", "1-2", "--out", str(path))
    assert code == 0
    assert json.loads(path.read_text())["kind"] == "grid_partition"
    assert run(capsys, "verify", str(path))[0] == 0
    assert run(capsys, "counterexample", "--K", "2", "--i-range", "0,1")[0] == 3


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--N", "1", "--sigma", "2")
    assert code == 0 and out.split() == ["{}", "{1:0}", "{1:1}"]
    code, out, _ = run(capsys, "enumerate", "--N", "3", "--sigma", "1", "--lines", "--family", "ap:1")
    assert len(out.splitlines()) == 3


@pytest.mark.parametrize("check", ["associativity", "phi", "adequacy", "invariance", "pws"])
def test_laws(capsys, check):
    code, out, _ = run(capsys, "laws", "--check", check, "--samples", "40", "--N", "3")
    assert code == 0
    json.loads(out)


def test_laws_deterministic(capsys):
    a = run(capsys, "laws", "--check", "pws", "--samples", "30", "--seed", "9")
    b = run(capsys, "laws", "--check", "pws", "--samples", "30", "--seed", "9")
    assert a == b


def test_resource_limit(capsys):
    code, _, err = run(capsys, "enumerate", "--N", "12", "--sigma", "2", "--cap", "100")
    assert code == 2 and "resource limit" in err


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as info:
        main(["witness", "--N", "3"])
    assert info.value.code == 3
    assert run(capsys, "witness", "--N", "3", "--sigma", "2", "--family", "bogus", "--coloring", "const:1")[0] == 3


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hjext", "reduce", "--kind", "multiplicative", "--word", "{3:2}"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "9"
