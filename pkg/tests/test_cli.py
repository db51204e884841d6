import json
import subprocess
import sys

import pytest

from hornkron.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_lr(capsys):
    assert run(capsys, "lr", "--alpha", "2,1", "--beta", "2,1", "--gamma", "3,2,1") == (0, "2\n", "")
    code, out, _ = run(capsys, "lr", "--alpha", "2,1", "--beta", "2,1", "--gamma", "3,2,1", "--oracle", "--json")
    assert json.loads(out) == {"value": 2}


def test_kron(capsys):
    assert run(capsys, "kron", "--alpha", "2,1", "--beta", "2,1", "--gamma", "2,1")[:2] == (0, "1\n")
    code, out, _ = run(capsys, "kron", "--enumerate", "2", "2", "3", "--nmax", "2", "--json")
    assert code == 0 and len(json.loads(out)) == 5
    code, out, _ = run(capsys, "kron", "--enumerate", "2", "2", "3", "--nmax", "2", "--csv")
    assert out.splitlines()[0] == "alpha,beta,gamma,n,g"


def test_ineq_verify(capsys):
    code, out, _ = run(capsys, "ineq", "verify", "--e", "2", "--f", "2", "--nmax", "8", "--json")
    assert code == 0 and json.loads(out) == {"violations": []}
    code, out, _ = run(capsys, "ineq", "verify", "--e", "1", "--f", "1", "--nmax", "4", "--flipped", "--json")
    assert code == 1 and json.loads(out)["violations"]


def test_ineq_list_and_certificate(capsys):
    code, out, _ = run(capsys, "ineq", "list", "--e", "2", "--f", "2", "--json")
    assert code == 0 and len(json.loads(out)) == 1 + 2 + 5 + 2 + 2
    assert run(capsys, "ineq", "certificate", "--e", "2", "--f", "2", "--j", "2")[0] == 0
    assert run(capsys, "ineq", "certificate", "--e", "2", "--f", "2", "--j", "2", "--row", "e+j", "--partner", "weyl_kron")[0] == 1


def test_reduce(capsys):
    code, out, _ = run(capsys, "reduce", "murnaghan", "--alpha", "2,1", "--beta", "3", "--gamma", "2,1")
    assert (code, out) == (0, "1\n")
    code, out, _ = run(capsys, "reduce", "horn", "--alpha", "3", "--beta", "3", "--gamma", "3", "--e", "2", "--f", "2",
                       "--I", "{1}/2", "--J", "{1}/2", "--K", "{2,3}/4", "--json", "--verbose")
    assert json.loads(out)["value"] == 1 and len(json.loads(out)["terms"]) == 1
    code, out, _ = run(capsys, "reduce", "weyl", "--alpha", "2,1", "--beta", "2,1", "--gamma", "1,1,1", "--e", "1", "--f", "1", "--j", "2")
    assert (code, out) == (0, "1\n")
    code, out, _ = run(capsys, "reduce", "final", "--alpha", "2", "--beta", "1,1", "--gamma", "1,1", "--e", "1", "--f", "1", "--j", "2")
    assert (code, out) == (0, "1\n")


def test_dimensions(capsys):
    code, out, _ = run(capsys, "cone-dim", "--e", "1", "--f", "1", "--nmax", "8", "--json")
    assert code == 0 and json.loads(out)["rank"] == 5
    code, out, _ = run(capsys, "face-dim", "--e", "1", "--f", "1", "--family", "murnaghan", "--nmax", "8", "--json")
    assert code == 0 and json.loads(out)["rank"] == 4
    code, _, _ = run(capsys, "face-dim", "--e", "2", "--f", "2", "--family", "comparison", "--j", "2", "--nmax", "10")
    assert code == 1
    code, out, _ = run(capsys, "minimality", "--e", "1", "--f", "1", "--nmax", "8", "--json")
    assert code == 0 and all(r["pass"] for r in json.loads(out))


def test_misc(capsys):
    code, out, _ = run(capsys, "char", "--n", "3", "--json")
    data = json.loads(out)
    assert data["partitions"] == [[3], [2, 1], [1, 1, 1]]
    assert data["values"][1] == [-1, 0, 2]
    assert run(capsys, "char", "--lam", "2,1", "--rho", "1,1,1")[1] == "2\n"
    code, out, _ = run(capsys, "horn-triples", "--e", "2", "--f", "2", "--r", "1", "--s", "1")
    assert out.splitlines()[0] == "I={1} J={1} K={1,4} r=1 s=1 c=1"
    assert run(capsys, "membership", "--alpha", "2", "--beta", "-", "--gamma", "1,1", "--e", "2", "--f", "2")[1] == "false\n"
    code, out, _ = run(capsys, "stretch", "--alpha", "2,1", "--beta", "2,1", "--gamma", "3,2,1", "--N", "5", "--e", "2", "--f", "2", "--json")
    assert json.loads(out) == {"values": [2, 3, 4, 5, 6], "degree": 1, "stable": True, "bound": 1}


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["lr", "--alpha", "1,2", "--beta", "1", "--gamma", "2"])
    assert exc.value.code == 2
    assert "--alpha" in capsys.readouterr().err
    code, _, err = run(capsys, "reduce", "weyl", "--alpha", "2", "--beta", "2", "--gamma", "2", "--e", "1", "--f", "1")
    assert code == 2 and "--j" in err
    code, _, err = run(capsys, "reduce", "murnaghan", "--alpha", "3,1", "--beta", "3,1", "--gamma", "4")
    assert code == 2 and err.count("\n") == 1
    code, _, err = run(capsys, "horn-triples", "--e", "2", "--f", "2", "--r", "0", "--s", "1")
    assert code == 2


def test_deterministic_output():
    argv = [sys.executable, "-m", "hornkron.cli", "kron", "--enumerate", "2", "2", "3", "--nmax", "4", "--json"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second and first


def test_cache_flag(tmp_path, capsys):
    code, out, _ = run(capsys, "kron", "--alpha", "2,1", "--beta", "2,1", "--gamma", "2,1", "--cache", str(tmp_path))
    assert code == 0 and out == "1\n"
