import json

import pytest

from ilsreconf.cli import run


@pytest.fixture
def files(tmp_path):
    eq3 = tmp_path / "eq3.ils"
    eq3.write_text("2 2 2\n1 -1 >= 0\n-1 1 >= 0\n")
    chain = tmp_path / "chain.ils"
    assert run(["gen", "chain", "2", "2", "-o", str(chain)]) == 0
    return tmp_path, str(eq3), str(chain)


def test_index(files, capsys):
    _, eq3, _ = files
    assert run(["index", eq3]) == 0
    out = capsys.readouterr().out.split()
    assert out[:2] == ["1", "ExactlyOne"]
    assert run(["index", eq3, "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["z"] == "1" and data["alpha"] == ["1/2", "1/2"]


def test_solve_no_then_certify(files, capsys):
    tmp, eq3, _ = files
    cert = tmp / "c.txt"
    assert run(["solve", eq3, "--from", "0 0", "--to", "2 2", "--witness", str(cert)]) == 1
    assert capsys.readouterr().out.strip() == "NO"
    assert cert.read_text().startswith("certificate v1")
    assert run(["certify", eq3, "--from", "0 0", "--to", "2 2", "--witness", str(cert)]) == 0
    assert "VALID certificate" in capsys.readouterr().out


def test_solve_yes_then_certify(files, capsys):
    tmp, _, chain = files
    w = tmp / "w.txt"
    assert run(["solve", chain, "--from", "0 0", "--to", "2 2", "--witness", str(w)]) == 0
    assert capsys.readouterr().out.strip() == "YES"
    assert run(["certify", chain, "--from", "0 0", "--to", "2 2", "--witness", str(w)]) == 0
    for method in ("oracle", "ils1", "zlt1"):
        code = run(["solve", chain, "--from", "0 0", "--to", "2 2", "--method", method, "--witness", str(w)])
        if method == "zlt1":
            assert code == 2  # index is not below one
            continue
        assert code == 0
        assert run(["certify", chain, "--from", "0 0", "--to", "2 2", "--witness", str(w)]) == 0
    w.write_text("0 0\n2 2\n")
    assert run(["certify", chain, "--from", "0 0", "--to", "2 2", "--witness", str(w)]) == 1


def test_oracle_and_stats(files, capsys):
    _, eq3, chain = files
    assert run(["oracle", eq3, "--from", "1 1", "--to", "1 1", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["answer"] == "YES"
    assert run(["stats", eq3]) == 0
    assert "components 3" in capsys.readouterr().out
    assert run(["--json", "stats", chain]) == 0
    assert json.loads(capsys.readouterr().out)["components"] == 1


def test_gen_kinds(tmp_path, capsys):
    for args in (["hypercube", "3"], ["eqchain", "2"], ["diameter", "4", "2"], ["ils-gadget", "2", "2"], ["sat-gadget", "--gamma", "3/2"]):
        out = tmp_path / "x.ils"
        assert run(["gen", *args, "-o", str(out)]) == 0
        assert run(["index", str(out)]) == 0
    capsys.readouterr()
    assert run(["gen", "sat-gadget", "--dimacs"]) == 0
    assert capsys.readouterr().out.startswith("p cnf 19 20")


def test_exit_codes(files, tmp_path, capsys):
    _, eq3, _ = files
    assert run(["bogus"]) == 2
    assert run(["solve", eq3, "--from", "0 1", "--to", "2 2"]) == 2
    assert run(["solve", eq3, "--from", "0 0 0", "--to", "2 2"]) == 2
    assert run(["gen", "chain", "2"]) == 2
    bad = tmp_path / "bad.ils"
    bad.write_text("1 2\n")
    assert run(["index", str(bad)]) == 2
    cube = tmp_path / "cube.ils"
    run(["gen", "hypercube", "12", "-o", str(cube)])
    assert run(["stats", str(cube), "--max-states", "10"]) == 3
    aff = tmp_path / "aff.ils"
    aff.write_text("4 3 1\n1 1 1 >= 1\n1 -1 -1 >= -1\n-1 1 -1 >= -1\n-1 -1 1 >= -1\n")
    assert run(["solve", str(aff), "--from", "1 0 0", "--to", "0 1 0", "--max-states", "2"]) == 3
    assert "UNDECIDED" in capsys.readouterr().out


def test_env_budget(files, monkeypatch, tmp_path):
    aff = tmp_path / "aff.ils"
    aff.write_text("4 3 1\n1 1 1 >= 1\n1 -1 -1 >= -1\n-1 1 -1 >= -1\n-1 -1 1 >= -1\n")
    monkeypatch.setenv("ILS_MAX_STATES", "3")
    assert run(["solve", str(aff), "--from", "1 0 0", "--to", "0 1 0"]) == 3
