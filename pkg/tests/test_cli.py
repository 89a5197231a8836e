import csv
import io

import pytest

from ecseq.cli import main
from ecseq.complexity import bm_profile


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_curve_info(capsys):
    code, out, _ = run(["curve", "info", "--p", "13", "--d", "2"], capsys)
    assert code == 0
    assert "cardinality: 8" in out and "hasse_ok: True" in out
    assert "weierstrass_cardinality: 8" in out


def test_invalid_curves(capsys):
    code, _, err = run(["curve", "info", "--p", "13", "--d", "3"], capsys)
    assert code == 2 and "legendre" in err
    code, _, _ = run(["curve", "info", "--weierstrass", "--p", "13", "--a4", "0"], capsys)
    assert code == 2  # y^2 = x^3 is singular
    code, _, _ = run(["curve", "info", "--p", "15", "--d", "2"], capsys)
    assert code == 2
    code, _, _ = run(["curve", "info", "--d", "2"], capsys)
    assert code == 2


def test_seq_header_and_terms(capsys):
    code, out, _ = run(["seq", "--p", "13", "--d", "2", "--n", "10"], capsys)
    assert code == 0
    lines = out.splitlines()
    header = [l for l in lines if l.startswith("#")]
    assert "# p = 13" in header and "# f = u+v" in header and "# period = 8" in header
    terms = [int(l) for l in lines if not l.startswith("#")]
    assert len(terms) == 10 and terms[7] == 1


def test_seq_pole(capsys):
    argv = ["seq", "--weierstrass", "--p", "13", "--d", "2", "--f", "x", "--n", "20"]
    code, _, err = run(argv, capsys)
    assert code == 3 and "index n=" in err
    code, _, _ = run(argv + ["--pole-value", "0"], capsys)
    assert code == 0


def test_seq_baselines(capsys):
    code, out, _ = run(["seq", "--kind", "lcg", "--m", "13", "--mult", "2", "--inc", "3",
                        "--x0", "1", "--n", "4"], capsys)
    assert code == 0
    assert [int(l) for l in out.splitlines() if not l.startswith("#")] == [1, 5, 0, 3]
    code, _, _ = run(["seq", "--kind", "lcg", "--m", "13", "--n", "4"], capsys)
    assert code == 2


def test_profile_roundtrip(tmp_path, capsys):
    path = tmp_path / "s.txt"
    assert main(["seq", "--p", "13", "--d", "2", "--n", "16", "--out", str(path)]) == 0
    code, out, err = run(["profile", str(path), "--oracle"], capsys)
    assert code == 0 and "agrees" in err
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["N", "L"]
    terms = [int(l) for l in path.read_text().splitlines() if not l.startswith("#")]
    assert [int(r[1]) for r in rows[1:]] == list(bm_profile(terms, 13).profile)


def test_profile_modulus_errors(tmp_path, capsys):
    path = tmp_path / "s.txt"
    path.write_text("# p = 13\n1\n2\n3\n")
    assert run(["profile", str(path), "--p", "17"], capsys)[0] == 4
    path.write_text("1\n2\n13\n")
    assert run(["profile", str(path), "--p", "13"], capsys)[0] == 4
    path.write_text("1\n2\n")
    assert run(["profile", str(path)], capsys)[0] == 2
    path.write_text("1\nxyz\n")
    assert run(["profile", str(path), "--p", "13"], capsys)[0] == 2


def test_verify_thm1(capsys):
    code, out, err = run(["verify", "--p", "101", "--d", "2", "--bound", "thm1"], capsys)
    assert code == 0 and "holds" in err
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["N", "L", "bound_num", "bound_den", "holds"]
    assert all(r[4] == "true" for r in rows[1:])


def test_verify_violation(capsys):
    argv = ["verify", "--kind", "lcg", "--m", "101", "--mult", "3", "--inc", "7", "--x0", "2",
            "--bound", "linear", "--slope", "1/10"]
    code, out, err = run(argv, capsys)
    assert code == 5 and "violated" in err
    assert "false" in out


def test_verify_declared_provenance(capsys):
    argv = ["verify", "--p", "101", "--d", "2", "--f", "u+v", "--deg", "4", "--omega", "1,1",
            "--bound", "thm1"]
    code, _, err = run(argv, capsys)
    assert code == 0 and "conditional on declared metadata" in err


def test_verify_wrong_bound_kind(capsys):
    code, _, _ = run(["verify", "--p", "13", "--d", "2", "--bound", "hs"], capsys)
    assert code == 2


def test_sweep_bad_config(tmp_path, capsys):
    cfg = tmp_path / "c.cfg"
    cfg.write_text("primes = 5..20\nbogus = 1\n")
    out = tmp_path / "out.csv"
    code, stdout, err = run(["sweep", str(cfg), "--out", str(out)], capsys)
    assert code == 2 and "unknown key" in err
    assert not out.exists() and stdout == ""


def test_sweep_runs(tmp_path, capsys):
    cfg = tmp_path / "c.cfg"
    cfg.write_text("primes = 5..30\nfunction = u+v\ngenerator = linear\n")
    code, out, _ = run(["sweep", str(cfg)], capsys)
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 8
    assert all(r["verdict"] == "holds" for r in rows)


@pytest.mark.parametrize("argv", [["--version"], ["seq", "--help"]])
def test_help_and_version(argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 0
