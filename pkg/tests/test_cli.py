import json

import pytest

from ftok import cli, combin
from ftok.shapes import StrictPartition
from ftok.tableaux import Tableau


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("FTOK_CACHE_DIR", str(tmp_path / "cache"))


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_enumerate_count_only(capsys):
    code, out, _ = run(
        capsys, "enumerate", "--kind", "sst", "--shape", "1", "--n", "2", "--count-only"
    )
    assert code == 0
    assert out.strip() == "2"
    code, out, _ = run(
        capsys, "enumerate", "--kind", "asm", "--shape", "3,2,1", "--count-only"
    )
    assert code == 0
    assert out.strip() == "7"


def test_enumerate_json_stream(capsys):
    code, out, _ = run(
        capsys, "enumerate", "--kind", "shifted", "--shape", "2,1", "--n", "2"
    )
    assert code == 0
    lines = out.strip().split("\n")
    tabs = [Tableau.from_json(json.loads(line)) for line in lines]
    assert len(tabs) == len(set(tabs)) == 2
    code, out, _ = run(
        capsys, "enumerate", "--kind", "shifted", "--shape", "2,1", "--n", "2", "--json"
    )
    assert code == 0
    assert len(json.loads(out)) == 2


def test_enumerate_gtp(capsys):
    code, out, _ = run(capsys, "enumerate", "--kind", "gtp", "--shape", "2,1")
    assert code == 0
    pats = [combin.GTPattern.from_json(json.loads(line)) for line in out.strip().split("\n")]
    assert len(pats) == 2


def test_sf_output(capsys):
    code, out, _ = run(
        capsys, "sf", "--kind", "factorial-schur", "--shape", "1", "--n", "2"
    )
    assert code == 0
    assert out.strip() == "x1 + x2 + a1 + a2"
    code, out, _ = run(
        capsys, "sf", "--kind", "lemma1-det", "--shape", "1", "--n", "2", "--json"
    )
    assert code == 0
    assert json.loads(out) == {"polynomial": "x1 + x2 + a1 + a2"}
    code, out, _ = run(capsys, "sf", "--kind", "p", "--shape", "2,1", "--n", "2")
    assert code == 0
    assert out.strip() == "x1^2*x2 + x1*x2*y2"


def test_bijection_chain(tmp_path, capsys):
    src = tmp_path / "t.json"
    src.write_text(
        json.dumps(
            {
                "kind": "shifted",
                "shape": [2, 1],
                "n": 2,
                "rows": [["1", "1"], ["2"]],
            }
        )
    )
    code, out, _ = run(
        capsys, "bijection", "--from", "shifted", "--to", "gtp", "--input", str(src)
    )
    assert code == 0
    g = combin.GTPattern.from_json(json.loads(out))
    assert g == combin.GTPattern([(2,), (2, 1)])

    gtp_file = tmp_path / "g.json"
    gtp_file.write_text(json.dumps(g.to_json()))
    code, out, _ = run(
        capsys, "bijection", "--from", "gtp", "--to", "asm", "--input", str(gtp_file)
    )
    assert code == 0
    a = combin.ASM.from_json(json.loads(out))
    assert a == combin.ASM([[0, 1], [1, 0]], StrictPartition((2, 1)))

    asm_file = tmp_path / "a.json"
    asm_file.write_text(json.dumps(a.to_json()))
    code, out, _ = run(
        capsys, "bijection", "--from", "asm", "--to", "cpm", "--input", str(asm_file)
    )
    assert code == 0
    c = combin.CPM.from_json(json.loads(out))
    assert c.entries[0] == ("SW", "WE")

    code, out, _ = run(
        capsys, "bijection", "--from", "asm", "--to", "sic", "--input", str(asm_file)
    )
    assert code == 0
    assert out.rstrip("\n") == " ^ ^\n>+>+<\n ^ v\n>+<+<\n v v"


def test_zfunc(capsys):
    code, out, _ = run(capsys, "zfunc", "--variant", "bmn", "--mu", "", "--n", "2")
    assert code == 0
    assert out.strip() == "t*z1 + z2"


def test_verify_exit_codes(capsys):
    code, out, _ = run(
        capsys, "verify", "--id", "lemma1", "--mu", "2,1", "--n", "2"
    )
    assert code == 0
    assert out.startswith("PASS lemma1")
    code, out, err = run(
        capsys, "verify", "--id", "lemma2", "--lambda", "2,2", "--n", "2"
    )
    assert code == 2
    assert "error:" in err
    code, out, _ = run(
        capsys, "verify", "--id", "theorem1P", "--mu", "1", "--n", "2", "--json"
    )
    assert code == 0
    blob = json.loads(out)
    assert blob["pass"] is True and blob["diff"] == "0"


def test_suite_with_config(tmp_path, capsys):
    cfg = tmp_path / "suite.json"
    cfg.write_text(
        json.dumps(
            [
                {"id": "lemma1", "mu": "1", "n": 2},
                {"id": "lemma4", "mu": "1", "n": 2},
            ]
        )
    )
    code, out, _ = run(capsys, "suite", "--config", str(cfg))
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == 3
    assert all(line.startswith("PASS") for line in lines[:2])
    assert lines[-1] == "2/2 identities verified"


def test_suite_bad_config(tmp_path, capsys):
    cfg = tmp_path / "suite.json"
    cfg.write_text("{]")
    code, _, err = run(capsys, "suite", "--config", str(cfg))
    assert code == 2
    assert "error:" in err


def test_suite_json_reports(tmp_path, capsys):
    cfg = tmp_path / "suite.json"
    cfg.write_text(json.dumps([{"id": "lemma3a", "m": 1, "p": 1, "n": 2}]))
    code, out, _ = run(capsys, "suite", "--config", str(cfg), "--json", "--jobs", "2")
    assert code == 0
    blob = json.loads(out.strip())
    assert blob["id"] == "lemma3a" and blob["pass"] is True
