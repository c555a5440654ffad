import io
import json

import pytest

from lfact import families as F
from lfact.cli import main
from lfact.iso import is_isomorphic
from lfact.lattice import FiniteLattice


def run(monkeypatch, capsys, argv, stdin=""):
    monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def gen(monkeypatch, capsys, *args):
    code, out, _ = run(monkeypatch, capsys, ["gen", *args])
    assert code == 0
    return out


def test_gen_mobius(monkeypatch, capsys):
    text = gen(monkeypatch, capsys, "nc", "4")
    code, out, _ = run(monkeypatch, capsys, ["mobius"], text)
    rep = json.loads(out)
    assert code == 0 and rep["command"] == "mobius" and rep["status"] == "pass"
    assert rep["payload"]["mu"][-1] == -5


def test_report_shape(monkeypatch, capsys):
    text = gen(monkeypatch, capsys, "boolean", "2")
    _, out, _ = run(monkeypatch, capsys, ["info"], text)
    assert set(json.loads(out)) == {"command", "inputs", "status", "witnesses", "payload"}


def test_check_stanley2_auto(monkeypatch, capsys):
    text = gen(monkeypatch, capsys, "pi", "4")
    code, out, _ = run(monkeypatch, capsys, ["check", "stanley2", "--chain", "auto"], text)
    rep = json.loads(out)
    assert code == 0 and rep["status"] == "pass"


def test_check_ll_failure_has_witness(monkeypatch, capsys):
    text = gen(monkeypatch, capsys, "nc", "4")
    # 0 < 12 < 123 < 1234 by index
    code, out, _ = run(monkeypatch, capsys, ["check", "ll", "--chain", "0,1,8,13"], text)
    rep = json.loads(out)
    assert code == 1 and rep["status"] == "fail"
    assert rep["witnesses"]


def test_one_element(monkeypatch, capsys):
    text = gen(monkeypatch, capsys, "chain", "1")
    code, out, _ = run(monkeypatch, capsys, ["mobius"], text)
    assert code == 0 and json.loads(out)["payload"]["mu"] == [1]
    code, out, _ = run(monkeypatch, capsys, ["charpoly"], text)
    assert code == 0


def test_save_load_round_trip(monkeypatch, capsys, tmp_path):
    text = gen(monkeypatch, capsys, "tamari", "4")
    path = tmp_path / "t4.json"
    code, _, _ = run(monkeypatch, capsys, ["save", str(path)], text)
    assert code == 0 and path.exists()
    code, out, _ = run(monkeypatch, capsys, ["load", str(path)])
    assert code == 0
    L = FiniteLattice.from_dict(json.loads(out))
    assert is_isomorphic(L, F.tamari(4))


def test_nbb_element(monkeypatch, capsys):
    text = gen(monkeypatch, capsys, "pi", "3")
    code, out, _ = run(monkeypatch, capsys, ["nbb", "--element", "4"], text)
    rep = json.loads(out)
    assert code == 0 and rep["payload"]["signed_count"] == rep["payload"]["mu"] == 2
    assert len(rep["payload"]["bases"]) == 2


@pytest.mark.parametrize("argv,stdin", [
    (["mobius"], "not json"),
    (["mobius"], ""),
    (["nbb", "--element", "99"], None),
    (["check", "lmgr", "--chain", "0,1"], None),
])
def test_usage_errors(monkeypatch, capsys, argv, stdin):
    if stdin is None:
        stdin = gen(monkeypatch, capsys, "boolean", "2")
    code, _, err = run(monkeypatch, capsys, argv, stdin)
    assert code == 2 and "error" in err


def test_corpus_subset(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["corpus", "--criteria", "1,2"])
    lines = [json.loads(x) for x in out.splitlines()]
    assert [r["inputs"]["criterion"] for r in lines] == [1, 2]
    assert code == (0 if all(r["status"] == "pass" for r in lines) else 1)
