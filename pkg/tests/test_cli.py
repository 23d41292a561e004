import json
import subprocess
import sys

import pytest

from hdecc.cli import main
from hdecc.errors import DegenerateCurve, DigestMismatch, SingularGenerator

TWIN = ["--prime", "17", "--a", "2,2,2,2", "--b", "2", "--c", "0,0,0,0", "--start-x", "5"]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def params17(tmp_path, capsys):
    path = tmp_path / "params.json"
    code, out, _ = run(capsys, "setup", *TWIN, "--counts", "2,1,1", "--out", str(path))
    assert code == 0
    assert "K = 19,19,19,19" in out
    return path


def test_setup_writes_params(params17):
    d = json.loads(params17.read_text())
    assert d["G"] == ["0000000000000005", "0000000000000006",
                      "0000000000000006", "0000000000000006"]
    assert d["chain"]["counts"] == [2, 1, 1]


def test_keygen_token_shared_round(tmp_path, capsys):
    params = tmp_path / "p.json"
    assert run(capsys, "setup", "--prime", "1009", "--a", "3,5,7,11", "--b", "13",
               "--c", "17,19,23,29", "--start-x", "1", "--counts", "5,6,7",
               "--out", str(params))[0] == 0
    ka, kb = tmp_path / "a.json", tmp_path / "b.json"
    assert run(capsys, "keygen", "--params", str(params), "--seed", "1", "--out", str(ka))[0] == 0
    assert run(capsys, "keygen", "--params", str(params), "--seed", "2", "--out", str(kb))[0] == 0
    _, P, _ = run(capsys, "token", "--params", str(params), "--key", str(ka), "--side", "initiator")
    _, T, _ = run(capsys, "token", "--params", str(params), "--key", str(kb), "--side", "responder")
    _, Wa, _ = run(capsys, "shared", "--params", str(params), "--key", str(ka),
                   "--peer-token", T.strip(), "--side", "initiator")
    _, Wb, _ = run(capsys, "shared", "--params", str(params), "--key", str(kb),
                   "--peer-token", P.strip(), "--side", "responder")
    assert Wa == Wb and len(Wa.strip()) == 64
    _, demo, _ = run(capsys, "demo", "--params", str(params), "--seed-a", "1", "--seed-b", "2")
    assert demo == Wa + Wb
    code, We, _ = run(capsys, "attack", "--params", str(params), "--token-t", T.strip(),
                      "--token-p", P.strip())
    assert code == 0 and We == Wa


def test_attack_singular(tmp_path, capsys):
    params = tmp_path / "p.json"
    run(capsys, "setup", *TWIN, "--counts", "1,1,1", "--out", str(params))
    G = "0000000000000005" * 4
    code, out, err = run(capsys, "attack", "--params", str(params), "--token-t", G, "--token-p", G)
    assert code == SingularGenerator.exit_code
    assert out.strip() == "SingularGenerator"


def test_key_for_other_params(tmp_path, capsys, params17):
    other = tmp_path / "other.json"
    run(capsys, "setup", *TWIN, "--counts", "3,1,1", "--out", str(other))
    key = tmp_path / "k.json"
    run(capsys, "keygen", "--params", str(other), "--seed", "1", "--out", str(key))
    code, _, err = run(capsys, "token", "--params", str(params17), "--key", str(key),
                       "--side", "initiator")
    assert code == DigestMismatch.exit_code
    assert "DigestMismatch" in err


def test_setup_reports_degenerate_index(tmp_path, capsys):
    code, _, err = run(capsys, "setup", "--prime", "17", "--a", "1,-3,1,1", "--b", "2",
                       "--c", "0,0,0,0", "--start-x", "1", "--counts", "1,1,1",
                       "--out", str(tmp_path / "x.json"))
    assert code == DegenerateCurve.exit_code
    assert "curve 2" in err


def test_reduce(capsys):
    code, out, _ = run(capsys, "reduce", "--prime", "13", "--c1", "1", "--c3", "1")
    assert code == 0
    assert out.splitlines() == ["d4=0000000000000003", "d6=0000000000000001",
                                "A=0000000000000004", "B=0000000000000002"]


def test_reduce_bad_characteristic(capsys):
    code, _, err = run(capsys, "reduce", "--prime", "3", "--c1", "1")
    assert code != 0 and "BadCharacteristic" in err


def test_plot(tmp_path, capsys):
    out = tmp_path / "s.csv"
    code, _, _ = run(capsys, "plot", "--a1", "-4", "--a2", "-5", "--b", "3.5",
                     "--fix-x1", "1", "--range", "-3:3", "--step", "0.5", "--out", str(out))
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "x1,x2,y" and len(lines) > 1


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "hdecc", "reduce", "--prime", "101", "--c4", "7"],
                       capture_output=True, text=True, timeout=60)
    assert r.returncode == 0
    assert "A=0000000000000007" in r.stdout
