import json
import subprocess
import sys

import pytest

from ostar import __version__
from ostar.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_diagrams_count(capsys):
    code, out, _ = run(capsys, "diagrams", "count", "--k", "0", "--l", "6", "--class", "E")
    doc = json.loads(out)
    assert code == 0 and doc["count"] == 6
    assert doc["version"] == __version__
    assert doc["config"]["params"]["cls"] == "E"


def test_diagrams_list(capsys):
    code, out, _ = run(capsys, "diagrams", "list", "--k", "3", "--l", "3", "--class", "E", "--json")
    doc = json.loads(out)
    assert len(doc["pairings"]) == 6
    assert {"k": 3, "l": 3, "pairs": [[1, 4], [2, 5], [3, 6]], "class": "E_not_N"} in doc["pairings"]


def test_hom_dim_and_dump(capsys, tmp_path):
    target = tmp_path / "mats.json"
    code, out, _ = run(capsys, "hom-dim", "--n", "3", "--k", "3", "--l", "3", "--dump-matrices", str(target))
    assert json.loads(out)["rank"] == 6
    mats = json.loads(target.read_text())
    assert len(mats) == 6 and mats[0]["matrix"]["rows"] == 27


def test_fuse(capsys):
    code, out, _ = run(capsys, "fuse", "--n", "3", "--lhs", "1,0,0", "--rhs", "1,1,-2")
    doc = json.loads(out)
    assert {(tuple(s["weight"]), s["sector"]) for s in doc["summands"]} == {((3, -1, -1), "tau"), ((2, 0, -1), "tau")}
    assert doc["total_dim"] == 30


def test_fuse_un_side(capsys):
    code, out, _ = run(capsys, "fuse", "--n", "2", "--lhs", "1,0", "--rhs", "1,0", "--side", "un")
    assert [s["weight"] for s in json.loads(out)["summands"]] == [[2, 0], [1, 1]]


def test_weights(capsys):
    code, out, _ = run(capsys, "weights", "--n", "3", "--of", "1,1,-2", "--multiset")
    doc = json.loads(out)
    assert doc["dimension"] == 10 and len(doc["multiset"]) == 10


def test_bad_weight_exits_1(capsys):
    code, _, err = run(capsys, "weights", "--n", "3", "--of", "1,1,1")
    assert code == 1 and "neither 0" in err
    code, _, err = run(capsys, "fuse", "--n", "3", "--lhs", "1,0", "--rhs", "1,0,0")
    assert code == 1


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["fuse", "--n", "3"])
    assert info.value.code == 2


def test_cayley_dot_and_json(capsys, tmp_path):
    code, out, _ = run(capsys, "cayley", "--group", "pun", "--n", "3", "--radius", "1", "--format", "dot")
    assert out.startswith('digraph "pun_3"')
    target = tmp_path / "g.json"
    run(capsys, "cayley", "--group", "ostar", "--n", "3", "--radius", "2", "--out", str(target))
    assert len(json.loads(target.read_text())["graph"]["vertices"]) == 3


def test_growth(capsys, tmp_path):
    csv = tmp_path / "b.csv"
    code, out, _ = run(capsys, "growth", "--n", "3", "--kmax", "8", "--csv", str(csv), "--fit", "2", "8")
    doc = json.loads(out)
    assert doc["b"][:3] == [1, 10, 74]
    assert "slope" in doc["fit"]
    assert csv.read_text().splitlines()[3] == "2,74"


def test_resource_cap_exits_1(capsys, monkeypatch):
    monkeypatch.setenv("OSTAR_MAX_CELLS", "10")
    code, _, err = run(capsys, "hom-dim", "--n", "3", "--k", "2", "--l", "2")
    assert code == 1 and "cap" in err


def test_module_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "ostar", "verify", "--quick"]
    first = subprocess.run(cmd, capture_output=True, text=True)
    second = subprocess.run(cmd, capture_output=True, text=True)
    assert first.returncode == 0
    assert first.stdout == second.stdout
