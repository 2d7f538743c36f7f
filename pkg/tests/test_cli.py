import json

from toruscurves.cli import run


def write_scheme(tmp_path, name, n, entries, extra=None):
    doc = {"n": n, "entries": entries}
    if extra:
        doc.update(extra)
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def run_json(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def test_check_not_realizable(tmp_path, capsys):
    path = write_scheme(tmp_path, "m.json", 3, [6, 10, 14])
    code, doc = run_json(capsys, ["check", path])
    assert code == 1
    assert doc["status"] == "not_torus"
    (reason,) = doc["reasons"]
    assert reason["kind"] == "toz" and reason["prime"] == 2


def test_check_realizable(tmp_path, capsys):
    path = write_scheme(tmp_path, "m.json", 3, [2, 2, 4])
    code, doc = run_json(capsys, ["check", path])
    assert code == 0
    assert doc["status"] == "torus"
    assert doc["witness"] == [[1, 0], [1, 2], [-1, 2]]
    assert doc["orbits"]["modulus"] == 4
    assert doc["orbits"]["allowed_kappa"] == [1, 3]
    assert doc["orbits"]["per_prime"][0]["allowed_kappa"] == [1, 3]


def test_check_used_empty(tmp_path, capsys):
    path = write_scheme(tmp_path, "m.json", 3, [0, 1, 0])
    code, doc = run_json(capsys, ["check", path])
    assert code == 0
    assert doc["used_empty"] is True
    assert doc["witness"][1] == "empty"


def test_metadata_roundtrip_ignored(tmp_path, capsys):
    path = write_scheme(tmp_path, "m.json", 2, [5], extra={"metadata": {"k": "v"}})
    code, doc = run_json(capsys, ["check", path])
    assert code == 0


def test_toz_command(tmp_path, capsys):
    path = write_scheme(tmp_path, "m.json", 4, [9, 9, 9, 6, 3, -3])
    code, doc = run_json(capsys, ["toz", path])
    assert code == 0
    assert doc["g_123"] == 9
    assert doc["checked_primes"] == [
        {"prime": 2, "total": "0"},
        {"prime": 3, "total": "7/3"},
    ]
    (entry,) = doc["per_prime"]
    assert entry["contributions"] == ["1", "1", "1/3"]


def test_solve_command(tmp_path, capsys):
    path = write_scheme(tmp_path, "m.json", 3, [2, 2, 4])
    code, doc = run_json(capsys, ["solve", path, "--orbits", "5", "--kappa", "3"])
    assert code == 0
    assert doc["requested"]["witness"] == [[1, 0], [3, 2], [1, 2]]
    assert len(doc["orbit_witnesses"]) == 1

    code = run(["solve", path, "--kappa", "2"])
    assert code == 2  # forbidden kappa


def test_oracle_command(tmp_path, capsys):
    path = write_scheme(tmp_path, "m.json", 3, [2, 2, 4])
    code, doc = run_json(capsys, ["oracle", path])
    assert code == 0
    assert doc["realizable"] is True and doc["orbit_count"] == 1

    big = write_scheme(tmp_path, "big.json", 2, [10**7])
    assert run(["oracle", big]) == 2


def test_decompose_command(tmp_path, capsys):
    path = write_scheme(tmp_path, "m.json", 3, [6, 10, 14])
    code, doc = run_json(capsys, ["decompose", path])
    assert code == 0
    assert not doc["already_torus"]
    left, right = doc["left"]["entries"], doc["right"]["entries"]
    assert [l + r for l, r in zip(left, right)] == [6, 10, 14]


def test_endemic_command(capsys):
    code, doc = run_json(capsys, ["endemic", "--p", "3", "--q", "5"])
    assert code == 0
    assert doc["scheme"]["entries"] == [5, 15, 15, 15, 15, 3]
    assert doc["verdict"]["status"] == "not_torus"

    code, doc = run_json(
        capsys, ["endemic", "--p", "3", "--q", "5", "--search-bound", "4"]
    )
    assert code == 0
    assert doc["search"] == {"bound": 4, "found": False}


def test_farey_command(capsys):
    code, doc = run_json(capsys, ["farey", "--d", "1"])
    assert code == 0
    assert doc["size"] == 3
    assert sorted(map(tuple, doc["witness"])) == [(0, 1), (1, 0), (1, 1)]


def test_render_command(tmp_path, capsys):
    path = write_scheme(tmp_path, "m.json", 3, [2, 2, 4])
    out = tmp_path / "pic.svg"
    assert run(["render", path, "--out", str(out)]) == 0
    assert out.read_text().startswith("<svg")

    bad = write_scheme(tmp_path, "bad.json", 3, [6, 10, 14])
    assert run(["render", bad, "--out", str(tmp_path / "x.svg")]) == 2


def test_input_errors(tmp_path):
    garbled = tmp_path / "bad.json"
    garbled.write_text("{not json")
    assert run(["check", str(garbled)]) == 2

    missing = tmp_path / "missing.json"
    assert run(["check", str(missing)]) == 2

    wrong = write_scheme(tmp_path, "wrong.json", 3, [1, 2])
    assert run(["check", wrong]) == 2

    floats = tmp_path / "floats.json"
    floats.write_text(json.dumps({"n": 2, "entries": [1.5]}))
    assert run(["check", str(floats)]) == 2

    assert run(["nosuchcommand"]) == 2


def test_json_roundtrip(tmp_path, capsys):
    path = write_scheme(tmp_path, "m.json", 4, [1, 1, 1, 2, 1, -1])
    code, doc = run_json(capsys, ["check", path])
    assert code == 0
    again = tmp_path / "again.json"
    again.write_text(json.dumps({"n": 4, "entries": [1, 1, 1, 2, 1, -1]}))
    code2, doc2 = run_json(capsys, ["check", str(again)])
    assert doc == doc2
