import json

import pytest

from cmspace.automorphisms import Phi, Scale, Word, act
from cmspace.cli import main
from cmspace.linalg import Matrix, subdiagonal
from cmspace.points import CMPoint, base_point, nilpotent_points, shift
from cmspace.poly import Poly

t = Poly.monomial(1)


@pytest.fixture
def write(tmp_path):
    def _write(name, doc):
        path = tmp_path / name
        path.write_text(doc if isinstance(doc, str) else json.dumps(doc))
        return str(path)
    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_validate(capsys, write):
    code, doc = run(capsys, "validate", write("b3.json", base_point(3).to_json()))
    assert code == 0 and doc == {"valid": True, "n": 3}
    bad = {"n": 3, "X": subdiagonal([1, 1]).to_json(), "Y": shift(3).to_json()}
    code, doc = run(capsys, "validate", write("bad.json", bad))
    assert code == 1 and doc["reason"] == "RankConditionViolated"
    code, _ = run(capsys, "validate", write("trunc.json", '{"n": 3, "X": [["0"'))
    assert code == 2
    code, _ = run(capsys, "validate", write("nums.json", {"n": 1, "X": [[0]], "Y": [[0]]}))
    assert code == 2
    code, doc = run(capsys, "validate", write("dim.json", dict(base_point(3).to_json(), n=2)))
    assert code == 1 and doc["reason"] == "DimensionMismatch"
    code, _ = run(capsys, "validate", "/nonexistent/point.json")
    assert code == 2


def test_act(capsys, write):
    b2 = write("b2.json", base_point(2).to_json())
    code, doc = run(capsys, "act", write("w.json", Word([Phi(t)]).to_json()), b2)
    assert code == 0 and doc["X"] == [["0", "1"], ["1", "0"]]
    code, doc = run(capsys, "act", write("e.json", []), b2)
    assert code == 0 and doc == base_point(2).to_json()
    code, _ = run(capsys, "act", write("z.json", [{"op": "scale", "lambda": "0"}]), b2)
    assert code == 1
    code, _ = run(capsys, "act", write("bad.json", [{"op": "phi"}]), b2)
    assert code == 2


def test_conj(capsys, write):
    B = base_point(3)
    b3 = write("b3.json", B.to_json())
    moved = write("r2.json", act(Word([Scale(2)]), B).to_json())
    code, doc = run(capsys, "conj", b3, moved)
    assert code == 0 and doc["conjugate"]
    W = Matrix.from_json(doc["witness"])
    assert W == Matrix.diag([1, "1/2", "1/4"])
    code, doc = run(capsys, "conj", moved, b3)
    assert code == 0 and Matrix.from_json(doc["witness"]) == Matrix.diag([1, 2, 4])
    p1, p2 = nilpotent_points(3)[:2]
    code, doc = run(capsys, "conj", write("p1.json", p1.to_json()), write("p2.json", p2.to_json()))
    assert code == 1 and not doc["conjugate"]
    code, doc = run(capsys, "conj", b3, b3)
    assert code == 0 and doc["witness"] == Matrix.identity(3).to_json()
    code, doc = run(capsys, "conj", b3, write("b2.json", base_point(2).to_json()))
    assert code == 1 and doc["reason"] == "SizeMismatch"


def test_nilpotent(capsys):
    code, doc = run(capsys, "nilpotent", "2")
    assert code == 0 and [d["a"] for d in doc] == [["-1"], ["1"]]
    code, doc = run(capsys, "nilpotent", "3")
    assert code == 0 and len(doc) == 3
    assert CMPoint.from_json({k: doc[2][k] for k in ("n", "X", "Y")}) == base_point(3)
    code, _ = run(capsys, "nilpotent", "1")
    assert code == 1


def test_replay(capsys):
    code, doc = run(capsys, "replay", "--n-max", "4")
    assert code == 0 and all(r["pass"] for r in doc)
    with pytest.raises(SystemExit) as exc:
        main(["replay", "--n-max", "1"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["replay", "--n-max", "x"])
    assert exc.value.code == 2


def test_output_byte_stable(capsys, write):
    b3 = write("b3.json", base_point(3).to_json())
    moved = write("r.json", act(Word([Scale(5)]), base_point(3)).to_json())
    main(["conj", b3, moved])
    first = capsys.readouterr().out
    main(["conj", b3, moved])
    assert capsys.readouterr().out == first
