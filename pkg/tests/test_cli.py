import json
import subprocess
import sys

import pytest

from deligne_o.cli import main
from deligne_o.partition import Partition
from deligne_o.ring import RingElement


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    return json.loads(out)


def test_lift_published(capsys):
    data = run_json(capsys, "lift", "--delta", "2", "[4,3,3,2,1]")
    got = {tuple(t["partition"]): t["coefficient"] for t in data["terms"]}
    assert got == {(4, 3, 3, 2, 1): 1, (3, 3, 3, 2): 1, (4, 2, 1, 1, 1): 1, (3, 2, 1, 1): 1}
    assert data["context"] == "generic"


def test_tensor_at_zero(capsys):
    data = run_json(capsys, "tensor", "--delta", "0", "[1]", "[1]")
    assert [t["partition"] for t in data["terms"]] == [[2], [1, 1]]
    assert data["context"] == {"delta": 0}
    assert RingElement.from_json(data) == RingElement({Partition((2,)): 1, Partition((1, 1)): 1}, 0)


def test_tensor_generic_and_rational(capsys):
    a = run_json(capsys, "tensor", "--generic", "[1]", "[1]")
    b = run_json(capsys, "tensor", "--delta", "1/2", "[1]", "[1]")
    assert a == b
    assert len(a["terms"]) == 3


def test_k(capsys):
    assert run_json(capsys, "k", "--delta", "3", "[6,6,6,6,4,2]") == {"defect": 2, "rank": 1, "k": 3}
    code, out, _ = run(capsys, "k", "--delta", "3", "[6,6,6,6,4,2]", "--format", "text")
    assert out.strip() == "defect=2 rank=1 k=3"


def test_diagram(capsys):
    data = run_json(capsys, "diagram", "--delta", "2", "[4,3,3,2,1]")
    assert data["marks"] == ["D", "o", "^", "v", "^"]
    assert data["caps"] == [[0, 2, False], [3, 4, False]]
    code, out, _ = run(capsys, "diagram", "--delta", "3", "[6,6,6,6,4,2]", "--format", "text")
    lines = out.splitlines()
    assert lines[0].split()[:3] == ["1/2", "3/2", "5/2"]
    assert "." in out and "_" in out
    assert lines[-1] == "defect=2 rank=1 k=3"


def test_form(capsys):
    assert run_json(capsys, "form", "--delta", "0", "[2]", "[]") == 1
    assert run_json(capsys, "form", "--generic", "[2]", "[]") == 0


def test_ideal_and_kminimal(capsys):
    data = run_json(capsys, "ideal", "--delta", "0", "--k", "1", "--contains", "[2]")
    assert data == {"delta": 0, "k": 1, "contains": True, "k_of_lambda": 1}
    data = run_json(capsys, "ideal", "--delta", "0", "--k", "inf", "--contains", "[]")
    assert data["contains"] is False and data["k"] is None
    assert [2, 1] in run_json(capsys, "kminimal", "--delta", "2", "--k", "1", "--max-size", "4")
    assert run_json(capsys, "kminimal", "--delta", "0", "--k", "0", "--max-size", "10") == [[]]


def test_osp(capsys):
    data = run_json(capsys, "osp", "--m", "3", "--n", "1", "--r", "2")
    assert data["summands"] == [
        {"partition": [], "k": 0, "projective": False},
        {"partition": [2], "k": 1, "projective": True},
        {"partition": [1, 1], "k": 1, "projective": True},
    ]


def test_oracle(capsys):
    data = run_json(capsys, "oracle", "verify", "--max-size", "2", "--deltas", "0,1")
    assert len(data) == 6 and all(r["passed"] for r in data)
    data = run_json(capsys, "oracle", "idempotent", "--delta", "2", "[2]")
    assert {"pairing": [[0, 1], [2, 3]], "coefficient": "-1/2"} in data["terms"]


def test_oracle_guard_is_domain_error(capsys):
    code, out, err = run(capsys, "oracle", "idempotent", "--delta", "0", "--i", "1", "[]")
    assert code == 1 and "undefined" in err and out == ""


@pytest.mark.parametrize(
    "argv",
    [
        ["k", "--delta", "0", "[1,2]"],
        ["k", "--delta", "0", "4,3"],
        ["k", "--delta", "x", "[1]"],
        ["tensor", "[1]", "[1]"],
        ["tensor", "--delta", "0", "--generic", "[1]", "[1]"],
        ["kminimal", "--delta", "0", "--k", "-1", "--max-size", "3"],
        ["osp", "--m", "3", "--n", "1"],
        ["nonsense"],
    ],
)
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_output_is_deterministic(capsys):
    argv = ["tensor", "--delta", "1", "[2,1]", "[2,1]"]
    first = run(capsys, *argv)[1]
    second = run(capsys, *argv)[1]
    assert first == second


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "deligne_o", "lift", "--delta", "3", "[6,6,6,6,4,2]"],
        capture_output=True, text=True, check=True,
    )
    data = json.loads(res.stdout)
    assert len(data["terms"]) == 4
