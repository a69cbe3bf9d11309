import json

import pytest

from schubert.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_expand_key_basis(capsys):
    code, out, _ = run_cli(capsys, "expand", "--perm", "4,2,1,5,3", "--basis", "key")
    assert code == 0
    assert out == "k(3,1,0,1) + k(3,2,0,0)\n"


def test_expand_slide_basis(capsys):
    code, out, _ = run_cli(capsys, "expand", "--perm", "1,5,3,2,6,4", "--basis", "slide")
    assert code == 0
    terms = out.strip().split(" + ")
    assert set(terms) == {
        "F(0,3,1,0,1)", "F(2,2,0,0,1)", "F(1,3,0,0,1)", "F(0,3,2,0,0)",
        "F(2,2,1,0,0)", "F(1,3,1,0,0)", "F(2,3,0,0,0)",
    }
    assert len(terms) == 7


def test_expand_monomial_identity(capsys):
    code, out, _ = run_cli(capsys, "expand", "--perm", "1,2,3", "--basis", "monomial")
    assert code == 0
    assert out == "1\n"


def test_expand_monomial_strategies_consistent(capsys):
    outs = set()
    for strategy in ("kohnert", "ssbt", "divided-difference"):
        code, out, _ = run_cli(
            capsys, "expand", "--perm", "4,2,1,5,3", "--strategy", strategy
        )
        assert code == 0
        outs.add(out)
    assert outs == {"x1^3*x2^2 + x1^3*x2*x3 + x1^3*x2*x4\n"}


def test_expand_comp_monomial(capsys):
    code, out, _ = run_cli(capsys, "expand", "--comp", "0,2", "--basis", "monomial")
    assert code == 0
    assert out == "x1^2 + x1*x2 + x2^2\n"


def test_expand_comp_slide(capsys):
    code, out, _ = run_cli(capsys, "expand", "--comp", "0,3,0,2", "--basis", "slide")
    assert code == 0
    assert out.strip().split(" + ") == [
        "F(0,3,0,2)", "F(1,3,0,1)", "F(2,2,0,1)", "F(2,3,0,0)",
    ]


def test_expand_json_format(capsys):
    code, out, _ = run_cli(
        capsys, "expand", "--perm", "4,2,1,5,3", "--basis", "key", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert data == {
        "basis": "k",
        "terms": [
            {"coefficient": 1, "index": [3, 1, 0, 1]},
            {"coefficient": 1, "index": [3, 2, 0, 0]},
        ],
    }


def test_expand_output_is_byte_stable(capsys):
    first = run_cli(capsys, "expand", "--perm", "4,2,1,5,3", "--basis", "monomial")
    second = run_cli(capsys, "expand", "--perm", "4,2,1,5,3", "--basis", "monomial")
    assert first == second


def test_enumerate_counts(capsys):
    for argv, expected in [
        (("enumerate", "--object", "sbt", "--perm", "4,2,1,5,3"), 11),
        (("enumerate", "--object", "kohnert", "--perm", "1,5,3,2,6,4"), 26),
        (("enumerate", "--object", "words", "--perm", "1,2,3"), 1),
        (("enumerate", "--object", "skt", "--comp", "0,3,0,2"), 5),
        (("enumerate", "--object", "yrd", "--perm", "4,2,1,5,3"), 2),
        (("enumerate", "--object", "rd", "--perm", "1,5,3,2,6,4"), 26),
        (("enumerate", "--object", "ssbt", "--perm", "1,5,3,2,6,4"), 26),
    ]:
        code, out, _ = run_cli(capsys, *argv)
        assert code == 0
        assert out.rstrip("\n").splitlines()[-1] == f"count: {expected}"


def test_enumerate_json(capsys):
    code, out, _ = run_cli(
        capsys, "enumerate", "--object", "words", "--perm", "4,2,1,5,3",
        "--format", "json",
    )
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 11
    assert [4, 2, 1, 2, 3] in data["items"]


def test_enumerate_json_diagram_records(capsys):
    code, out, _ = run_cli(
        capsys, "enumerate", "--object", "yrd", "--perm", "2,1,3", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert data == {"items": [[{"row": 1, "col": 1, "label": 1}]], "count": 1}
    code, out, _ = run_cli(
        capsys, "enumerate", "--object", "kohnert", "--perm", "2,1,3",
        "--format", "json",
    )
    assert json.loads(out) == {"items": [[{"row": 1, "col": 1}]], "count": 1}


def test_enumerate_art(capsys):
    code, out, _ = run_cli(
        capsys, "enumerate", "--object", "qrd", "--perm", "2,1,3", "--format", "art"
    )
    assert code == 0
    assert "| 1" in out
    assert out.rstrip("\n").splitlines()[-1] == "count: 1"


def test_verify_suites_pass(capsys):
    for suite, n in [("involutions", 3), ("cross-model", 3), ("bijections", 3)]:
        code, out, _ = run_cli(capsys, "verify", "--suite", suite, "--n", str(n))
        assert code == 0
        assert "FAIL" not in out
        assert "PASS" in out


def test_verify_sampled_suite_seeded(capsys):
    first = run_cli(
        capsys, "verify", "--suite", "cross-model", "--n", "4",
        "--sample", "5", "--seed", "11",
    )
    second = run_cli(
        capsys, "verify", "--suite", "cross-model", "--n", "4",
        "--sample", "5", "--seed", "11",
    )
    assert first == second and first[0] == 0


def test_parse_error_exit_code(capsys):
    with pytest.raises(SystemExit) as err:
        main(["expand", "--perm", "4,2,x", "--basis", "key"])
    assert err.value.code == 2


def test_missing_target_exit_code(capsys):
    code, _, err = run_cli(capsys, "expand", "--basis", "key")
    assert code == 2
    assert "error" in err


def test_guard_exit_code(capsys, monkeypatch):
    monkeypatch.setenv("SCHUBERT_MAX_CELLS", "3")
    code, _, err = run_cli(capsys, "expand", "--perm", "4,2,1,5,3")
    assert code == 3
    assert "guard" in err


def test_verify_guard_exit_code(capsys, monkeypatch):
    monkeypatch.setenv("SCHUBERT_MAX_CELLS", "3")
    code, _, _ = run_cli(capsys, "verify", "--suite", "cross-model", "--n", "6")
    assert code == 3
