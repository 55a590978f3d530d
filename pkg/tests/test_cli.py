import json

import pytest

from equivar import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


def test_output_is_deterministic(capsys):
    _, first, _ = run(capsys, "marks", "--group", "dihedral:3")
    _, second, _ = run(capsys, "marks", "--group", "dihedral:3")
    assert first == second


def test_marks(capsys):
    code, doc = run_json(capsys, "marks", "--group", "dihedral:1")
    assert code == 0
    assert doc["schema"] == "equivar/marks/v1"
    assert doc["table"] == [[2, 0], [1, 1]]


def test_burnside_mul(capsys):
    code, doc = run_json(capsys, "burnside", "mul", "--group", "dihedral:3",
                         "--a", "[G/D2]", "--b", "[G/D2]")
    assert code == 0
    assert doc["schema"] == "equivar/burnside/v1"
    # [G/D_2]^2 = [G/D_2] + [G/e] in the Burnside ring of D_6
    prod = doc["product"]["coeffs"]
    assert sum(prod) == 2 and prod[0] == 1


def test_burnside_expression_syntax(capsys):
    code, doc = run_json(capsys, "burnside", "mul", "--group", "dihedral:3",
                         "--a", "2*[G/mu_3]+[G/D2]-1", "--b", "3")
    assert code == 0
    a = doc["a"]["coeffs"]
    assert sum(abs(c) for c in a) == 4


def test_coinduce(capsys):
    code, doc = run_json(capsys, "coinduce", "--group", "dihedral:3",
                         "--sub", "D2", "--labels", "a,b")
    assert code == 0
    assert doc["fixed"] == 2
    counts = {o["stabilizer"]: o["count"] for o in doc["orbits"]}
    assert sum(counts.values()) == 4


def test_norm_with_compare(capsys):
    code, doc = run_json(capsys, "norm", "--group", "dihedral:3",
                         "--from", "D2", "--functor", "constZ",
                         "--compare", "burnside-quotient")
    assert code == 0
    assert doc["compare"]["status"] == "isomorphic"
    levels = doc["diagram"]["levels"]
    assert [lv["invariant_factors"]["rank"] for lv in levels] == [1, 1, 2, 2]
    assert all(lv["invariant_factors"]["torsion"] == [] for lv in levels)


def test_reciprocity_verify(capsys):
    code, doc = run_json(capsys, "reciprocity", "--group", "dihedral:3",
                         "--sub", "D2", "--verify", "--latex")
    assert code == 0
    assert doc["verified"] is True
    assert doc["summands"] == 4
    assert "N[D_2->D_6](a)" in doc["text"]
    assert doc["latex"]


def test_hr0(capsys):
    code, doc = run_json(capsys, "hr0", "--ring", "constZ", "--m", "3")
    assert code == 0
    assert doc["schema"] == "equivar/hr0/v1"


def test_hr_homology(capsys):
    code, doc = run_json(capsys, "hr", "homology", "--ring", "constZ",
                         "--m", "3", "--degree", "2")
    assert code == 0
    assert doc["schema"] == "equivar/hr/v1"
    assert [h["degree"] for h in doc["homology"]] == [0, 1, 2]
    assert doc["complex_checks"] == {"d_squared_zero": True,
                                     "simplicial_identities": True}


def test_witt(capsys):
    code, doc = run_json(capsys, "witt", "--ring", "constZ", "--p", "3",
                         "--levels", "2", "--ops", "R,F,V", "--coinvariants")
    assert code == 0
    assert doc["schema"] == "equivar/witt/v1"


def test_check_paper_suite(capsys):
    code, out, err = run(capsys, "check", "paper-suite")
    assert code == 0
    doc = json.loads(out)
    assert doc["all_pass"] is True
    assert all(r["pass"] for r in doc["results"])
    assert len(doc["results"]) == 9
    assert "PASS" in err


@pytest.mark.parametrize("argv", [
    ("marks", "--group", "octahedral:3"),
    ("coinduce", "--group", "dihedral:3", "--sub", "D5"),
    ("norm", "--group", "dihedral:4", "--from", "D2"),
    ("hr0", "--ring", "Zi", "--m", "3"),
    ("check", "no-such-suite"),
])
def test_exit_code_2_on_bad_input(capsys, argv):
    assert cli.main(list(argv)) == 2
    assert "error:" in capsys.readouterr().err


def test_argparse_rejects_unknown_verb():
    with pytest.raises(SystemExit) as e:
        cli.main(["frobnicate"])
    assert e.value.code == 2
