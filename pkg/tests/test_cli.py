import json

import pytest

from mvbessel.cli import main


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_jack_schur_case(capsys):
    code, out, _ = run(["jack", "--n", "2", "--kappa", "1", "--lambda", "2,0"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["monomial_coeffs"] == {"[1,1]": "1", "[2]": "1"}
    assert doc["principal_specialization"] == "3"


def test_jack_zonal_coefficient(capsys):
    code, out, _ = run(["jack", "--n", "2", "--kappa", "1/2", "--lambda", "2"], capsys)
    assert code == 0
    assert json.loads(out)["monomial_coeffs"]["[1,1]"] == "2/3"


def test_jack_invalid_partition(capsys):
    code, _, err = run(["jack", "--n", "2", "--kappa", "1", "--lambda", "2,3"], capsys)
    assert code == 1 and "not weakly decreasing" in err


def test_rational_parsing_rejects_floats(capsys):
    code, _, err = run(["jack", "--n", "2", "--kappa", "0.5", "--lambda", "1"], capsys)
    assert code == 1 and "exact rational" in err


def test_bessel_one_variable(capsys):
    code, out, _ = run(
        ["bessel", "--n", "1", "--a", "-20", "--kappa", "1", "--lambda", "1"], capsys
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["monomial_coeffs"] == {"[]": "-1/10", "[1]": "1"}
    assert doc["eigencheck"] == "pass"


def test_bessel_degenerate_exit_code(capsys):
    code, _, err = run(
        ["bessel", "--n", "2", "--a", "-2", "--kappa", "1", "--lambda", "1"], capsys
    )
    assert code == 2 and "degenerate" in err


def test_bessel_renormalized_constant_term(capsys):
    code, out, _ = run(
        [
            "bessel",
            "--n",
            "2",
            "--a",
            "-20",
            "--kappa",
            "1",
            "--lambda",
            "2,1",
            "--renormalize",
        ],
        capsys,
    )
    assert code == 0
    assert json.loads(out)["monomial_coeffs"]["[]"] == "1"


@pytest.mark.parametrize("suite", ["eigen", "pieri", "gram", "moments2", "jacobi"])
def test_verify_suites_pass(suite, capsys):
    code, out, _ = run(["verify", suite], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["all_pass"] is True
    assert all(c["status"] == "pass" for c in doc["checks"])


def test_verify_commute(capsys):
    code, out, _ = run(["verify", "commute", "--max-degree", "2", "--d-max", "2"], capsys)
    assert code == 0 and json.loads(out)["all_pass"] is True


def test_verify_gram_inadmissible(capsys):
    code, _, err = run(
        ["verify", "gram", "--a", "-15", "--kappa", "2", "--n", "3", "--max-degree", "4"],
        capsys,
    )
    assert code == 1 and "square-integrability" in err


def test_deterministic_output(capsys):
    _, out1, _ = run(["verify", "eigen"], capsys)
    _, out2, _ = run(["verify", "eigen"], capsys)
    assert out1 == out2


def test_ledger(capsys):
    code, out, _ = run(["ledger"], capsys)
    assert code == 0
    doc = json.loads(out)
    items = {e["item"] for e in doc["ledger"]}
    assert any("binomial" in i for i in items)
    assert any("moment" in i for i in items)
    assert any("Pieri" in i for i in items)
