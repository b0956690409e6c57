from fractions import Fraction

import pytest

from mvbessel.bessel import (
    BesselParams,
    bessel_coeff_tableau,
    bessel_eigenvalue,
    bessel_expand,
    check_nondegenerate,
    rectangular_2F0,
    renormalize,
    rho_vector,
    sufficient_nondegeneracy,
)
from mvbessel.errors import DegenerateEigenvalue
from mvbessel.partitions import Partition, partitions_up_to

SAMPLE = [
    BesselParams(Fraction(-20), Fraction(1), 2),
    BesselParams(Fraction(-20), Fraction(2), 3),
    BesselParams(Fraction(-31, 2), Fraction(5, 3), 2),
]


def test_rho_vector():
    p = BesselParams(Fraction(-20), Fraction(1), 2)
    assert rho_vector(p) == (Fraction(-19, 2), Fraction(-21, 2))


def test_eigenvalue_and_nondegeneracy():
    p = BesselParams(Fraction(-20), Fraction(1), 2)
    # d_(1) = 2 kappa (n-1) = 2, plus a|lambda| = -20
    assert bessel_eigenvalue(Partition((1,)), p) == -18
    assert sufficient_nondegeneracy(Partition((2, 1)), p)
    assert check_nondegenerate(Partition((2, 1)), p)
    bad = BesselParams(Fraction(-2), Fraction(1), 2)
    assert not check_nondegenerate(Partition((1,)), bad)  # e_(1) = 0 = e_()


def test_one_variable_expansion():
    p = BesselParams(Fraction(-20), Fraction(1), 1)
    Y = bessel_expand(Partition((1,)), p)
    assert Y.coeff(Partition((1,))) == 1
    assert Y.coeff(Partition(())) == Fraction(2, -20)


def test_recurrence_equals_tableau():
    for p in SAMPLE:
        for lam in partitions_up_to(4, p.n):
            Y = bessel_expand(lam, p)
            for mu in partitions_up_to(lam.weight(), p.n):
                if lam.contains(mu):
                    assert Y.coeff(mu) == bessel_coeff_tableau(lam, mu, p), (lam, mu)


def test_degenerate_tableau_raises():
    p = BesselParams(Fraction(-2), Fraction(1), 2)
    with pytest.raises(DegenerateEigenvalue):
        bessel_coeff_tableau(Partition((1,)), Partition(()), p)


def test_renormalize_constant_term_one():
    for p in SAMPLE:
        for lam in partitions_up_to(3, p.n):
            Yt = renormalize(bessel_expand(lam, p))
            assert Yt.coeff(Partition(())) == 1, lam


def test_renormalized_one_variable_identity():
    # n = 1, lambda = (1): the renormalized polynomial is 1 + (a/2) x
    for a in (Fraction(-20), Fraction(-31, 2)):
        p = BesselParams(a, Fraction(1), 1)
        f = renormalize(bessel_expand(Partition((1,)), p)).to_sym()
        assert f.coeff(Partition(())) == 1
        assert f.coeff(Partition((1,))) == a / 2


def test_rectangular_2F0():
    for n in (1, 2):
        for k in (1, 2, 3):
            for a, kappa in ((Fraction(-20), Fraction(1)), (Fraction(-31, 2), Fraction(5, 3))):
                p = BesselParams(a, kappa, n)
                Y = rectangular_2F0(k, p)  # internally asserts against bessel_expand
                lam = Partition((k,) * n)
                assert Y.coeff(lam) == 1
