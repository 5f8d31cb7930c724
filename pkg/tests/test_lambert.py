from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qrank.lambert import (E_series, P_series, TSpec, chan_identity_residual,
                           chan_suite_parameters, lambert_T, lambert_t)

import oracles


def test_tspec_validation():
    with pytest.raises(ValueError):
        TSpec(5, 1, 5)
    with pytest.raises(ValueError):
        TSpec(1, 1, 4)
    TSpec(-2, 1, 5)


def test_lambert_constant_term():
    t = lambert_T(TSpec(2, 1, 5), 40)
    # only the n = 0 term reaches q^0
    assert t.coefficient(0) == 1
    assert oracles.as_coeff_dict(t, 0, 40) == oracles.lambert_reference(2, 1, 5, 40)


@pytest.mark.parametrize("a,b,ell", [(2, 1, 5), (2, 2, 5), (3, 3, 5), (2, 3, 3), (3, 1, 7), (-2, 1, 5), (1, -4, 7)])
def test_lambert_against_reference(a, b, ell):
    t = lambert_t(a, b, ell, 80)
    ref = oracles.lambert_reference(a, b, ell, 80, n_range=8)
    lo = min(ref, default=0)
    assert oracles.as_coeff_dict(t, min(lo, t.valuation if t.coeffs else 0), 80) == ref


def test_lambert_negation_symmetry_example():
    residual = lambert_t(-2, 1, 5, 80) + lambert_t(2, -1, 5, 80).shift(10)
    assert residual.first_nonzero_below(80) is None


@given(st.sampled_from([3, 5, 7]), st.integers(min_value=-10, max_value=10),
       st.integers(min_value=-10, max_value=10))
def test_lambert_negation_symmetry(ell, a, b):
    if a == 0 or a % ell == 0:
        return
    residual = lambert_t(-a, b, ell, 80) + lambert_t(a, -b, ell, 80).shift(ell * a)
    assert residual.first_nonzero_below(80) is None


def test_lambert_matches_main_theorem_sums():
    # exponent polynomials (9n^2+27n)/2 and (9n^2+21n)/2 over 1 - q^(9n+6)
    for b, poly in ((3, lambda n: (9 * n * n + 27 * n) // 2), (2, lambda n: (9 * n * n + 21 * n) // 2)):
        t = lambert_t(2, b, 3, 60)
        items = {}
        for n in range(-8, 9):
            e = poly(n)
            m = 9 * n + 6
            sign = 1 if n % 2 == 0 else -1
            if m > 0:
                k = 0
                while e + m * k < 60:
                    items[e + m * k] = items.get(e + m * k, 0) + sign
                    k += 1
            else:
                k = 1
                while e - m * k < 60:
                    items[e - m * k] = items.get(e - m * k, 0) - sign
                    k += 1
        items = {e: Fraction(c) for e, c in items.items() if c}
        lo = min(items, default=0)
        assert oracles.as_coeff_dict(t, lo, 60) == items


def test_p_series_examples():
    assert P_series(4, 5, 40).equal_upto(P_series(1, 5, 40)) is None
    lhs = P_series(6, 5, 40).shift(5)
    assert lhs.equal_upto(-P_series(1, 5, 40)) is None
    p1 = P_series(1, 3, 30)
    assert oracles.as_coeff_dict(p1, 0, 11) == {e: Fraction(c) for e, c in
                                                oracles.jac_reference(3, 9, 11).items()}


def test_p_series_negative_arguments():
    # P(-1) = -q^(-5) P(1) at ell = 5
    lhs = P_series(-1, 5, 40)
    rhs = -P_series(1, 5, 45).shift(-5)
    assert lhs.equal_upto(rhs, 40) is None
    assert lhs.valuation == -5


def test_p_series_rejects_degenerate():
    with pytest.raises(ValueError):
        P_series(5, 5, 30)
    with pytest.raises(ValueError):
        P_series(0, 7, 30)
    with pytest.raises(ValueError):
        P_series(-14, 7, 30)


def test_e_series():
    e1 = E_series(1, 16)
    assert oracles.as_coeff_dict(e1, 0, 16) == oracles.pentagonal_coeffs(16)
    assert E_series(25, 201).equal_upto(E_series(1, 9).substitute_qk(25), 201) is None
    assert E_series(7, 30).coefficient(0) == 1
    with pytest.raises(ValueError):
        E_series(0, 10)


def test_chan_variant2_examples():
    # the T(2,3,5) relation used in the RU5 argument
    assert chan_identity_residual(2, 5, 1, 2, None, 60).first_nonzero_below(60) is None
    assert chan_identity_residual(2, 5, 1, 3, None, 60).first_nonzero_below(60) is None


def test_chan_variant1_examples():
    # ell=5, a=2+k+c, b1=2, b2=k at k=3, c=0
    assert chan_identity_residual(1, 5, 5, 2, 3, 60).first_nonzero_below(60) is None
    # ell=7, a=3+k+c, b1=3, b2=k at k=2, c=-2
    assert chan_identity_residual(1, 7, 3, 3, 2, 100).first_nonzero_below(100) is None


def test_chan_full_suite():
    for variant, ell, a, b1, b2 in chan_suite_parameters():
        prec = 100 if ell == 7 else 60
        residual = chan_identity_residual(variant, ell, a, b1, b2, prec)
        assert residual.first_nonzero_below(prec) is None, (variant, ell, a, b1, b2)


def test_chan_rejects_bad_variant():
    with pytest.raises(ValueError):
        chan_identity_residual(3, 5, 1, 2, None, 20)
    with pytest.raises(ValueError):
        chan_identity_residual(1, 5, 1, 2, None, 20)
