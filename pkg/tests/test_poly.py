from fractions import Fraction

import pytest

from wzzeta.errors import PoleError
from wzzeta.pairs import FAST2_RATIO, FAST2_RATIO_AT_ZERO
from wzzeta.poly import Poly2, RationalFunction2, product, rf2_eval

n, x = Poly2.n(), Poly2.x()


def test_no_zero_coefficients_stored():
    p = (n + x) - (n + x)
    assert p.is_zero() and p.terms == {}
    assert (n + 1 - n).terms == {(0, 0): Fraction(1)}


def test_arithmetic_and_degree():
    p = (n + 2 * x + 1) ** 3
    assert p.degree() == (3, 3)
    assert p.total_degree() == 3
    assert p.coeff(0, 3) == 8 and p.coeff(1, 1) == 12
    assert p(Fraction(1, 2), Fraction(-1, 3)) == Fraction(5, 6) ** 3
    assert product([n, n + 1, n + 2])(3) == 60


def test_compose_and_shift():
    p = n ** 2 + n * x
    assert p.shift_n(1) == (n + 1) ** 2 + (n + 1) * x
    assert p.compose(n, x + n) == 2 * n ** 2 + n * x
    assert p.specialize_x(Fraction(1, 2)) == n ** 2 + n / 2


def test_integer_coefficients_in_n():
    coeffs, scale = (n ** 2 / 3 + Fraction(1, 2)).integer_coefficients_in_n()
    assert scale == 6 and coeffs == [3, 0, 2]


def test_rf2_eval_examples():
    assert rf2_eval((n + x) / (n - x), 2, 1) == 3
    assert rf2_eval(FAST2_RATIO, 0, 0) == Fraction(17, 1404)
    with pytest.raises(PoleError):
        rf2_eval(1 / (n - x), 1, 1)


def test_rf2_eval_is_exact():
    f = (3 * n + 2 * x + 3) / (2 * (2 * n + 1) * (n + x + 1) ** 2)
    for nn in range(6):
        for xx in (Fraction(1, 3), Fraction(-2, 7), Fraction(5)):
            value = rf2_eval(f, nn, xx)
            assert value * f.den(nn, xx) == f.num(nn, xx)


def test_ratio_at_zero_is_specialisation():
    assert FAST2_RATIO.specialize_x(0).same_function(FAST2_RATIO_AT_ZERO)


def test_rational_function_algebra():
    f = RationalFunction2(n + 1, n + 2)
    g = RationalFunction2(x, n + 2)
    assert (f + g).same_function(RationalFunction2(n + x + 1, n + 2))
    assert (f * g / g).same_function(f)
    assert (f - f).num.is_zero()
    assert f.shift_n(1)(0) == Fraction(2, 3)
    with pytest.raises(ZeroDivisionError):
        RationalFunction2(n, Poly2())
