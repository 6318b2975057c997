from fractions import Fraction
from math import gcd

import pytest

from wzzeta.dirichlet import (CLOSED_FORMS, CharacterSpec, alternating_odd_sum,
                              closed_form_sides, is_fundamental_discriminant,
                              kronecker_symbol, l_minus8_2_fast, l_minus8_series,
                              l_value, verify_closed_forms)
from wzzeta.errors import DomainError
from wzzeta.hurwitz import catalan_reference, hurwitz_zeta
from wzzeta.numeric import PrecisionContext, const_pi, const_sqrt, format_digits
from wzzeta.pairs import LMINUS8_SERIES_TERM

DISCRIMINANTS = [-3, -4, -8, 5, 8, 12, -7]


def test_kronecker_examples():
    assert kronecker_symbol(-4, 1) == 1
    assert kronecker_symbol(-4, 2) == 0
    assert kronecker_symbol(-4, 3) == -1
    assert kronecker_symbol(-8, 3) == 1
    assert kronecker_symbol(-8, 5) == -1
    assert CharacterSpec(-8).values() == [0, 1, 0, 1, 0, -1, 0, -1]
    assert CharacterSpec(-4).values() == [0, 1, 0, -1]


@pytest.mark.parametrize("d", DISCRIMINANTS)
def test_character_laws(d):
    chi = CharacterSpec(d)
    q = chi.modulus
    for m in range(1, 201):
        assert chi(m + q) == chi(m)
        assert (chi(m) == 0) == (gcd(m, q) > 1)
        for k in range(1, 201 // m + 1):
            assert chi(m * k) == chi(m) * chi(k)


def test_fundamental_discriminants():
    good = [d for d in range(-30, 31) if is_fundamental_discriminant(d)]
    assert good == [-24, -23, -20, -19, -15, -11, -8, -7, -4, -3, 5, 8, 12, 13, 17, 21, 24, 28, 29]
    for d in (0, 1, 4, -1, 9, 6, -12):
        with pytest.raises(DomainError):
            CharacterSpec(d)


def test_catalan_is_l_minus4():
    ctx = PrecisionContext(30)
    catalan = l_value(-4, 2, ctx)
    assert format_digits(catalan, 30) == "0.915965594177219015054603514932"
    assert abs(catalan - catalan_reference(ctx)) < ctx.mp.mpf(10) ** -29
    assert abs(catalan - alternating_odd_sum(0, ctx).value) < ctx.mp.mpf(10) ** -29


def test_l_value_examples():
    ctx = PrecisionContext(30)
    pi = const_pi(ctx)
    tol = ctx.mp.mpf(10) ** -28
    rhs = (-4 * pi ** 2 + 6 * hurwitz_zeta(2, Fraction(1, 3), ctx)) / 27
    assert abs(l_value(-3, 2, ctx) - rhs) < tol
    mp = ctx.mp
    rhs = (-4 * pi ** 3 * mp.sqrt(25 - 2 * mp.sqrt(5)) + 10 * hurwitz_zeta(3, Fraction(1, 5), ctx)
           - 10 * hurwitz_zeta(3, Fraction(2, 5), ctx)) / 625
    assert abs(l_value(5, 3, ctx) - rhs) < tol


@pytest.mark.parametrize("d", DISCRIMINANTS)
@pytest.mark.parametrize("s", [2, 3])
def test_decomposition_against_direct_sum(d, s):
    # Truncating after whole periods leaves a tail of order q / N^s.
    ctx = PrecisionContext(20)
    mp = ctx.mp
    chi = CharacterSpec(d)
    N = 10 ** 4 - 10 ** 4 % chi.modulus
    direct = mp.fsum(chi(m) * mp.mpf(m) ** -s for m in range(1, N + 1))
    value = l_value(chi, s, ctx)
    assert abs(value - direct) < mp.mpf(10) ** -(6 if s == 2 else 9)
    assert abs(l_value(chi, s, ctx, "simple") - value) < mp.mpf(10) ** -15


def test_l_minus8_series():
    assert LMINUS8_SERIES_TERM(0, 0) == Fraction(1761, 9261)
    ctx = PrecisionContext(100)
    assert abs(l_minus8_2_fast(ctx) - l_value(-8, 2, ctx)) < ctx.mp.mpf(10) ** -95
    assert l_minus8_series(ctx).terms_used <= 100 // 1.8 + 6


def test_eighth_identity():
    ctx = PrecisionContext(100)
    lhs = hurwitz_zeta(2, Fraction(1, 8), ctx) + hurwitz_zeta(2, Fraction(7, 8), ctx)
    rhs = (4 + 2 * const_sqrt(2, ctx)) * const_pi(ctx) ** 2
    assert abs(lhs - rhs) < ctx.mp.mpf(10) ** -95


def test_closed_forms():
    ctx = PrecisionContext(50)
    residuals = dict(verify_closed_forms(ctx))
    assert sorted(residuals) == ["1a", "1b", "2", "3", "4", "5"]
    for ident, r in residuals.items():
        assert r < ctx.mp.mpf(10) ** -45, ident


def test_identity_four_needs_positive_discriminant():
    ctx = PrecisionContext(30)
    lhs, rhs = closed_form_sides("4", ctx, d=-8)
    assert abs(lhs - rhs) > 1
    with pytest.raises(KeyError):
        closed_form_sides("9", ctx)


def test_closed_form_table():
    assert [(ident, d, s, mult) for ident, d, s, mult, _ in CLOSED_FORMS] == [
        ("1a", -4, 2, 8), ("1b", -3, 2, 27), ("2", -8, 2, 32),
        ("3", 5, 3, 625), ("4", 8, 3, 512), ("5", 12, 3, 1728)]
    assert all(is_fundamental_discriminant(d) for _, d, *_ in CLOSED_FORMS)
