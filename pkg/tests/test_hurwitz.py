from fractions import Fraction

import pytest

from wzzeta.errors import DomainError
from wzzeta.hurwitz import (catalan_reference, domain_shift, hurwitz_reference,
                            hurwitz_series, hurwitz_series_spec, hurwitz_zeta,
                            zeta2_fast, zeta2_simple, zeta3_fast, zeta3_simple)
from wzzeta.numeric import PrecisionContext, const_pi, format_digits

A_VALUES = [Fraction(1), Fraction(1, 2), Fraction(1, 3), Fraction(1, 4),
            Fraction(1, 5), Fraction(3, 4), Fraction(7, 8)]


def tol(ctx, drop=5):
    return ctx.mp.mpf(10) ** -(ctx.digits - drop)


def test_first_terms():
    zero = Fraction(0)
    assert hurwitz_series_spec(2, "simple").first_term(zero) == Fraction(3, 2)
    assert hurwitz_series_spec(3, "simple").first_term(zero) == Fraction(5, 4)
    assert hurwitz_series_spec(2, "fast").first_term(zero) == Fraction(13, 8)
    assert hurwitz_series_spec(3, "fast").first_term(zero) == Fraction(77, 64)


def test_zeta2_simple_values():
    ctx = PrecisionContext(30)
    assert format_digits(zeta2_simple(1, ctx), 30) == "1.64493406684822643647241516665"
    quarter = zeta2_simple(Fraction(1, 4), ctx)
    assert abs(quarter - (const_pi(ctx) ** 2 + 8 * catalan_reference(ctx))) < tol(ctx)


def test_zeta3_simple_values():
    assert format_digits(zeta3_simple(1, PrecisionContext(30)), 30) == "1.20205690315959428539973816151"
    ctx = PrecisionContext(20)
    half = zeta3_simple(Fraction(1, 2), ctx)
    assert format_digits(half, 20) == "8.4143983221171599978"
    assert format_digits(half, 20) == format_digits(7 * hurwitz_reference(3, 1, ctx), 20)


def test_fast_against_simple_at_one_fifth():
    ctx = PrecisionContext(200)
    assert abs(zeta2_fast(Fraction(1, 5), ctx) - zeta2_simple(Fraction(1, 5), ctx)) < tol(ctx)
    assert abs(zeta3_fast(Fraction(1, 5), ctx) - zeta3_simple(Fraction(1, 5), ctx)) < tol(ctx)


@pytest.mark.parametrize("s", [2, 3])
@pytest.mark.parametrize("a", A_VALUES)
def test_cross_method_at_60_digits(s, a):
    ctx = PrecisionContext(60)
    fast = hurwitz_zeta(s, a, ctx, "fast")
    simple = hurwitz_zeta(s, a, ctx, "simple")
    oracle = hurwitz_zeta(s, a, ctx, "oracle")
    assert abs(fast - simple) < tol(ctx)
    assert abs(fast - oracle) < tol(ctx)
    assert abs(simple - oracle) < tol(ctx)


@pytest.mark.parametrize("s", [2, 3])
@pytest.mark.parametrize("a", [Fraction(1, 3), Fraction(1, 2), Fraction(1)])
def test_recurrence(s, a):
    ctx = PrecisionContext(60)
    lhs = hurwitz_zeta(s, a, ctx)
    rhs = ctx.real(a) ** -s + hurwitz_zeta(s, a + 1, ctx)
    assert abs(lhs - rhs) < tol(ctx)


def test_known_closed_forms():
    ctx = PrecisionContext(50)
    pi = const_pi(ctx)
    z3 = hurwitz_zeta(3, 1, ctx)
    assert abs(hurwitz_zeta(2, Fraction(1, 2), ctx) - pi ** 2 / 2) < tol(ctx)
    assert abs(hurwitz_zeta(3, Fraction(1, 2), ctx) - 7 * z3) < tol(ctx)
    assert abs(hurwitz_zeta(2, Fraction(1, 4), ctx) - pi ** 2 - 8 * catalan_reference(ctx)) < tol(ctx)


@pytest.mark.parametrize("digits", [100, 500, 2000])
def test_term_economy(digits):
    ctx = PrecisionContext(digits)
    assert hurwitz_series(2, Fraction(1, 5), ctx).terms_used <= -(-digits // 1.80) + 6
    assert hurwitz_series(3, Fraction(1, 5), ctx).terms_used <= -(-digits // 3.01) + 6


def test_large_and_real_arguments():
    ctx = PrecisionContext(40)
    for a in (Fraction(7, 2), Fraction(25)):
        assert abs(hurwitz_zeta(2, a, ctx) - hurwitz_reference(2, a, ctx)) < tol(ctx)
    a = ctx.mp.pi / 3
    assert abs(hurwitz_zeta(3, a, ctx) - hurwitz_reference(3, a, ctx)) < tol(ctx)


def test_string_argument():
    ctx = PrecisionContext(30)
    assert hurwitz_zeta(2, "1/5", ctx) == hurwitz_zeta(2, Fraction(1, 5), ctx)


def test_domain_shift():
    ctx = PrecisionContext(30)
    assert domain_shift(2, Fraction(1, 2), ctx) == (Fraction(1, 2), 0)
    a, corr = domain_shift(2, Fraction(5, 2), ctx)
    assert a == Fraction(1, 2) and abs(corr - (4 + ctx.real(Fraction(4, 9)))) < tol(ctx)
    a, corr = domain_shift(3, 2, ctx)
    assert a == 1 and corr == 1


@pytest.mark.parametrize("a", [0, Fraction(-1, 2), -3])
def test_nonpositive_a_is_a_domain_error(a):
    ctx = PrecisionContext(20)
    with pytest.raises(DomainError):
        hurwitz_zeta(2, a, ctx)
    with pytest.raises(DomainError):
        domain_shift(3, a, ctx)


def test_unsupported_s():
    with pytest.raises(DomainError):
        hurwitz_zeta(4, 1, PrecisionContext(20))


def test_reference_values():
    ctx = PrecisionContext(20)
    assert format_digits(hurwitz_reference(2, Fraction(1, 2), ctx), 20) == "4.9348022005446793094"
    assert format_digits(hurwitz_reference(2, 1, ctx), 20) == "1.6449340668482264365"
    assert format_digits(hurwitz_reference(3, 1, ctx), 20) == "1.2020569031595942854"
    with pytest.raises(DomainError):
        hurwitz_reference(2, 1, PrecisionContext(201))


def test_catalan_reference():
    ctx = PrecisionContext(30)
    assert format_digits(catalan_reference(ctx), 30) == "0.915965594177219015054603514932"
