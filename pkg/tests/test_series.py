import math
from fractions import Fraction

import pytest

from wzzeta import pairs
from wzzeta.errors import ConvergenceError, PoleError
from wzzeta.hurwitz import hurwitz_reference, hurwitz_series_spec
from wzzeta.numeric import PrecisionContext, const_pi, format_digits
from wzzeta.poly import Poly2, RationalFunction2, rf2_eval
from wzzeta.series import SeriesSpec, eval_series, partial_sums_exact, plan_terms, tail_bound

n = Poly2.n()
FAST2 = hurwitz_series_spec(2, "fast")
FAST3 = hurwitz_series_spec(3, "fast")


def geometric(first=1, ratio=Fraction(1, 2), base=2):
    return SeriesSpec(lambda x: Fraction(first), RationalFunction2(Poly2.const(ratio)), Fraction(base))


@pytest.mark.parametrize("digits,base,terms", [(1000, 64, 559), (1000, 1024, 338), (1, 10, 6)])
def test_plan_terms(digits, base, terms):
    assert plan_terms(digits, base) == terms


def test_plan_terms_rejects_bad_input():
    with pytest.raises(ValueError):
        plan_terms(0, 64)
    with pytest.raises(ValueError):
        plan_terms(10, 1)


def test_geometric_series():
    res = eval_series(geometric(), Fraction(0), PrecisionContext(30))
    assert abs(res.value - 2) < res.context.mp.mpf(10) ** -30
    assert res.last_term_magnitude <= res.context.eps


def test_fast2_at_zero_is_zeta2():
    ctx = PrecisionContext(30)
    res = eval_series(FAST2, Fraction(0), ctx)
    assert format_digits(res.value, 30) == format_digits(const_pi(ctx) ** 2 / 6, 30)
    assert res.last_term_magnitude <= ctx.eps


def test_fast3_at_zero_is_zeta3():
    res = eval_series(FAST3, Fraction(0), PrecisionContext(30))
    assert format_digits(res.value, 31) == "1.202056903159594285399738161511"


@pytest.mark.parametrize("digits", [50, 200, 1000])
def test_plan_is_sufficient_for_zeta2(digits):
    ctx = PrecisionContext(digits)
    res = eval_series(FAST2, Fraction(0), ctx)
    assert res.terms_used <= plan_terms(digits, 64) + 1
    assert abs(res.value - const_pi(ctx) ** 2 / 6) < ctx.mp.mpf(10) ** -digits


def test_monotone_refinement():
    low = eval_series(FAST3, Fraction(-4, 5), PrecisionContext(100))
    high = eval_series(FAST3, Fraction(-4, 5), PrecisionContext(200))
    assert abs(low.value - high.value) < high.context.mp.mpf(10) ** -95


def test_alternating_partial_sums_bracket_the_value():
    ctx = PrecisionContext(60)
    value = eval_series(FAST3, Fraction(0), ctx).value
    sums = partial_sums_exact(FAST3, Fraction(0), 12)
    for lo, hi in zip(sums, sums[1:]):
        lo, hi = ctx.real(lo), ctx.real(hi)
        assert min(lo, hi) <= value <= max(lo, hi)


@pytest.mark.parametrize("spec,G", [
    (FAST2, pairs.fast2_pair()[1]), (FAST3, pairs.fast3_pair()[1]),
])
@pytest.mark.parametrize("x", [Fraction(0), Fraction(-3, 4), Fraction(-4, 5), Fraction(2, 7)])
def test_term_consistency(spec, G, x):
    for m in range(21):
        assert G.unsigned(m + 1, x) / G.unsigned(m, x) == rf2_eval(spec.ratio, m, x)


def test_stored_ratio_matches_term_ratio():
    ratio = pairs.fast2_pair()[1].ratio_n()
    assert ratio.same_function(pairs.FAST2_RATIO)
    assert not ratio.same_function(pairs.FAST2_RATIO_LITERAL)


@pytest.mark.parametrize("spec", [FAST2, FAST3, hurwitz_series_spec(2, "simple"),
                                  hurwitz_series_spec(3, "simple")])
def test_ratio_tends_to_inverse_base(spec):
    for m in (10 ** 3, 10 ** 4):
        r = abs(float(rf2_eval(spec.ratio, m, Fraction(-4, 5))))
        assert abs(r * float(spec.base_magnitude) - 1) < 0.1


def test_tail_bound_examples():
    ctx = PrecisionContext(30)
    assert tail_bound(geometric(), 0, Fraction(0), ctx) == 1
    assert tail_bound(FAST2, 100, Fraction(0), ctx) < ctx.mp.mpf(10) ** -178
    assert tail_bound(FAST3, 10, Fraction(0), ctx) < ctx.mp.mpf(10) ** -27


def test_tail_bound_bounds_the_tail():
    ctx = PrecisionContext(80)
    total = eval_series(FAST2, Fraction(-4, 5), ctx).value
    sums = partial_sums_exact(FAST2, Fraction(-4, 5), 21)
    assert abs(total - ctx.real(sums[20])) <= tail_bound(FAST2, 20, Fraction(-4, 5), ctx)


def test_pole_is_reported():
    spec = SeriesSpec(lambda x: Fraction(1), 1 / (n - 3), Fraction(2))
    with pytest.raises(PoleError, match="pole at term 3"):
        eval_series(spec, Fraction(0), PrecisionContext(10))


def test_divergence_is_reported():
    spec = SeriesSpec(lambda x: Fraction(1), RationalFunction2(Poly2.const(2)), Fraction(2))
    with pytest.raises(ConvergenceError):
        eval_series(spec, Fraction(0), PrecisionContext(10))


def test_real_valued_x():
    ctx = PrecisionContext(40)
    a = ctx.mp.sqrt(2)
    res = eval_series(FAST2, a - 1, ctx)
    assert abs(res.value - hurwitz_reference(2, a, ctx)) < ctx.mp.mpf(10) ** -35
    assert math.isclose(res.terms_used, plan_terms(40, 64), abs_tol=2)
