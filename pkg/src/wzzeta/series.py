"""Running-product evaluation of hypergeometric series.

A series ``sum_n G(n, x)`` is described by its first term ``G(0, x)`` and its
term ratio ``T(n, x) = G(n+1, x) / G(n, x)``; the evaluator accumulates
``H <- H * T(n, x)`` and adds ``H`` to the running sum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Callable, List

from .errors import ConvergenceError, PoleError
from .numeric import PrecisionContext, to_real
from .poly import RationalFunction2, rf2_eval

DIVERGENCE_WINDOW = 50


@dataclass(frozen=True)
class SeriesSpec:
    """First term, term ratio and asymptotic decay of a series in ``n``.

    ``base_magnitude`` is ``1 / lim |T(n, x)|`` (64 for a ``(1/64)^n`` series).
    """

    first_term: Callable
    ratio: RationalFunction2
    base_magnitude: Fraction
    sign_alternates: bool = False
    name: str = ""


@dataclass
class SeriesResult:
    value: object
    terms_used: int
    last_term_magnitude: object
    context: PrecisionContext
    warnings: List[str] = field(default_factory=list)

    @property
    def digits(self) -> int:
        return self.context.digits


def plan_terms(digits: int, base_magnitude) -> int:
    """Terms needed for a geometric tail below ``10**-digits``, plus 5 spare.

    >>> plan_terms(1000, 64)
    559
    """
    if digits < 1:
        raise ValueError("digits must be positive")
    base = Fraction(base_magnitude)
    if base <= 1:
        raise ValueError("base_magnitude must exceed 1")
    return math.ceil(digits / math.log10(base)) + 5


class _RatioStepper:
    """Evaluates ``T(n, x)`` for a fixed ``x``, as two integers when x is rational."""

    def __init__(self, ratio: RationalFunction2, x):
        self.exact = isinstance(x, Rational)
        if self.exact:
            r = ratio.specialize_x(x)
            self.p, sp = r.num.integer_coefficients_in_n()
            self.q, sq = r.den.integer_coefficients_in_n()
            # T = (p(n)/sp) / (q(n)/sq)
            self.p = [c * sq for c in self.p]
            self.q = [c * sp for c in self.q]
        else:
            self.ratio, self.x = ratio, x

    @staticmethod
    def _horner(coeffs, n):
        acc = 0
        for c in reversed(coeffs):
            acc = acc * n + c
        return acc

    def __call__(self, n: int):
        if self.exact:
            return self._horner(self.p, n), self._horner(self.q, n)
        return rf2_eval(self.ratio, n, self.x), 1


def _term_factors(spec: SeriesSpec, x, ctx: PrecisionContext):
    mp = ctx.mp
    first = spec.first_term(x)
    H = to_real(first, ctx) if isinstance(first, (Rational, str)) else mp.mpf(first)
    return H, _RatioStepper(spec.ratio, x)


def eval_series(spec: SeriesSpec, x, ctx: PrecisionContext) -> SeriesResult:
    """Sum ``spec`` at ``x`` to ``ctx.digits`` digits by the running product.

    ``plan_terms(ctx.digits, spec.base_magnitude)`` terms are summed; if the
    last one is still above ``10**-digits`` summation continues until it is not.

    Raises
    ------
    PoleError
        If the ratio denominator vanishes at some integer ``n`` for this ``x``.
    ConvergenceError
        If term magnitudes fail to decay over a 50-term window.
    """
    mp = ctx.mp
    H, step = _term_factors(spec, x, ctx)
    total = H
    planned = plan_terms(ctx.digits, spec.base_magnitude)
    eps = ctx.eps
    history = [abs(H)]
    n = 0
    terms = 1
    # Hard cap: four times the plan; a correct spec never gets near it.
    while terms < 4 * planned:
        if terms >= planned and abs(H) <= eps:
            break
        p, q = step(n)
        if q == 0:
            raise PoleError(f"pole at term {n}")
        if p == 0:
            H = mp.zero
            terms += 1
            break
        H = H * p / q
        total += H
        n += 1
        terms += 1
        history.append(abs(H))
        if len(history) > DIVERGENCE_WINDOW:
            if history[-1] >= history[-1 - DIVERGENCE_WINDOW] and history[-1] > eps:
                raise ConvergenceError(f"divergent: terms not decaying near n={n}")
    else:
        raise ConvergenceError(f"term magnitude {mp.nstr(abs(H), 5)} above 1e-{ctx.digits} "
                               f"after {terms} terms")
    warnings = []
    if terms > planned:
        warnings.append(f"needed {terms - planned} terms beyond the plan of {planned}")
    return SeriesResult(value=total, terms_used=terms, last_term_magnitude=abs(H),
                        context=ctx, warnings=warnings)


def partial_sums_exact(spec: SeriesSpec, x, count: int) -> List[Fraction]:
    """First ``count`` partial sums in exact rational arithmetic."""
    H = Fraction(spec.first_term(x))
    sums = [H]
    for n in range(count - 1):
        H *= rf2_eval(spec.ratio, n, x)
        sums.append(sums[-1] + H)
    return sums


def tail_bound(spec: SeriesSpec, n: int, x, ctx: PrecisionContext, term=None):
    """Upper bound ``|term_n| r / (1 - r)`` on ``sum_{m>n} |term_m|``.

    ``r`` is the observed ``|T(n, x)|`` clamped to ``[1/base, 2/base]``; the
    bound is valid once every later ratio stays below ``r``.  ``term`` is the
    n-th term if the caller already has it.
    """
    mp = ctx.mp
    if term is None:
        H, step = _term_factors(spec, x, ctx)
        for i in range(n):
            p, q = step(i)
            H = H * p / q
        term = H
    p, q = _RatioStepper(spec.ratio, x)(n)
    observed = abs(mp.mpf(p) / q)
    base = to_real(Fraction(spec.base_magnitude), ctx)
    r = min(max(observed, 1 / base), 2 / base)
    if r >= 1:
        return mp.inf
    return abs(mp.mpf(term)) * r / (1 - r)
