"""Hurwitz zeta values zeta(2, a) and zeta(3, a).

Every series here is ``sum_n G(n, a - 1)`` for the companion ``G`` of a WZ
pair whose ``F(0, k)`` is ``(k+1)^-s``, so the sum telescopes to
``zeta(s, a)``.  The base-1/4 and base-(-1/4) series are the simple ones;
the accelerated pairs give 1/64 and -1/1024.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

import mpmath

from . import pairs
from .errors import DomainError
from .numeric import PrecisionContext, as_rational, to_real
from .series import SeriesResult, SeriesSpec, eval_series

METHODS = ("simple", "fast", "oracle")


def series_spec_from_term(G, name: str = "") -> SeriesSpec:
    z = G.geometric_base
    return SeriesSpec(first_term=lambda x: G.unsigned(0, x), ratio=G.ratio_n(),
                      base_magnitude=1 / abs(z), sign_alternates=z < 0,
                      name=name or G.name)


@lru_cache(maxsize=None)
def hurwitz_series_spec(s: int, method: str) -> SeriesSpec:
    """Series for ``zeta(s, x + 1)`` in the offset ``x``."""
    if s == 2 and method == "simple":
        _, G = pairs.simple2_pair()
    elif s == 3 and method == "simple":
        _, G = pairs.simple3_pair()
    elif s == 2 and method == "fast":
        _, G = pairs.fast2_pair()
    elif s == 3 and method == "fast":
        _, G = pairs.fast3_pair()
    else:
        raise ValueError(f"no series for s={s}, method={method!r}")
    return series_spec_from_term(G, f"zeta{s}_{method}")


def _coerce_a(a):
    """Exact rationals stay Fractions; anything else becomes a real."""
    if isinstance(a, (Rational, str)):
        return as_rational(a)
    return a


def _check_s(s):
    if s not in (2, 3):
        raise DomainError(f"only s = 2 and s = 3 are supported, got s={s}")


def hurwitz_series(s: int, a, ctx: PrecisionContext, method: str = "fast") -> SeriesResult:
    """Evaluate ``zeta(s, a)`` by one of the WZ series and keep the diagnostics."""
    _check_s(s)
    a = _coerce_a(a)
    if not a > 0:
        raise DomainError(f"out of fast domain: need a > 0, got a={a}")
    x = a - 1
    if not isinstance(x, Rational):
        x = ctx.mp.mpf(x)
    return eval_series(hurwitz_series_spec(s, method), x, ctx)


def zeta2_simple(a, ctx: PrecisionContext):
    return hurwitz_series(2, a, ctx, "simple").value


def zeta3_simple(a, ctx: PrecisionContext):
    return hurwitz_series(3, a, ctx, "simple").value


def zeta2_fast(a, ctx: PrecisionContext):
    return hurwitz_series(2, a, ctx, "fast").value


def zeta3_fast(a, ctx: PrecisionContext):
    return hurwitz_series(3, a, ctx, "fast").value


def hurwitz_zeta(s: int, a, ctx: PrecisionContext, method: str = "fast"):
    """``zeta(s, a)`` for ``s in {2, 3}`` and ``a > 0``."""
    if method == "oracle":
        return hurwitz_reference(s, a, ctx)
    return hurwitz_series(s, a, ctx, method).value


def domain_shift(s: int, a, ctx: PrecisionContext):
    """Move ``a`` into ``(0, 1]``: ``zeta(s, a) = zeta(s, a') - correction``.

    Returns ``(a', correction)`` with ``correction = sum_{j<m} (a'+j)^-s``.
    """
    _check_s(s)
    a = _coerce_a(a)
    if not a > 0:
        raise DomainError(f"need a > 0, got a={a}")
    m = max(math.ceil(a) - 1, 0)
    shifted = a - m
    if isinstance(a, Rational):
        correction = to_real(sum((1 / (shifted + j) ** s for j in range(m)), Fraction(0)), ctx)
    else:
        mp = ctx.mp
        correction = mp.fsum(1 / (mp.mpf(shifted) + j) ** s for j in range(m))
    return shifted, correction


# --- oracles ---------------------------------------------------------------------

def hurwitz_reference(s: int, a, ctx: PrecisionContext):
    """Direct summation plus an Euler-Maclaurin tail.

    ``sum_{k<M} (k+a)^-s + (M+a)^(1-s)/(s-1) + (M+a)^-s / 2
    + sum_j B_2j/(2j)! (s)_(2j-1) (M+a)^(-s-2j+1)`` with ``M`` about the
    digit count and Bernoulli corrections added until the next one is below
    the working precision.  Meant for validation up to 200 digits.
    """
    _check_s(s)
    if ctx.digits > 200:
        raise DomainError("hurwitz_reference is limited to 200 digits")
    mp = ctx.mp
    shifted, correction = domain_shift(s, a, ctx)
    b = to_real(shifted, ctx) if isinstance(shifted, Rational) else mp.mpf(shifted)
    M = ctx.digits + 10
    head = mp.fsum((b + j) ** (-s) for j in range(M))
    w = b + M
    tail = w ** (1 - s) / (s - 1) + w ** (-s) / 2
    tol = mp.mpf(10) ** (-ctx.working)
    rising = mp.mpf(s)          # (s)_(2j-1), starting at j = 1
    power = w ** (-s - 1)       # w^(-s-2j+1)
    fact = mp.mpf(2)            # (2j)!
    for j in range(1, 4 * M):
        corr = mpmath.bernfrac(2 * j)
        term = (mp.mpf(corr[0]) / corr[1]) / fact * rising * power
        tail += term
        if abs(term) < tol:
            break
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        power /= w * w
        fact *= (2 * j + 1) * (2 * j + 2)
    return head + tail - correction


def alternating_sum(term, ctx: PrecisionContext, n_terms: int | None = None):
    """``sum_k (-1)^k term(k)`` by Cohen-Villegas-Zagier acceleration.

    For a moment sequence ``term`` (such as ``1/(2k+1)^2``) the error after
    ``n`` terms is at most ``2 |sum| / (3+sqrt 8)^n``.
    """
    mp = ctx.mp
    if n_terms is None:
        n_terms = math.ceil(ctx.working / math.log10(3 + math.sqrt(8))) + 2
    d = (3 + mp.sqrt(8)) ** n_terms
    d = (d + 1 / d) / 2
    b = mp.mpf(-1)
    c = -d
    total = mp.zero
    for kk in range(n_terms):
        c = b - c
        total += c * term(kk)
        b = b * (kk + n_terms) * (kk - n_terms) / ((kk + mp.mpf(1) / 2) * (kk + 1))
    return total / d


def catalan_reference(ctx: PrecisionContext):
    """Catalan's constant ``sum_k (-1)^k / (2k+1)^2``."""
    mp = ctx.mp
    return alternating_sum(lambda kk: 1 / mp.mpf(2 * kk + 1) ** 2, ctx)
