"""Exact and arbitrary-precision arithmetic shared by every evaluator.

Exact quantities are :class:`fractions.Fraction`; approximate ones are mpmath
``mpf`` values created inside a private :class:`mpmath.MPContext` whose
precision comes from a :class:`PrecisionContext`.  Nothing in this package
touches the global ``mpmath.mp`` precision.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

import mpmath
from mpmath.libmp import to_str

DEFAULT_GUARD = 20

_RATIONAL_RE = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


@lru_cache(maxsize=64)
def _mp_context(dps: int) -> mpmath.MPContext:
    # Shared read-only: callers never change the precision of a cached context.
    mp = mpmath.MPContext()
    mp.dps = dps
    return mp


@dataclass(frozen=True)
class PrecisionContext:
    """Requested decimal digits plus guard digits.

    Parameters
    ----------
    digits : int
        Number of correct significant digits the caller wants.
    guard : int
        Extra digits carried during the computation.
    """

    digits: int
    guard: int = DEFAULT_GUARD

    def __post_init__(self):
        if int(self.digits) != self.digits or self.digits < 1:
            raise ValueError(f"digits must be a positive integer, got {self.digits!r}")
        if int(self.guard) != self.guard or self.guard < 0:
            raise ValueError(f"guard must be a nonnegative integer, got {self.guard!r}")

    @property
    def working(self) -> int:
        return self.digits + self.guard

    @property
    def mp(self) -> mpmath.MPContext:
        return _mp_context(self.working)

    @property
    def eps(self):
        """``10**-digits`` as a working-precision real."""
        return self.mp.mpf(10) ** (-self.digits)

    def real(self, value):
        """Convert an int, Fraction, float, string or mpf to a working real."""
        return to_real(value, self)

    def with_digits(self, digits: int) -> "PrecisionContext":
        return PrecisionContext(digits, self.guard)


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` (optional leading minus) exactly.

    >>> parse_rational("-4/5")
    Fraction(-4, 5)
    """
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ValueError(f"not a rational literal: {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and rational literals to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def is_exact(value) -> bool:
    return isinstance(value, (Rational, str))


def to_real(value, ctx: PrecisionContext):
    mp = ctx.mp
    if isinstance(value, Fraction):
        return mp.mpf(value.numerator) / value.denominator
    if isinstance(value, str):
        return to_real(parse_rational(value), ctx)
    return mp.mpf(value)


def pochhammer(a, n: int):
    """Rising factorial ``a (a+1) ... (a+n-1)``; ``(a)_0 = 1``.

    Exact for Fraction/int ``a``; works for any numeric type supporting
    ``+`` and ``*``.
    """
    if n < 0:
        raise ValueError("pochhammer length must be nonnegative")
    result = Fraction(1) if isinstance(a, Rational) else a * 0 + 1
    for i in range(n):
        result *= a + i
    return result


def const_pi(ctx: PrecisionContext):
    return +ctx.mp.pi


def const_sqrt(m: int, ctx: PrecisionContext):
    if m < 1:
        raise ValueError("const_sqrt needs m >= 1")
    return ctx.mp.sqrt(m)


def format_digits(value, digits: int) -> str:
    """Decimal string of ``value`` with exactly ``digits`` significant digits.

    Fixed notation is used when the decimal exponent lies in ``[-6, digits)``,
    scientific otherwise.
    """
    if digits < 1:
        raise ValueError("digits must be positive")
    raw = to_str(value._mpf_, digits, min_fixed=0, max_fixed=0, strip_zeros=False)
    if raw in ("0.0", "0.0e+0") or not value:
        return "0." + "0" * (digits - 1) if digits > 1 else "0"
    sign = "-" if raw.startswith("-") else ""
    body = raw.lstrip("-")
    mant, _, exp = body.partition("e")
    exp = int(exp) if exp else 0
    sig = mant.replace(".", "")
    sig = (sig + "0" * digits)[:digits]
    if 0 <= exp < digits:
        whole, frac = sig[: exp + 1], sig[exp + 1:]
        return sign + whole + ("." + frac if frac else "")
    if -6 <= exp < 0:
        return sign + "0." + "0" * (-exp - 1) + sig
    out = sig[0] + ("." + sig[1:] if digits > 1 else "")
    return f"{sign}{out}e{exp:+d}"


def agree_digits(a, b, ctx: PrecisionContext) -> float:
    """Number of leading decimal digits on which ``a`` and ``b`` agree."""
    mp = ctx.mp
    diff = abs(mp.mpf(a) - mp.mpf(b))
    if not diff:
        return float(ctx.working)
    scale = max(abs(mp.mpf(a)), abs(mp.mpf(b)), mp.mpf(1))
    return float(-mp.log10(diff / scale))
