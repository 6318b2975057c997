"""Dirichlet L-values L(s, chi_d) for real primitive characters, s = 2, 3.

``L(s, chi_d) = |d|^-s sum_{j=1}^{|d|-1} chi_d(j) zeta(s, j/|d|)`` with
``chi_d(j)`` the Kronecker symbol ``(d | j)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from . import pairs
from .errors import DomainError
from .hurwitz import hurwitz_series, hurwitz_zeta, series_spec_from_term
from .numeric import PrecisionContext, const_pi, const_sqrt
from .series import SeriesResult, eval_series


def _squarefree(m: int) -> bool:
    m = abs(m)
    p = 2
    while p * p <= m:
        if m % (p * p) == 0:
            return False
        p += 1
    return m != 0


def is_fundamental_discriminant(d: int) -> bool:
    if d in (0, 1):
        return False
    if d % 4 == 1:
        return _squarefree(d)
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and _squarefree(m)
    return False


def kronecker_symbol(d: int, n: int) -> int:
    """Kronecker symbol ``(d | n)`` for integer ``d`` and ``n >= 0``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1 if abs(d) == 1 else 0
    result = 1
    # factor 2 out of n
    v = (n & -n).bit_length() - 1
    n >>= v
    if v:
        if d % 2 == 0:
            return 0
        if v % 2 and d % 8 in (3, 5):
            result = -result
    # n odd now: Jacobi symbol (d | n)
    a = d % n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


@dataclass(frozen=True)
class CharacterSpec:
    d: int

    def __post_init__(self):
        if not is_fundamental_discriminant(self.d):
            raise DomainError(f"{self.d} is not a fundamental discriminant")

    @property
    def modulus(self) -> int:
        return abs(self.d)

    def __call__(self, n: int) -> int:
        return kronecker_symbol(self.d, n)

    def values(self) -> List[int]:
        return [self(j) for j in range(self.modulus)]


def l_value_result(char, s: int, ctx: PrecisionContext, method: str = "fast"):
    """``(L(s, chi), total series terms)``; terms are 0 for the oracle method."""
    if not isinstance(char, CharacterSpec):
        char = CharacterSpec(char)
    q = char.modulus
    mp = ctx.mp
    total, terms = mp.zero, 0
    # Fixed index order keeps the rounding sequence deterministic.
    for j in range(1, q):
        c = char(j)
        if not c:
            continue
        if method == "oracle":
            value = hurwitz_zeta(s, Fraction(j, q), ctx, "oracle")
        else:
            res = hurwitz_series(s, Fraction(j, q), ctx, method)
            value, terms = res.value, terms + res.terms_used
        total += c * value
    return total / mp.mpf(q) ** s, terms


def l_value(char, s: int, ctx: PrecisionContext, method: str = "fast"):
    """``L(s, chi)`` through the Hurwitz decomposition.

    ``method`` selects the Hurwitz evaluator: ``"fast"``, ``"simple"`` or
    ``"oracle"``.  Parity is not checked; characters whose L-value vanishes
    trivially simply return a tiny number.
    """
    return l_value_result(char, s, ctx, method)[0]


def l_minus8_series(ctx: PrecisionContext) -> SeriesResult:
    """Sum of the accelerated base-1/64 series whose value is
    ``L(2, chi_-8) - sqrt(2) pi^2 / 16``."""
    spec = series_spec_from_term(pairs.LMINUS8_SERIES_TERM)
    return eval_series(spec, Fraction(0), ctx)


def l_minus8_2_fast(ctx: PrecisionContext):
    return const_sqrt(2, ctx) * const_pi(ctx) ** 2 / 16 + l_minus8_series(ctx).value


def alternating_odd_sum(x, ctx: PrecisionContext) -> SeriesResult:
    """``sum_k (-1)^k / (2k + 2x + 1)^2`` from the companion of the L_-8 pair."""
    _, G = pairs.lminus8_pair()
    return eval_series(series_spec_from_term(G), Fraction(x), ctx)


# --- closed-form identities ---------------------------------------------------------

def _rhs_1a(z, pi, ctx):
    return -pi ** 2 + z(2, Fraction(1, 4))


def _rhs_1b(z, pi, ctx):
    return -4 * pi ** 2 + 6 * z(2, Fraction(1, 3))


def _rhs_2(z, pi, ctx):
    return -4 * pi ** 2 + z(2, Fraction(1, 8)) + z(2, Fraction(3, 8))


def _rhs_3(z, pi, ctx):
    mp = ctx.mp
    return (-4 * pi ** 3 * mp.sqrt(25 - 2 * mp.sqrt(5))
            + 10 * z(3, Fraction(1, 5)) - 10 * z(3, Fraction(2, 5)))


def _rhs_4(z, pi, ctx):
    return -16 * pi ** 3 + 2 * z(3, Fraction(1, 8)) - 2 * z(3, Fraction(3, 8))


def _rhs_5(z, pi, ctx):
    return (-32 * const_sqrt(3, ctx) * pi ** 3
            + 2 * z(3, Fraction(1, 12)) - 2 * z(3, Fraction(5, 12)))


# (id, discriminant, s, multiple of L, right-hand side)
CLOSED_FORMS: Tuple[tuple, ...] = (
    ("1a", -4, 2, 8, _rhs_1a),
    ("1b", -3, 2, 27, _rhs_1b),
    ("2", -8, 2, 32, _rhs_2),
    ("3", 5, 3, 625, _rhs_3),
    ("4", 8, 3, 512, _rhs_4),
    ("5", 12, 3, 1728, _rhs_5),
)


def closed_form_sides(identity: str, ctx: PrecisionContext, d: int | None = None):
    """``(multiple * L, rhs)`` for one identity; ``d`` overrides the character."""
    for ident, disc, s, mult, rhs in CLOSED_FORMS:
        if ident == identity:
            z = lambda s_, a: hurwitz_zeta(s_, a, ctx, "fast")
            lhs = mult * l_value(CharacterSpec(d if d is not None else disc), s, ctx)
            return lhs, rhs(z, const_pi(ctx), ctx)
    raise KeyError(identity)


def verify_closed_forms(ctx: PrecisionContext):
    """``[(id, |lhs - rhs|)]`` for the six Hurwitz closed forms."""
    out = []
    for ident, *_ in CLOSED_FORMS:
        lhs, rhs = closed_form_sides(ident, ctx)
        out.append((ident, abs(lhs - rhs)))
    return out
