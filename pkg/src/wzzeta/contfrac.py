"""Continued fractions from term-ratio series.

A fraction is stored level by level::

    head + b(1) / (a(1) + b(2) / (a(2) + b(3) / (a(3) + ...)))

with ``a(j)``, ``b(j)`` exact rationals.  Euler's rewriting of
``g0 + g0 t0 + g0 t0 t1 + ...`` gives level 1 ``(g0, 1)``, level 2
``(-P_0, P_0 + Q_0)`` and for ``j >= 3`` ``(-Q_{j-3} P_{j-2}, P_{j-2} + Q_{j-2})``
where ``t_i = P_i / Q_i``.  Its depth-N convergent is the N-term partial sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional

from .numeric import PrecisionContext, to_real
from .poly import Poly2, RationalFunction2

n = Poly2.n()


@dataclass(frozen=True)
class CFSpec:
    head: Fraction
    numerator: Callable[[int], Fraction]      # b(j), j >= 1
    denominator: Callable[[int], Fraction]    # a(j), j >= 1
    name: str = ""

    def level(self, j: int):
        return self.numerator(j), self.denominator(j)


@dataclass(frozen=True)
class Convergent:
    p: object
    q: object
    depth: int

    @property
    def value(self):
        return self.p / self.q


def _as_n_poly(p) -> Callable[[int], Fraction]:
    if isinstance(p, Poly2):
        if p.degree()[1] > 0:
            raise ValueError("P and Q must depend on n only; specialize x first")
        return lambda m: p.eval(Fraction(m))
    return p


def euler_transform(G0, P, Q, name: str = "") -> CFSpec:
    """Continued fraction equal to ``sum_n G0 prod_{i<n} P(i)/Q(i)``.

    ``P`` and ``Q`` are n-only :class:`Poly2` (or callables ``n -> rational``);
    ``A_n = P_n + Q_n`` and ``B_n = Q_n P_{n+1}``.
    """
    G0 = Fraction(G0)
    Pf, Qf = _as_n_poly(P), _as_n_poly(Q)

    def b(j):
        if j == 1:
            return G0
        if j == 2:
            return -Fraction(Pf(0))
        return -Fraction(Qf(j - 3)) * Fraction(Pf(j - 2))

    def a(j):
        if j == 1:
            return Fraction(1)
        return Fraction(Pf(j - 2)) + Fraction(Qf(j - 2))

    return CFSpec(Fraction(0), b, a, name)


def split_ratio(ratio: RationalFunction2, x=0):
    """``(P, Q)`` for the ratio at a fixed rational ``x``."""
    r = ratio.specialize_x(x)
    return r.num, r.den


def eval_cf_backward(cf: CFSpec, depth: int, ctx: Optional[PrecisionContext] = None):
    """Truncate at ``depth`` levels and evaluate from the innermost level out.

    Exact (Fraction) when ``ctx`` is None.

    Raises
    ------
    ZeroDivisionError
        "zero denominator at level j".
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    conv = (lambda v: Fraction(v)) if ctx is None else (lambda v: to_real(Fraction(v), ctx))
    t = conv(cf.denominator(depth))
    for j in range(depth - 1, 0, -1):
        if t == 0:
            raise ZeroDivisionError(f"zero denominator at level {j + 1}")
        t = conv(cf.denominator(j)) + conv(cf.numerator(j + 1)) / t
    if t == 0:
        raise ZeroDivisionError("zero denominator at level 1")
    return conv(cf.head) + conv(cf.numerator(1)) / t


def eval_cf_forward(cf: CFSpec, depth: int, ctx: Optional[PrecisionContext] = None) -> List[Convergent]:
    """All convergents ``p_j / q_j`` for ``j = 1..depth``.

    ``p_j = a_j p_(j-1) + b_j p_(j-2)``, likewise ``q``; exact integers and
    Fractions when ``ctx`` is None, working-precision reals otherwise.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    conv = (lambda v: Fraction(v)) if ctx is None else (lambda v: to_real(Fraction(v), ctx))
    p_prev, q_prev = conv(1), conv(0)
    p, q = conv(cf.head), conv(1)
    out = []
    for j in range(1, depth + 1):
        b, a = conv(cf.numerator(j)), conv(cf.denominator(j))
        p, p_prev = a * p + b * p_prev, p
        q, q_prev = a * q + b * q_prev, q
        if q == 0:
            raise ZeroDivisionError(f"zero q at level {j}")
        out.append(Convergent(p, q, j))
    return out


# --- zeta(2) and zeta(3) ------------------------------------------------------------

# Literal a_n, b_n of the zeta(2) and zeta(3) fractions.
ZETA2_A = -(n + 1) ** 3 * (21 * n + 34) - 8 * (3 + 2 * n) ** 3 * (21 * n + 13)
ZETA2_B = 8 * (n + 1) ** 3 * (21 * n + 34) * (1 + 2 * n) ** 3 * (21 * n - 8)
ZETA2_HEAD_NUMERATOR = 104
ZETA3_A = (-(n + 1) ** 5 * (205 * n ** 2 + 660 * n + 532)
           - 32 * (2 * n + 3) ** 5 * (205 * n ** 2 + 250 * n + 77))
ZETA3_B = 32 * (n + 1) ** 5 * (205 * n ** 2 + 660 * n + 532) * (1 + 2 * n) ** 5 * (205 * n ** 2 - 160 * n + 32)
ZETA3_HEAD_NUMERATOR = 1232

# The zeta(3) partial denominators need +32(...) for the second product; with
# the literal sign the fraction converges to the wrong number.
ZETA3_A_CORRECTED = (-(n + 1) ** 5 * (205 * n ** 2 + 660 * n + 532)
                     + 32 * (2 * n + 3) ** 5 * (205 * n ** 2 + 250 * n + 77))


def _shifted(p: Poly2, offset: int):
    return lambda j: p.eval(Fraction(j + offset))


def zeta2_cf_spec() -> CFSpec:
    """``104 / (a_-1 - b_0 / (a_0 - b_1 / (a_1 - ...)))``.

    Level j carries ``(-b_(j-2), a_(j-2))`` for ``j >= 2``; the literal
    bracket has ``+b``, which sums to a different number.
    """
    a, b = _shifted(ZETA2_A, -2), _shifted(ZETA2_B, -2)
    return CFSpec(Fraction(0),
                  lambda j: Fraction(ZETA2_HEAD_NUMERATOR) if j == 1 else -b(j),
                  a, "zeta2_cf")


def zeta3_cf_spec() -> CFSpec:
    """``1232 / (a_-1 + b_0 / (a_0 + b_1 / (a_1 + ...)))`` with corrected ``a``."""
    a, b = _shifted(ZETA3_A_CORRECTED, -2), _shifted(ZETA3_B, -2)
    return CFSpec(Fraction(0),
                  lambda j: Fraction(ZETA3_HEAD_NUMERATOR) if j == 1 else b(j),
                  a, "zeta3_cf")


def literal_cf_spec(which: int) -> CFSpec:
    """The bracket read literally (``+b``, uncorrected ``a``); kept for comparison."""
    A, B, head = {2: (ZETA2_A, ZETA2_B, ZETA2_HEAD_NUMERATOR),
                  3: (ZETA3_A, ZETA3_B, ZETA3_HEAD_NUMERATOR)}[which]
    a, b = _shifted(A, -2), _shifted(B, -2)
    return CFSpec(Fraction(0), lambda j: Fraction(head) if j == 1 else b(j), a,
                  f"zeta{which}_cf_literal")
