"""Exact bivariate polynomials and rational functions over Q.

The two variables are called ``n`` and ``x``.  In the WZ code the second
slot plays the role of ``k``; in the Hurwitz series it is the offset
``x = a - 1``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Tuple

from .errors import PoleError

Monomial = Tuple[int, int]


def _coerce_coeff(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, Rational):
        return Fraction(c)
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


class Poly2:
    """Sparse polynomial ``sum c[i, j] n**i x**j`` with Fraction coefficients.

    Instances are immutable; zero coefficients are never stored.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Dict[Monomial, object] | None = None):
        clean = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError("negative exponent")
            c = _coerce_coeff(c)
            if c:
                clean[(int(i), int(j))] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def const(cls, c) -> "Poly2":
        return cls({(0, 0): c})

    @classmethod
    def n(cls) -> "Poly2":
        return cls({(1, 0): 1})

    @classmethod
    def x(cls) -> "Poly2":
        return cls({(0, 1): 1})

    @classmethod
    def affine(cls, c0=0, cn=0, cx=0) -> "Poly2":
        """``c0 + cn*n + cx*x``."""
        return cls({(0, 0): c0, (1, 0): cn, (0, 1): cx})

    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    def coeff(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> Tuple[int, int]:
        """(degree in n, degree in x); ``(-1, -1)`` for the zero polynomial."""
        if not self._terms:
            return (-1, -1)
        return (max(i for i, _ in self._terms), max(j for _, j in self._terms))

    def total_degree(self) -> int:
        return max((i + j for i, j in self._terms), default=-1)

    # arithmetic ---------------------------------------------------------

    @staticmethod
    def _lift(other):
        if isinstance(other, Poly2):
            return other
        if isinstance(other, Rational):
            return Poly2.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return Poly2(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly2({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out: Dict[Monomial, Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return Poly2(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Poly2.const(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, Rational):
            other = Fraction(other)
            return Poly2({m: c / other for m, c in self._terms.items()})
        if isinstance(other, Poly2):
            return RationalFunction2(self, other)
        if isinstance(other, RationalFunction2):
            return RationalFunction2(self) / other
        return NotImplemented

    def __rtruediv__(self, other):
        return RationalFunction2(Poly2._lift(other), self)

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # evaluation / substitution -------------------------------------------

    def __call__(self, n, x=0):
        return self.eval(n, x)

    def eval(self, n, x=0):
        """Evaluate at ``(n, x)``; exact when both arguments are rational."""
        if not self._terms:
            return Fraction(0) if isinstance(n, Rational) and isinstance(x, Rational) else n * 0
        dn, dx = self.degree()
        npow = [1]
        for _ in range(dn):
            npow.append(npow[-1] * n)
        xpow = [1]
        for _ in range(dx):
            xpow.append(xpow[-1] * x)
        total = 0
        for (i, j), c in self._terms.items():
            total += c * npow[i] * xpow[j]
        return total

    def compose(self, n_sub: "Poly2", x_sub: "Poly2") -> "Poly2":
        """Substitute ``n -> n_sub(n, x)`` and ``x -> x_sub(n, x)``."""
        dn, dx = self.degree()
        if dn < 0:
            return Poly2()
        npow = [Poly2.const(1)]
        for _ in range(dn):
            npow.append(npow[-1] * n_sub)
        xpow = [Poly2.const(1)]
        for _ in range(dx):
            xpow.append(xpow[-1] * x_sub)
        out = Poly2()
        for (i, j), c in self._terms.items():
            out = out + npow[i] * xpow[j] * c
        return out

    def shift_n(self, h=1) -> "Poly2":
        return self.compose(Poly2.affine(h, 1, 0), Poly2.x())

    def specialize_x(self, x) -> "Poly2":
        """Fix ``x`` to an exact rational; the result depends on ``n`` only."""
        x = Fraction(x)
        out: Dict[Monomial, Fraction] = {}
        for (i, j), c in self._terms.items():
            out[(i, 0)] = out.get((i, 0), 0) + c * x ** j
        return Poly2(out)

    def integer_coefficients_in_n(self) -> Tuple[list, int]:
        """For an n-only polynomial return (integer coefficient list, scale).

        ``self(n) == sum(coeffs[i] * n**i) / scale``.
        """
        if any(j for _, j in self._terms):
            raise ValueError("polynomial still depends on x")
        dn = self.degree()[0]
        scale = math.lcm(*(c.denominator for c in self._terms.values())) if self._terms else 1
        coeffs = [int(self.coeff(i, 0) * scale) for i in range(dn + 1)]
        return coeffs, scale

    def __repr__(self):
        return f"Poly2({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (i, j) in sorted(self._terms, key=lambda m: (-(m[0] + m[1]), -m[0])):
            c = self._terms[(i, j)]
            mono = "*".join(
                s for s in (
                    ("n" if i == 1 else f"n^{i}") if i else "",
                    ("x" if j == 1 else f"x^{j}") if j else "",
                ) if s)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def product(polys: Iterable[Poly2]) -> Poly2:
    out = Poly2.const(1)
    for p in polys:
        out = out * p
    return out


class RationalFunction2:
    """Quotient of two :class:`Poly2`; not reduced (no polynomial gcd)."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = Poly2._lift(num)
        den = Poly2._lift(den)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("numerator and denominator must be Poly2 or rational")
        if den.is_zero():
            raise ZeroDivisionError("denominator is identically zero")
        self.num = num
        self.den = den

    @staticmethod
    def _lift(other):
        if isinstance(other, RationalFunction2):
            return other
        if isinstance(other, (Poly2, Rational)):
            return RationalFunction2(other, 1)
        return NotImplemented

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return RationalFunction2(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction2(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RationalFunction2(self.num + other.num, self.den)
        return RationalFunction2(self.num * other.den + other.num * self.den,
                                 self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction2(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __pow__(self, e: int):
        if e >= 0:
            return RationalFunction2(self.num ** e, self.den ** e)
        return RationalFunction2(self.den ** -e, self.num ** -e)

    def __call__(self, n, x=0):
        return rf2_eval(self, n, x)

    def compose(self, n_sub: Poly2, x_sub: Poly2) -> "RationalFunction2":
        return RationalFunction2(self.num.compose(n_sub, x_sub),
                                 self.den.compose(n_sub, x_sub))

    def shift_n(self, h=1) -> "RationalFunction2":
        return RationalFunction2(self.num.shift_n(h), self.den.shift_n(h))

    def specialize_x(self, x) -> "RationalFunction2":
        return RationalFunction2(self.num.specialize_x(x), self.den.specialize_x(x))

    def equals_at(self, other: "RationalFunction2", points) -> bool:
        return all(rf2_eval(self, n, x) == rf2_eval(other, n, x) for n, x in points)

    def same_function(self, other: "RationalFunction2") -> bool:
        """Exact identity test by cross multiplication."""
        other = self._lift(other)
        return self.num * other.den == other.num * self.den

    def __repr__(self):
        return f"RationalFunction2(({self.num}) / ({self.den}))"


def rf2_eval(f: RationalFunction2, n, x=0):
    """Evaluate ``f`` at ``(n, x)``; exact for rational arguments.

    Raises
    ------
    PoleError
        If the denominator vanishes at the point.
    """
    d = f.den.eval(n, x)
    if d == 0:
        raise PoleError(f"pole of rational function at n={n}, x={x}")
    return f.num.eval(n, x) / d
