"""Exact-rational laboratory for WZ pairs.

A term is ``(-1)^(k*sign_k) (-1)^(n*sign_n) z^n prod (alpha + beta k)_n^p m(n, k)``
with ``m`` a rational function.  Everything here is evaluated in exact
rational arithmetic; the only approximation anywhere is the decision of
which sample points to use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import product as cartesian
from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import (NoCertificateError, NotRepresentableError, PoleError,
                     UnderdeterminedError)
from .numeric import pochhammer
from .poly import Poly2, RationalFunction2, rf2_eval

# Denominators 3, 5, 7, 11 keep clear of integer and half-integer poles.
FIT_K = tuple(Fraction(p, q) for p, q in [
    (1, 3), (2, 5), (3, 7), (1, 11), (4, 3), (6, 5), (9, 7), (2, 3), (1, 5),
    (5, 11), (8, 7), (3, 5), (13, 11), (5, 3), (4, 7), (7, 5), (2, 11), (10, 7),
])
VERIFY_K = tuple(Fraction(p, q) for p, q in [(2, 7), (7, 11), (7, 3), (9, 5), (3, 11), (11, 7)])
VERIFY_N = range(7, 13)


@dataclass(frozen=True)
class PochhammerFactor:
    """``(alpha + beta*k)_n ** power``; a negative power sits in the denominator."""

    alpha: Fraction
    beta: Fraction
    power: int

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta", Fraction(self.beta))
        if self.power == 0:
            raise ValueError("zero Pochhammer power")

    def base(self, k):
        return self.alpha + self.beta * k if self.beta else self.alpha


@dataclass(frozen=True)
class HypergeometricTermSpec:
    pochhammers: Tuple[PochhammerFactor, ...]
    multiplier: RationalFunction2
    geometric_base: Fraction = Fraction(1)
    sign_n: bool = False
    sign_k: bool = False
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "pochhammers", tuple(self.pochhammers))
        object.__setattr__(self, "geometric_base", Fraction(self.geometric_base))
        if not isinstance(self.multiplier, RationalFunction2):
            object.__setattr__(self, "multiplier", RationalFunction2(self.multiplier))
        if self.geometric_base == 0:
            raise ValueError("geometric base must be nonzero")

    def __call__(self, n: int, k):
        return eval_term(self, n, k)

    def hypergeometric_part(self, n: int, k):
        """Everything except the multiplier and the ``(-1)^k`` sign."""
        value = self.geometric_base ** n
        if self.sign_n and n % 2:
            value = -value
        for f in self.pochhammers:
            p = pochhammer(f.base(k), n)
            if f.power < 0 and p == 0:
                raise PoleError(f"Pochhammer pole ({f.base(k)})_{n} in {self.name or 'term'}")
            value = value * p ** f.power
        return value

    def unsigned(self, n: int, k):
        """Term value with the ``(-1)^k`` factor dropped; defined for rational k."""
        return self.hypergeometric_part(n, k) * rf2_eval(self.multiplier, n, k)

    def with_multiplier(self, multiplier, name: str = "") -> "HypergeometricTermSpec":
        return replace(self, multiplier=RationalFunction2._lift(multiplier),
                       name=name or self.name)

    def shift_k(self, offset) -> "HypergeometricTermSpec":
        """The term ``k -> k + offset``; ``(-1)^k`` keeps acting on integer k."""
        offset = Fraction(offset)
        factors = tuple(PochhammerFactor(f.alpha + f.beta * offset, f.beta, f.power)
                        for f in self.pochhammers)
        mult = self.multiplier.compose(Poly2.n(), Poly2.affine(offset, 0, 1))
        label = f"{self.name}[k+{offset}]" if self.name else ""
        return replace(self, pochhammers=factors, multiplier=mult, name=label)

    def ratio_n(self) -> RationalFunction2:
        """``term(n+1, k) / term(n, k)`` as a rational function of (n, k)."""
        num, den = Poly2.const(self.geometric_base), Poly2.const(1)
        if self.sign_n:
            num = -num
        for f in self.pochhammers:
            lin = Poly2.affine(f.alpha, 1, f.beta)
            if f.power > 0:
                num = num * lin ** f.power
            else:
                den = den * lin ** (-f.power)
        m = self.multiplier
        return RationalFunction2(num * m.num.shift_n(1) * m.den,
                                 den * m.den.shift_n(1) * m.num)


def eval_term(term: HypergeometricTermSpec, n: int, k):
    """Exact value of ``term`` at integer ``n >= 0`` and rational ``k``.

    Raises
    ------
    PoleError
        If a denominator Pochhammer symbol or the multiplier vanishes.
    ValueError
        If the term carries ``(-1)^k`` and ``k`` is not an integer.
    """
    if n < 0 or int(n) != n:
        raise ValueError("n must be a nonnegative integer")
    value = term.unsigned(n, k)
    if term.sign_k:
        if Fraction(k).denominator != 1:
            raise ValueError(f"non-integer k={k} with (-1)^k")
        if int(k) % 2:
            value = -value
    return value


@dataclass
class WZCheck:
    ok: bool
    checked: int = 0
    witness: Optional[tuple] = None   # (n, k, lhs, rhs)
    skipped: List[tuple] = field(default_factory=list)

    def __bool__(self):
        return self.ok


def wz_residual(F: HypergeometricTermSpec, G: HypergeometricTermSpec, n: int, k):
    """``(lhs, rhs)`` of F(n+1,k)-F(n,k) = G(n,k+1)-G(n,k), with (-1)^k divided out."""
    if F.sign_k != G.sign_k:
        raise ValueError("F and G must agree on the (-1)^k factor")
    sigma = -1 if G.sign_k else 1
    lhs = F.unsigned(n + 1, k) - F.unsigned(n, k)
    rhs = sigma * G.unsigned(n, k + 1) - G.unsigned(n, k)
    return lhs, rhs


def check_wz(F: HypergeometricTermSpec, G: HypergeometricTermSpec,
             n_range: Iterable[int], k_samples: Iterable) -> WZCheck:
    """Check the WZ identity exactly on the grid ``n_range x k_samples``.

    For terms with ``(-1)^k`` the common sign is divided out, which is the
    literal identity for integer ``k`` and its natural extension otherwise.
    Points where a pole is hit are skipped and listed.
    """
    result = WZCheck(ok=True)
    for n, k in cartesian(list(n_range), [Fraction(k) for k in k_samples]):
        try:
            lhs, rhs = wz_residual(F, G, n, k)
        except PoleError:
            result.skipped.append((n, k))
            continue
        result.checked += 1
        if lhs != rhs:
            result.ok = False
            result.witness = (n, k, lhs, rhs)
            return result
    return result


# --- the k -> k + n transform -------------------------------------------------

def _split_shifted(f: PochhammerFactor):
    """Rewrite ``(alpha + beta(k+n))_n`` for integer ``beta = m >= 1``.

    Uses ``(c)_{jn} = j^{jn} prod_{i<j} ((c+i)/j)_n`` with ``c = alpha + m k``
    and ``(c + m n)_n = (c)_{(m+1)n} / (c)_{mn}``.
    Returns (factors, geometric factor per unit n before raising to power).
    """
    m = f.beta
    if m.denominator != 1 or m < 1:
        raise NotRepresentableError(
            f"cannot rewrite ({f.alpha} + {m}(k+n))_n with affine Pochhammer bases")
    m = int(m)
    out = []
    for i in range(m + 1):
        out.append(((f.alpha + i) / (m + 1), Fraction(m, m + 1), f.power))
    for i in range(m):
        out.append(((f.alpha + i) / m, Fraction(1), -f.power))
    geo = Fraction((m + 1) ** (m + 1), m ** m) ** f.power
    return out, geo


def shift_transform(F: HypergeometricTermSpec, *, validate: bool = True) -> HypergeometricTermSpec:
    """Return ``F'(n, k) = F(n, k + n)`` in Pochhammer form.

    Raises
    ------
    NotRepresentableError
        If a base depends on k with a coefficient that is not a positive
        integer, or if the rewritten term disagrees with direct substitution.
    """
    powers: dict = {}
    z = F.geometric_base
    for f in F.pochhammers:
        if f.beta == 0:
            parts = [(f.alpha, Fraction(0), f.power)]
        else:
            parts, geo = _split_shifted(f)
            z *= geo
        for alpha, beta, p in parts:
            powers[(alpha, beta)] = powers.get((alpha, beta), 0) + p
    factors = tuple(PochhammerFactor(a, b, p) for (a, b), p in powers.items() if p)
    mult = F.multiplier.compose(Poly2.n(), Poly2.affine(0, 1, 1))
    out = HypergeometricTermSpec(
        pochhammers=factors, multiplier=mult, geometric_base=z,
        sign_n=F.sign_n != F.sign_k, sign_k=F.sign_k,
        name=f"{F.name}(n,k+n)" if F.name else "")
    if validate:
        ks = [0, 1, 2, 3] if F.sign_k else [0, 1, Fraction(1, 3), Fraction(2, 7)]
        for n, k in cartesian(range(5), ks):
            try:
                direct = eval_term(F, n, k + n)
            except PoleError:
                continue
            if eval_term(out, n, k) != direct:
                raise NotRepresentableError(
                    f"rewrite disagrees with substitution at n={n}, k={k}")
    return out


# --- certificate derivation ---------------------------------------------------

@dataclass(frozen=True)
class Certificate:
    """Rational certificate ``R`` with companion ``G = (F without multiplier) * R``."""

    R: RationalFunction2
    F: HypergeometricTermSpec
    G: HypergeometricTermSpec
    degrees: Tuple[int, int]


def companion(F: HypergeometricTermSpec, R: RationalFunction2, name: str = "") -> HypergeometricTermSpec:
    return F.with_multiplier(R, name=name or (f"G[{F.name}]" if F.name else ""))


def _solve_exact(rows: List[List[Fraction]], rhs: List[Fraction]) -> List[Fraction]:
    """Gauss-Jordan elimination over Q; raises on inconsistency or rank deficiency."""
    ncols = len(rows[0])
    # Integer rows keep Fraction normalisation cheap.
    aug = []
    for r, b in zip(rows, rhs):
        scale = math.lcm(*(c.denominator for c in r), b.denominator)
        aug.append([int(c * scale) for c in r] + [int(b * scale)])
    pivots = []
    row = 0
    for col in range(ncols):
        piv = next((i for i in range(row, len(aug)) if aug[i][col]), None)
        if piv is None:
            continue
        aug[row], aug[piv] = aug[piv], aug[row]
        p = aug[row]
        for i in range(len(aug)):
            if i != row and aug[i][col]:
                q = aug[i]
                f, g = q[col], p[col]
                new = [g * a - f * b for a, b in zip(q, p)]
                d = math.gcd(*new)
                aug[i] = [v // d for v in new] if d > 1 else new
        pivots.append(col)
        row += 1
        if row == len(aug):
            break
    for r in aug[row:]:
        if r[-1]:
            raise NoCertificateError("inconsistent linear system")
    if len(pivots) < ncols:
        raise UnderdeterminedError(f"rank {len(pivots)} < {ncols} unknowns")
    sol = [Fraction(0)] * ncols
    for i, col in enumerate(pivots):
        sol[col] = Fraction(aug[i][-1], aug[i][col])
    return sol


def derive_certificate(F: HypergeometricTermSpec, denominator_shape: Poly2,
                       max_numerator_degree: Tuple[int, int],
                       fit_k: Sequence = FIT_K) -> Certificate:
    """Fit the polynomial numerator of ``R = N / denominator_shape``.

    ``G = U R z^n`` (same Pochhammer part, base and signs as ``F``) must
    satisfy the WZ identity with ``F``.  The unknown coefficients of ``N``
    (degrees at most ``(dn, dk)``) enter linearly, so sampling the identity
    on a grid gives an exact linear system.  The answer is re-checked on a
    disjoint grid before it is returned.

    Raises
    ------
    NoCertificateError
        The system is inconsistent, or the fresh-grid check fails.
    UnderdeterminedError
        The sample grid does not pin down the coefficients.
    """
    dn, dk = max_numerator_degree
    monomials = [(i, j) for i in range(dn + 1) for j in range(dk + 1)]
    sigma = -1 if F.sign_k else 1
    ks = [Fraction(k) for k in fit_k][: dk + 3]
    if len(ks) < dk + 1:
        raise UnderdeterminedError("not enough k sample values for this degree")
    rows, rhs = [], []
    for n, k in cartesian(range(dn + 3), ks):
        try:
            u0 = F.hypergeometric_part(n, k) / denominator_shape(n, k)
            u1 = sigma * F.hypergeometric_part(n, k + 1) / denominator_shape(n, k + 1)
            target = F.unsigned(n + 1, k) - F.unsigned(n, k)
        except (PoleError, ZeroDivisionError):
            continue
        k1 = k + 1
        rows.append([u1 * n ** i * k1 ** j - u0 * n ** i * k ** j for i, j in monomials])
        rhs.append(target)
    if len(rows) < len(monomials) + 5:
        raise UnderdeterminedError("too few usable sample points")
    coeffs = _solve_exact(rows, rhs)
    numerator = Poly2({m: c for m, c in zip(monomials, coeffs)})
    R = RationalFunction2(numerator, denominator_shape)
    G = companion(F, R)
    check = check_wz(F, G, VERIFY_N, VERIFY_K)
    if not check.ok or check.checked == 0:
        raise NoCertificateError(f"fresh-grid verification failed at {check.witness}")
    return Certificate(R=R, F=F, G=G, degrees=(dn, dk))


def search_certificate(F: HypergeometricTermSpec, denominator_shape: Poly2,
                       start: Tuple[int, int], max_extra: int = 4) -> Certificate:
    """Call :func:`derive_certificate`, raising the k-degree, then the n-degree,
    each time the ansatz is inconsistent."""
    dn0, dk0 = start
    last = None
    for extra_n in range(max_extra + 1):
        for extra_k in range(max_extra + 1):
            try:
                return derive_certificate(F, denominator_shape, (dn0 + extra_n, dk0 + extra_k))
            except NoCertificateError as exc:
                last = exc
    raise NoCertificateError(f"no certificate up to degree {(dn0 + max_extra, dk0 + max_extra)}: {last}")


# --- boundary behaviour -------------------------------------------------------

def log10_abs(q) -> float:
    q = Fraction(q)
    if q == 0:
        return -math.inf
    return math.log10(abs(q.numerator)) - math.log10(q.denominator)


@dataclass
class BoundaryReport:
    g_sums: List[Fraction]      # sum_{n<=k} G(n, k), k = 0..k_max
    f_sums: List[Fraction]      # sum_{k<=n} F(n, k), n = 0..n_max
    g_decays: bool
    f_decays: bool

    @property
    def flagged(self) -> bool:
        return not (self.g_decays and self.f_decays)

    def g_log10(self) -> List[float]:
        return [log10_abs(v) for v in self.g_sums]

    def f_log10(self) -> List[float]:
        return [log10_abs(v) for v in self.f_sums]


def _decays(values: List[Fraction], tol: float) -> bool:
    logs = [log10_abs(v) for v in values]
    if logs[-1] < math.log10(tol):
        return True
    # Slow (power-law) decay still counts: strictly falling over the second
    # half and below the starting magnitude.
    tail = logs[len(logs) // 2:]
    falling = all(b < a for a, b in zip(tail, tail[1:]))
    return falling and logs[-1] < logs[0]


def boundary_decay_report(F: HypergeometricTermSpec, G: HypergeometricTermSpec,
                          n_max: int, k_max: int, tol: float = 1e-3) -> BoundaryReport:
    """Exact boundary sums ``sum_{n<=k} G(n,k)`` and ``sum_{k<=n} F(n,k)``.

    A direction is flagged unless it ends below ``tol`` or its magnitudes fall
    strictly over the second half of the range to below the starting one.
    The latter admits the ``1/k`` decay of the base-1/4 pairs.
    """
    g_sums = [sum((eval_term(G, n, k) for n in range(k + 1)), Fraction(0))
              for k in range(k_max + 1)]
    f_sums = [sum((eval_term(F, n, k) for k in range(n + 1)), Fraction(0))
              for n in range(n_max + 1)]
    return BoundaryReport(g_sums, f_sums, _decays(g_sums, tol), _decays(f_sums, tol))


def telescoped_sums(F: HypergeometricTermSpec, G: HypergeometricTermSpec,
                    N: int, K: int, x=0):
    """Exact finite form of ``sum_k F(0, k+x) = sum_n G(n, x)``.

    Summing the WZ identity over ``0 <= n < N``, ``0 <= k < K`` gives
    ``sum_{k<K} F(0,k) = sum_{n<N} G(n,0) + sum_{k<K} F(N,k) - sum_{n<N} G(n,K)``
    for the pair shifted by ``x``.  Returns ``(lhs, series_part, boundary_part)``.
    """
    Fx, Gx = F.shift_k(x), G.shift_k(x)
    lhs = sum((eval_term(Fx, 0, k) for k in range(K)), Fraction(0))
    series = sum((eval_term(Gx, n, 0) for n in range(N)), Fraction(0))
    boundary = (sum((eval_term(Fx, N, k) for k in range(K)), Fraction(0))
                - sum((eval_term(Gx, n, K) for n in range(N)), Fraction(0)))
    return lhs, series, boundary


# --- fixture file format ------------------------------------------------------

def _poly_lines(p: Poly2) -> List[str]:
    return [f"{i} {j} {c}" for (i, j), c in sorted(p.terms.items())]


def dump_certificate(R: RationalFunction2, source: str) -> str:
    """Serialise ``R`` as text: header, then ``i j coeff`` lines per part."""
    lines = ["# wz certificate R(n,k); lines are: n-exponent k-exponent coefficient",
             f"source: {source}", "numerator:"]
    lines += _poly_lines(R.num)
    lines.append("denominator:")
    lines += _poly_lines(R.den)
    return "\n".join(lines) + "\n"


def load_certificate(text: str) -> Tuple[str, RationalFunction2]:
    source, part = None, None
    parts = {"numerator": {}, "denominator": {}}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("source:"):
            source = line.split(":", 1)[1].strip()
        elif line.rstrip(":") in parts and line.endswith(":"):
            part = line.rstrip(":")
        else:
            if part is None:
                raise ValueError(f"coefficient line before a part header: {raw!r}")
            i, j, c = line.split()
            parts[part][(int(i), int(j))] = Fraction(c)
    if source is None:
        raise ValueError("certificate file has no source header")
    return source, RationalFunction2(Poly2(parts["numerator"]), Poly2(parts["denominator"]))
