"""The WZ pairs and derived series used by the Hurwitz and Dirichlet code.

Variables are ``n`` and ``k`` (stored in the ``x`` slot of :class:`Poly2`).
Certificates without a closed form here are derived by
:func:`wzzeta.wz.search_certificate` and frozen as text fixtures under
``wzzeta/data``; :func:`regenerate_fixtures` rebuilds them.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .poly import Poly2, RationalFunction2
from .wz import (Certificate, HypergeometricTermSpec, PochhammerFactor,
                 companion, dump_certificate, load_certificate,
                 search_certificate)

n = Poly2.n()
k = Poly2.x()
HALF = Fraction(1, 2)


def _term(factors, multiplier, z, name, sign_n=False, sign_k=False):
    return HypergeometricTermSpec(
        pochhammers=tuple(PochhammerFactor(a, b, p) for a, b, p in factors),
        multiplier=RationalFunction2._lift(multiplier), geometric_base=Fraction(z),
        sign_n=sign_n, sign_k=sign_k, name=name)


# -- zeta(2, a), base 1/4 ------------------------------------------------------

SIMPLE2_U = [(1, 0, 3), (HALF, 0, -1), (1, 1, -2)]
SIMPLE2_R_NUMERATOR = 3 * n + 2 * k + 3
SIMPLE2_R = SIMPLE2_R_NUMERATOR / (2 * (2 * n + 1) * (n + k + 1) ** 2)
SIMPLE2_R_LITERAL = SIMPLE2_R_NUMERATOR / (2 * (2 * n + 1) * (n + k + 1))


def simple2_pair(corrected: bool = True):
    F = _term(SIMPLE2_U, 1 / (n + k + 1) ** 2, Fraction(1, 4), "F_simple2")
    R = SIMPLE2_R if corrected else SIMPLE2_R_LITERAL
    return F, companion(F, R, "G_simple2")


# -- zeta(3, a), base -1/4 -----------------------------------------------------

SIMPLE3_U = [(1, 0, 5), (HALF, 0, -1), (1, 1, -4)]
SIMPLE3_R_NUMERATOR = 5 * n ** 2 + 6 * n * k + 2 * k ** 2 + 10 * n + 6 * k + 5
SIMPLE3_R_DENOMINATOR = 4 * (2 * n + 1) * (n + k + 1) ** 4
SIMPLE3_R = SIMPLE3_R_NUMERATOR / SIMPLE3_R_DENOMINATOR


def simple3_F():
    return _term(SIMPLE3_U, (n + 2 * k + 2) / (2 * (n + k + 1) ** 4), Fraction(-1, 4), "F_simple3")


def simple3_pair():
    F = simple3_F()
    return F, companion(F, SIMPLE3_R, "G_simple3")


# -- zeta(2, a), accelerated, base 1/64 -----------------------------------------

FAST2_U = [(1, 0, 3), (1, 1, 2), (HALF, 0, -1), (HALF, HALF, -2), (1, HALF, -2)]
FAST2_R_NUMERATOR = (21 * n ** 3 + 55 * n ** 2 + 47 * n + 13 + 2 * k ** 3 + 13 * k ** 2 * n
                     + 28 * k * n ** 2 + 11 * k ** 2 + 48 * k * n + 20 * k)
FAST2_R_DENOMINATOR = 2 * (2 * n + k + 1) ** 2 * (2 * n + 1) * (2 * n + k + 2) ** 2
FAST2_R = FAST2_R_NUMERATOR / FAST2_R_DENOMINATOR


def fast2_pair():
    F = _term(FAST2_U, 1 / (2 * n + k + 1) ** 2, Fraction(1, 64), "F_fast2")
    return F, companion(F, FAST2_R, "G_fast2")


# Term ratio written out in closed form (second slot is x = a - 1).
_x = k
_T_TOP = (21 * n ** 3 + 28 * n ** 2 * _x + 13 * n * _x ** 2 + 2 * _x ** 3 + 118 * n ** 2
          + 104 * n * _x + 24 * _x ** 2 + 220 * n + 96 * _x + 136)
_T_BOTTOM = (21 * n ** 3 + 28 * n ** 2 * _x + 13 * n * _x ** 2 + 2 * _x ** 3 + 55 * n ** 2
             + 48 * n * _x + 11 * _x ** 2 + 47 * n + 20 * _x + 13)
_T_SHAPE = (3 + _x + 2 * n) ** 2 * (4 + _x + 2 * n) ** 2 * (3 + 2 * n)
FAST2_RATIO = RationalFunction2(_T_TOP * (_x + n + 1) ** 2 * (n + 1) ** 3,
                                _T_BOTTOM * 2 * _T_SHAPE)
# Literal reading with the leading factor 2 in the numerator; four times too large.
FAST2_RATIO_LITERAL = RationalFunction2(_T_TOP * 2 * (_x + n + 1) ** 2 * (n + 1) ** 3,
                                           _T_BOTTOM * _T_SHAPE)
FAST2_RATIO_AT_ZERO = RationalFunction2((n + 1) ** 3 * (21 * n + 34),
                                        8 * (3 + 2 * n) ** 3 * (21 * n + 13))


# -- zeta(3, a), accelerated, base -1/1024 --------------------------------------

FAST3_U = [(1, 0, 5), (1, 1, 4), (HALF, 0, -1), (HALF, HALF, -4), (1, HALF, -4)]
FAST3_DENOMINATOR = 4 * (2 * n + 1) * (2 * n + k + 1) ** 4 * (2 * n + k + 2) ** 4
FAST3_START_DEGREE = (8, 4)


def fast3_F():
    return _term(FAST3_U, (3 * n + 2 * k + 2) / (2 * (2 * n + k + 1) ** 4),
                 Fraction(-1, 1024), "F_fast3")


def fast3_pair():
    F = fast3_F()
    return F, companion(F, load_fixture("fast3"), "G_fast3")


# Amdeberhan-Zeilberger series for zeta(3); k = 0 slice of the pair above.
AZ_ZETA3_TERM = _term([(1, 0, 5), (HALF, 0, -5)],
                      (205 * n ** 2 + 250 * n + 77) / (64 * (2 * n + 1) ** 5),
                      Fraction(-1, 1024), "AZ_zeta3")


# -- L_{-8}(2) -------------------------------------------------------------------

def lminus8_F_pre():
    return _term([(1, 0, 3), (HALF, 1, -3)], (n + 2 * k + 1) / (2 * n + 2 * k + 1) ** 3,
                 1, "F_lminus8_pre", sign_n=True, sign_k=True)


def lminus8_F():
    return _term([(1, 0, 3), (HALF, 1, 3), (Fraction(1, 4), HALF, -3), (Fraction(3, 4), HALF, -3)],
                 (3 * n + 2 * k + 1) / (4 * n + 2 * k + 1) ** 3, Fraction(1, 64),
                 "F_lminus8", sign_k=True)


LMINUS8_DENOMINATOR = (4 * n + 2 * k + 1) ** 3 * (4 * n + 2 * k + 3) ** 3
LMINUS8_START_DEGREE = (4, 4)


def lminus8_pair():
    F = lminus8_F()
    return F, companion(F, load_fixture("lminus8"), "G_lminus8")


LMINUS8_SERIES_NUMERATOR = 5376 * n ** 4 + 16768 * n ** 3 + 19296 * n ** 2 + 9660 * n + 1761
LMINUS8_SERIES_TERM = _term(
    [(1, 0, 3), (Fraction(3, 4), 0, 3), (Fraction(3, 8), 0, -3), (Fraction(7, 8), 0, -3)],
    LMINUS8_SERIES_NUMERATOR / ((8 * n + 3) ** 3 * (8 * n + 7) ** 3),
    Fraction(1, 64), "L_minus8_series")


# -- fixtures ----------------------------------------------------------------------

FIXTURES = {
    "fast3": (fast3_F, FAST3_DENOMINATOR, FAST3_START_DEGREE),
    "lminus8": (lminus8_F, LMINUS8_DENOMINATOR, LMINUS8_START_DEGREE),
}


def fixture_text(name: str) -> str:
    return resources.files("wzzeta").joinpath("data").joinpath(f"{name}.cert").read_text()


@lru_cache(maxsize=None)
def load_fixture(name: str) -> RationalFunction2:
    source, R = load_certificate(fixture_text(name))
    if source != FIXTURES[name][0]().name:
        raise ValueError(f"fixture {name} was derived from {source}")
    return R


def derive_fixture(name: str) -> Certificate:
    make_F, shape, start = FIXTURES[name]
    return search_certificate(make_F(), shape, start)


def regenerate_fixtures(directory: Path | None = None) -> None:
    """Re-derive every certificate and rewrite its fixture file."""
    directory = Path(directory) if directory else Path(__file__).parent / "data"
    directory.mkdir(parents=True, exist_ok=True)
    for name in FIXTURES:
        cert = derive_fixture(name)
        (directory / f"{name}.cert").write_text(dump_certificate(cert.R, cert.F.name))
    load_fixture.cache_clear()


if __name__ == "__main__":
    regenerate_fixtures()
