"""Fast WZ-derived series for Hurwitz zeta values, continued fractions and
Dirichlet L-values, with an exact WZ laboratory."""

from .contfrac import (CFSpec, Convergent, euler_transform, eval_cf_backward,
                       eval_cf_forward, zeta2_cf_spec, zeta3_cf_spec)
from .dirichlet import CharacterSpec, kronecker_symbol, l_minus8_2_fast, l_value
from .errors import (ConvergenceError, DomainError, NoCertificateError,
                     NotRepresentableError, PoleError, UnderdeterminedError)
from .hurwitz import hurwitz_reference, hurwitz_series, hurwitz_zeta
from .numeric import PrecisionContext, format_digits, parse_rational
from .series import SeriesResult, SeriesSpec, eval_series, plan_terms
from .wz import (HypergeometricTermSpec, PochhammerFactor, check_wz,
                 derive_certificate, search_certificate, shift_transform)

__version__ = "0.1.0"

__all__ = [
    "CFSpec", "CharacterSpec", "Convergent", "ConvergenceError", "DomainError",
    "HypergeometricTermSpec", "NoCertificateError", "NotRepresentableError",
    "PochhammerFactor", "PoleError", "PrecisionContext", "SeriesResult", "SeriesSpec",
    "UnderdeterminedError", "check_wz", "derive_certificate", "euler_transform",
    "eval_cf_backward", "eval_cf_forward", "eval_series", "format_digits",
    "hurwitz_reference", "hurwitz_series", "hurwitz_zeta", "kronecker_symbol",
    "l_minus8_2_fast", "l_value", "parse_rational", "plan_terms", "search_certificate",
    "shift_transform", "zeta2_cf_spec", "zeta3_cf_spec",
]
