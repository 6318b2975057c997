"""Named invariant suites run by ``wzzeta verify``."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, List, Tuple

from . import pairs
from .contfrac import eval_cf_backward, zeta2_cf_spec, zeta3_cf_spec
from .dirichlet import verify_closed_forms
from .hurwitz import hurwitz_reference, hurwitz_zeta
from .numeric import PrecisionContext, const_pi
from .wz import check_wz

Check = Tuple[str, bool, str]

WZ_K = (0, Fraction(1, 3), Fraction(1, 2), Fraction(5, 7))
CROSS_A = (Fraction(1), Fraction(1, 2), Fraction(1, 3), Fraction(1, 4),
           Fraction(1, 5), Fraction(3, 4), Fraction(7, 8))


def suite_wz() -> List[Check]:
    out = []
    named = [("simple2", pairs.simple2_pair()), ("simple3", pairs.simple3_pair()),
             ("fast2", pairs.fast2_pair()), ("fast3", pairs.fast3_pair())]
    for name, (F, G) in named:
        res = check_wz(F, G, range(7), WZ_K)
        out.append((f"wz {name}", res.ok and res.checked > 0, f"{res.checked} points"))
    F, G = pairs.lminus8_pair()
    res = check_wz(F, G, range(7), (0, 1, 2, 3))
    out.append(("wz lminus8", res.ok and res.checked > 0, f"{res.checked} points"))
    F, G = pairs.simple2_pair(corrected=False)
    res = check_wz(F, G, range(7), WZ_K)
    out.append(("wz simple2 literal reading is rejected", not res.ok, f"witness n={res.witness and res.witness[0]}"))
    for name in pairs.FIXTURES:
        cert = pairs.derive_fixture(name)
        same = cert.R.same_function(pairs.load_fixture(name))
        out.append((f"fixture {name} re-derived", same, f"degrees {cert.degrees}"))
    return out


def suite_closed_forms(digits: int = 50) -> List[Check]:
    ctx = PrecisionContext(digits)
    tol = ctx.mp.mpf(10) ** (-(digits - 5))
    return [(f"identity ({ident})", r < tol, ctx.mp.nstr(r, 3))
            for ident, r in verify_closed_forms(ctx)]


def suite_cross_method(digits: int = 60) -> List[Check]:
    ctx = PrecisionContext(digits)
    mp = ctx.mp
    tol = mp.mpf(10) ** (-(digits - 5))
    out = []
    for s in (2, 3):
        for a in CROSS_A:
            fast = hurwitz_zeta(s, a, ctx, "fast")
            simple = hurwitz_zeta(s, a, ctx, "simple")
            oracle = hurwitz_reference(s, a, ctx)
            worst = max(abs(fast - simple), abs(fast - oracle), abs(simple - oracle))
            out.append((f"zeta({s}, {a})", worst < tol, mp.nstr(worst, 3)))
    return out


def suite_cf(digits: int = 300) -> List[Check]:
    ctx = PrecisionContext(digits)
    mp = ctx.mp
    tol = mp.mpf(10) ** (-digits)
    z2 = eval_cf_backward(zeta2_cf_spec(), 200, ctx)
    z3 = eval_cf_backward(zeta3_cf_spec(), 200, ctx)
    r2 = abs(z2 - const_pi(ctx) ** 2 / 6)
    r3 = abs(z3 - hurwitz_zeta(3, 1, ctx, "fast"))
    return [("zeta(2) continued fraction, depth 200", r2 < tol, mp.nstr(r2, 3)),
            ("zeta(3) continued fraction, depth 200", r3 < tol, mp.nstr(r3, 3))]


SUITES: Dict[str, Callable[[], List[Check]]] = {
    "wz": suite_wz,
    "closed-forms": suite_closed_forms,
    "cross-method": suite_cross_method,
    "cf": suite_cf,
}
