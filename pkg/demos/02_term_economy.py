"""How many terms does each series need?

The accelerated zeta(2) series gains log10(64) ~ 1.81 digits per term and the
zeta(3) series log10(1024) ~ 3.01, against 0.60 for the simple ones.  This
prints the same kind of table as ``wzzeta bench``.
"""

import time
from fractions import Fraction

from wzzeta import PrecisionContext, hurwitz_series, plan_terms

A = Fraction(1, 5)

print(f"{'digits':>7} {'s':>2} {'method':>7} {'planned':>8} {'used':>6} {'ms':>8}")
for digits in (100, 1000, 5000, 10000):
    ctx = PrecisionContext(digits)
    for s in (2, 3):
        for method in ("simple", "fast"):
            if method == "simple" and digits > 1000:
                continue
            base = {("simple", 2): 4, ("simple", 3): 4, ("fast", 2): 64, ("fast", 3): 1024}[method, s]
            start = time.perf_counter()
            res = hurwitz_series(s, A, ctx, method)
            ms = (time.perf_counter() - start) * 1000
            print(f"{digits:>7} {s:>2} {method:>7} {plan_terms(digits, base):>8} "
                  f"{res.terms_used:>6} {ms:>8.1f}")
