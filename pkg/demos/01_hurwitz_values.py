"""Hurwitz zeta values by the accelerated WZ series.

zeta(2, a) comes from a series whose terms shrink by 1/64, zeta(3, a) from one
shrinking by -1/1024.  The simple series (base 1/4 and -1/4) and an
Euler-Maclaurin oracle give two independent checks.
"""

from fractions import Fraction

from wzzeta import PrecisionContext, format_digits, hurwitz_reference, hurwitz_series
from wzzeta.hurwitz import catalan_reference
from wzzeta.numeric import const_pi

ctx = PrecisionContext(60)

print("zeta(s, a) at 60 digits, three ways")
for s in (2, 3):
    for a in (Fraction(1), Fraction(1, 5), Fraction(7, 8)):
        fast = hurwitz_series(s, a, ctx, "fast")
        simple = hurwitz_series(s, a, ctx, "simple")
        oracle = hurwitz_reference(s, a, ctx)
        print(f"  zeta({s}, {a}) = {format_digits(fast.value, 40)}...")
        print(f"      fast {fast.terms_used:3d} terms, simple {simple.terms_used:3d} terms, "
              f"|fast - oracle| = {ctx.mp.nstr(abs(fast.value - oracle), 3)}")

# A few closed forms that fall out of the same machinery.
pi = const_pi(ctx)
quarter = hurwitz_series(2, Fraction(1, 4), ctx).value
print()
print("zeta(2, 1/4) - pi^2 - 8 G =", ctx.mp.nstr(quarter - pi ** 2 - 8 * catalan_reference(ctx), 3))
half = hurwitz_series(3, Fraction(1, 2), ctx).value
print("zeta(3, 1/2) - 7 zeta(3)  =", ctx.mp.nstr(half - 7 * hurwitz_series(3, 1, ctx).value, 3))
