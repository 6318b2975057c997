"""Dirichlet L-values from Hurwitz values.

For a fundamental discriminant d, L(s, chi_d) = |d|^-s sum_j chi_d(j) zeta(s, j/|d|),
so every fast Hurwitz value feeds an L-value.  The script checks the six
closed-form identities and the separate fast series for L(2, chi_-8).
"""

from fractions import Fraction

from wzzeta import CharacterSpec, PrecisionContext, format_digits, l_minus8_2_fast, l_value
from wzzeta.dirichlet import verify_closed_forms
from wzzeta.hurwitz import hurwitz_zeta
from wzzeta.numeric import const_pi, const_sqrt

ctx = PrecisionContext(50)

for d in (-4, -3, -8, -7, 5, 8, 12):
    chi = CharacterSpec(d)
    print(f"chi_{d:<3} values {chi.values()}")
    print(f"    L(2) = {format_digits(l_value(chi, 2, ctx), 30)}   L(3) = {format_digits(l_value(chi, 3, ctx), 30)}")

print()
for ident, residual in verify_closed_forms(ctx):
    print(f"identity ({ident}): residual {ctx.mp.nstr(residual, 3)}")

print()
wide = PrecisionContext(500)
gap = abs(l_minus8_2_fast(wide) - l_value(-8, 2, wide))
print("L(2, chi_-8), fast series vs decomposition at 500 digits:", wide.mp.nstr(gap, 3))
eighths = hurwitz_zeta(2, Fraction(1, 8), wide) + hurwitz_zeta(2, Fraction(7, 8), wide)
print("zeta(2,1/8) + zeta(2,7/8) - (4 + 2 sqrt 2) pi^2:",
      wide.mp.nstr(eighths - (4 + 2 * const_sqrt(2, wide)) * const_pi(wide) ** 2, 3))
