"""Continued fractions for zeta(2) and zeta(3).

Euler's rewriting turns a series with rational term ratio P(n)/Q(n) into a
continued fraction whose depth-N convergent is exactly the N-term partial sum.
Applied to the accelerated series at a = 1 it gives the two fractions below.
"""

from fractions import Fraction

from wzzeta import PrecisionContext, eval_cf_backward, eval_cf_forward, euler_transform
from wzzeta.contfrac import split_ratio, zeta2_cf_spec, zeta3_cf_spec
from wzzeta.hurwitz import hurwitz_series_spec
from wzzeta.numeric import const_pi
from wzzeta.series import partial_sums_exact

# Exactness first: convergents and partial sums are the same rationals.
spec = hurwitz_series_spec(2, "fast")
P, Q = split_ratio(spec.ratio, 0)
cf = euler_transform(spec.first_term(Fraction(0)), P, Q)
sums = partial_sums_exact(spec, Fraction(0), 6)
for conv in eval_cf_forward(cf, 6):
    print(f"depth {conv.depth}: {str(conv.value):>45}  equals partial sum: {conv.value == sums[conv.depth - 1]}")

ctx = PrecisionContext(1000)
z2 = eval_cf_backward(zeta2_cf_spec(), 600, ctx)
z3 = eval_cf_backward(zeta3_cf_spec(), 350, ctx)
print()
print("zeta(2) fraction, depth 600: error", ctx.mp.nstr(abs(z2 - const_pi(ctx) ** 2 / 6), 3))
print("zeta(3) fraction, depth 350: error", ctx.mp.nstr(abs(z3 - ctx.mp.zeta(3)), 3))

# Error per level for the zeta(2) fraction: roughly a factor 64 each step.
small = PrecisionContext(120)
target = const_pi(small) ** 2 / 6
errors = [abs(c.value - target) for c in eval_cf_forward(zeta2_cf_spec(), 30, small)]
print("successive error ratios:", [small.mp.nstr(errors[j - 1] / errors[j], 4) for j in range(25, 30)])
