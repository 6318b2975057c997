"""The exact WZ laboratory.

A WZ pair satisfies F(n+1,k) - F(n,k) = G(n,k+1) - G(n,k).  Starting from the
slow base-1/4 pair, substituting k -> k + n gives a faster term; its companion
G is found by fitting the numerator of a rational certificate over Q.
"""

from fractions import Fraction

from wzzeta import pairs
from wzzeta.wz import (boundary_decay_report, check_wz, derive_certificate,
                       search_certificate, shift_transform, telescoped_sums)

K = (0, Fraction(1, 3), Fraction(1, 2), Fraction(5, 7))

# 1. The first-power certificate fails; the squared one holds.
for corrected in (False, True):
    F, G = pairs.simple2_pair(corrected)
    result = check_wz(F, G, range(7), K)
    print(f"simple pair, corrected={corrected}: ok={result.ok}, witness={result.witness}")

# 2. Transform and re-derive the certificate.
F, _ = pairs.simple2_pair()
fast_F = shift_transform(F)
print(f"\nshifted term: ({fast_F.geometric_base})^n *", " ".join(
    f"({f.alpha}{f' + {f.beta}k' if f.beta else ''})_n^{f.power}" for f in fast_F.pochhammers))
cert = derive_certificate(fast_F, pairs.FAST2_R_DENOMINATOR, (3, 3))
print("recovered numerator (x stands for k):", cert.R.num)

# 3. The zeta(3) companion needs a larger ansatz than its zeta(2) analogue suggests.
cert3 = search_certificate(pairs.fast3_F(), pairs.FAST3_DENOMINATOR, pairs.FAST3_START_DEGREE)
print("\nzeta(3) certificate degrees:", cert3.degrees)
print("numerator at k = 0:", cert3.R.num.specialize_x(0))

# 4. Boundary terms and the finite telescoped identity.
F2, G2 = pairs.fast2_pair()
report = boundary_decay_report(F2, G2, n_max=20, k_max=40)
print("\nboundary sums decay:", not report.flagged,
      [round(v, 1) for v in report.g_log10()[::10]], [round(v, 1) for v in report.f_log10()[::5]])
lhs, series, boundary = telescoped_sums(F2, G2, N=8, K=40, x=Fraction(-4, 5))
print("sum_k F(0,k+x) == sum_n G(n,x) + boundary exactly:", lhs == series + boundary)
print("boundary contribution ~", float(boundary))
