"""Contour integrals converging onto exact residue sums.

The divided difference of an entire function has a contour-integral form,
(2 pi i)^{-1} times the integral of F(zeta)/omega_{k+1}(zeta) around the
nodes, and the residue pairing likewise integrates P-hat_n V_m e^{-h zeta}.
The trapezoid rule on a circle converges geometrically for integrands
analytic in an annulus, so 2048 points reach machine precision here.  All
reference values come from the exact-rational side of the library.
"""

import math
from fractions import Fraction as F

from biorthopoly import (
    Circle,
    ExpGridProblem,
    build_system,
    contour_biortho_check,
    hermite_divided_difference,
    monic_family,
)

h = math.log(2.0)
print("F(z) = e^{hz} with h = ln 2, so exact divided differences are 1/k!")
print()

print("trapezoid estimates vs 1/k!:")
for k in range(6):
    estimate = hermite_divided_difference(h, k)
    exact = 1.0 / math.factorial(k)
    print(f"  k = {k}: {estimate.real:+.12f}  error {abs(estimate - exact):.2e}")
print()

print("convergence as the circle gets more samples (k = 3):")
for count in (16, 32, 64, 128, 256):
    circle = Circle(center=1.5 + 0j, radius=8.0, sample_count=count)
    estimate = hermite_divided_difference(h, 3, circle)
    print(f"  {count:4d} points: error {abs(estimate - 1 / 6):.2e}")
print()

prob = ExpGridProblem(F(2), 3)
family = monic_family(prob.samples, 4)
diagonal = build_system(family, 3).diagonal
print("pairing integrals vs the exact diagonal", tuple(map(str, diagonal)), ":")
for n in range(4):
    for m in range(4):
        estimate = contour_biortho_check(h, n, m)
        target = float(diagonal[n]) if n == m else 0.0
        flag = "diag" if n == m else "    "
        if abs(estimate - target) > 1e-8:
            raise SystemExit(f"quadrature drifted at ({n}, {m})")
        if n == m or (n, m) in ((0, 1), (3, 0)):
            print(f"  ({n},{m}) {flag}: {estimate.real:+.12f}  "
                  f"error {abs(estimate - target):.2e}")
print()

a = Circle(center=0.5 + 0j, radius=6.0, sample_count=2048)
b = Circle(center=1.0 + 0.2j, radius=9.0, sample_count=4096)
va = contour_biortho_check(h, 1, 1, a)
vb = contour_biortho_check(h, 1, 1, b)
print(f"two different circles, same integral: |difference| = {abs(va - vb):.2e}")
