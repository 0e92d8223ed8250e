"""The three-term recurrence characterizes the monic interpolants.

Forward direction: divide each Newton interpolant by its leading divided
difference alpha_n and watch the P-hats obey

    P-hat_{n+1} = (z - a_n + alpha_n/alpha_{n+1}) P-hat_n
                  - (alpha_{n-1}/alpha_n)(z - a_n) P-hat_{n-1}.

Backward direction: hand only (grid, alphas) to family_from_recurrence and
it rebuilds the same polynomials and the data values they interpolate,
A_n = sum_{s<=n} alpha_s omega_s(a_n).  Nothing else about the data needs
to be remembered.
"""

from fractions import Fraction as F

from biorthopoly import Grid, Samples, family_from_recurrence, monic_family

samples = Samples.from_pairs(
    [F(-2), F(0), F(1), F(3), F(4)], [F(3), F(-1), F(2), F(5), F(-7)])
family = monic_family(samples, 4)

print("forward: data ->", len(family.phats), "monic interpolants")
print("  alphas:", family.alphas)
for n, phat in enumerate(family.phats):
    print(f"  P-hat_{n}: {phat.coeffs}")
print()

rebuilt = family_from_recurrence(Grid(samples.grid.nodes), family.alphas)
print("backward: (grid, alphas) -> polynomials and implied values")
print("  implied values:", rebuilt.values)
print("  original values:", samples.values)
assert rebuilt.values == samples.values
assert rebuilt.phats == family.phats
print("  round trip exact")
print()

# the nodal-difference identity that links consecutive P-hats to omega
from biorthopoly import nodal_polynomial  # noqa: E402

for n in range(4):
    ratio = family.alphas[n] / family.alphas[n + 1]
    lhs = family.phats[n + 1] - family.phats[n].scale(ratio)
    assert lhs == nodal_polynomial(family.grid, n + 1)
print("P-hat_{n+1} - (alpha_n/alpha_{n+1}) P-hat_n = omega_{n+1} for n = 0..3")
