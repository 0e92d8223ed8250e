"""Interpolating q^z on the integer grid: everything in closed form.

With nodes a_k = k and values A_k = q^k, the divided differences collapse
to (q-1)^n/n!, the recurrence coefficient nu_n is the constant q/(q-1),
and the monic auxiliary polynomial T-hat_n is a terminating Gauss 2F1
series.  The script builds both sides, generic machinery and closed form,
and insists they agree exactly.  At q = 2 the interpolant identity
P_n(m) = 2^m is the binomial-sum fact sum_k C(m, k) = 2^m in disguise.
"""

from fractions import Fraction as F

from biorthopoly import (
    ExpGridProblem,
    build_system,
    exp_alpha_closed,
    exp_interpolant_closed,
    exp_t_closed,
    exp_v_alt_eval,
    monic_family,
    newton_interpolant,
)

q = F(2)
prob = ExpGridProblem(q, 4)
family = monic_family(prob.samples, 5)
system = build_system(family, 4)

print(f"q = {q}: nodes {prob.samples.grid.nodes}, values {prob.samples.values}")
print()

print("divided differences (q-1)^n/n! vs the recursive table:")
for n in range(6):
    closed = exp_alpha_closed(prob, n)
    assert closed == family.alphas[n]
    print(f"  alpha_{n} = {closed}")
print()

print("nu_n = q/(q-1) =", system.nus[0], "for every n:", set(system.nus))
print()

print("T-hat_n from the terminating 2F1 vs the generic subtraction:")
for n in range(5):
    closed = exp_t_closed(prob, n)
    assert closed == system.ts[n]
    print(f"  T-hat_{n}: {closed.coeffs}")
print()

z = F(7, 3)
print(f"V_n at z = {z}, hypergeometric form vs T-hat_n/omega_{{n+2}}:")
for n in range(4):
    alt = exp_v_alt_eval(prob, n, z)
    direct = system.vs[n](z)
    assert alt == direct
    print(f"  V_{n}({z}) = {alt}")
print()

print("binomial identity at q = 2: P_n(m) = 2^m for m <= n")
for n in range(5):
    p = exp_interpolant_closed(prob, n)
    assert p == newton_interpolant(prob.samples, n)
    values = [p(F(m)) for m in range(n + 1)]
    print(f"  n = {n}: {values}")
