"""Lagrange-form interpolants, monic interpolant families, and their
three-term recurrence.

The monic interpolants P-hat_n = P_n / alpha_n (alpha_n the n-th divided
difference) satisfy

    P-hat_{n+1} = (z - a_n + alpha_n/alpha_{n+1}) P-hat_n
                  - (alpha_{n-1}/alpha_n) (z - a_n) P-hat_{n-1}

with P-hat_{-1} = 0, P-hat_0 = 1 and the convention alpha_{-1} = 0.  The
recurrence runs in both directions here: `monic_family` derives the family
from data, `family_from_recurrence` rebuilds data from coefficients, and
the two are exact inverses (which the tests pin down).
"""

from __future__ import annotations

from typing import Sequence, Tuple

from .divided_differences import (
    Samples,
    divided_differences_recursive,
    newton_interpolant,
)
from .errors import DegenerateInput, DegenerateInterpolant, IndexOutOfRange
from .numerics import Scalar
from .polynomials import Grid, Polynomial, nodal_derivative_at, nodal_polynomial


def lagrange_interpolant(samples: Samples, n: int) -> Polynomial:
    """Interpolant assembled Lagrange-style, as an exact coefficient sequence.

    omega_{n+1}(z) * sum_k A_k / ((z - a_k) omega'_{n+1}(a_k)), with each
    quotient omega_{n+1}/(z - a_k) produced by synthetic division (remainder
    zero by construction).  Equals the Newton route coefficient-for-
    coefficient in exact arithmetic.
    """
    if n < 0 or n > samples.last_index:
        raise IndexOutOfRange(f"degree {n} outside 0..{samples.last_index}")
    omega = nodal_polynomial(samples.grid, n + 1)
    acc = Polynomial.zero()
    for k in range(n + 1):
        cofactor, _ = omega.deflate(samples.grid[k])
        weight = samples.values[k] / nodal_derivative_at(samples.grid, n + 1, k)
        acc = acc + cofactor.scale(weight)
    return acc


class MonicInterpolantFamily:
    """Aligned sequences alpha_0..alpha_n and monic P-hat_0..P-hat_n over a grid.

    Invariants: every alpha is nonzero, P-hat_n is monic of degree exactly n,
    and alpha_n * P-hat_n(a_k) = A_k for k <= n.
    """

    __slots__ = ("grid", "values", "alphas", "phats")

    def __init__(self, grid: Grid, values: Tuple[Scalar, ...],
                 alphas: Tuple[Scalar, ...], phats: Tuple[Polynomial, ...]):
        self.grid = grid
        self.values = tuple(values)
        self.alphas = tuple(alphas)
        self.phats = tuple(phats)
        if len(self.alphas) != len(self.phats):
            raise ValueError("alphas and phats must align")
        if len(self.alphas) > len(self.values) or len(self.values) != len(grid):
            raise ValueError("family data lengths inconsistent")

    @property
    def n_max(self) -> int:
        return len(self.phats) - 1

    @property
    def samples(self) -> Samples:
        return Samples(self.grid, self.values)

    def alpha_ratio(self, n: int) -> Scalar:
        """alpha_{n-1}/alpha_n with the alpha_{-1} = 0 convention."""
        if n == 0:
            return 0
        return self.alphas[n - 1] / self.alphas[n]


def monic_family(samples: Samples, n_max: int) -> MonicInterpolantFamily:
    """Divided differences plus monic interpolants up to degree n_max.

    Fails with DegenerateInterpolant(n) on the first vanishing alpha_n;
    alpha_0 = A_0 is required nonzero as well, since the residue pairing
    downstream divides by the sample values.
    """
    if n_max < 0 or n_max > samples.last_index:
        raise IndexOutOfRange(f"n_max = {n_max} outside 0..{samples.last_index}")
    table = divided_differences_recursive(samples)
    alphas = table.diffs[: n_max + 1]
    for n, alpha in enumerate(alphas):
        if alpha == 0:
            raise DegenerateInterpolant(n)
    phats = tuple(
        newton_interpolant(samples, n).divide(alphas[n]) for n in range(n_max + 1)
    )
    return MonicInterpolantFamily(samples.grid, samples.values, alphas, phats)


def recurrence_step(phat_n: Polynomial, phat_nm1: Polynomial, a_n: Scalar,
                    ratio_n: Scalar, ratio_nm1: Scalar) -> Polynomial:
    """One forward step of the three-term recurrence.

    ratio_n = alpha_n/alpha_{n+1} and ratio_nm1 = alpha_{n-1}/alpha_n are
    supplied by the caller (0 for the n = 0 step).
    """
    shifted = Polynomial((-a_n, 1))
    first = (shifted + Polynomial.constant(ratio_n)) * phat_n
    second = (shifted * phat_nm1).scale(ratio_nm1)
    return first - second


def family_from_recurrence(grid: Grid, alphas: Sequence[Scalar],
                           n_max: int | None = None) -> MonicInterpolantFamily:
    """Rebuild the family, and the data it interpolates, from (grid, alphas).

    Iterates the recurrence from P-hat_{-1} = 0, P-hat_0 = 1, then recovers
    the implied values A_n = sum_{s<=n} alpha_s omega_s(a_n).  The returned
    family's grid and values are truncated to indices 0..n_max, which is all
    the given alphas determine.
    """
    alphas = tuple(alphas)
    if n_max is None:
        n_max = len(alphas) - 1
    if n_max < 0 or n_max >= len(alphas):
        raise IndexOutOfRange(f"n_max = {n_max} outside 0..{len(alphas) - 1}")
    if n_max + 1 > len(grid):
        raise IndexOutOfRange(f"need nodes a_0..a_{n_max}, grid has {len(grid)}")
    for n, alpha in enumerate(alphas[: n_max + 1]):
        if alpha == 0:
            raise DegenerateInput(n)

    phats = [Polynomial.constant(1)]
    previous = Polynomial.zero()
    for n in range(n_max):
        ratio_n = alphas[n] / alphas[n + 1]
        ratio_nm1 = 0 if n == 0 else alphas[n - 1] / alphas[n]
        nxt = recurrence_step(phats[-1], previous, grid[n], ratio_n, ratio_nm1)
        previous = phats[-1]
        phats.append(nxt)

    sub_grid = grid.prefix(n_max + 1)
    values = []
    for n in range(n_max + 1):
        a_n = grid[n]
        value: Scalar = 0
        omega_at_a_n: Scalar = 1  # omega_s(a_n), updated incrementally
        for s in range(n + 1):
            value = value + alphas[s] * omega_at_a_n
            omega_at_a_n = omega_at_a_n * (a_n - grid[s])
        values.append(value)
    return MonicInterpolantFamily(sub_grid, tuple(values), alphas[: n_max + 1], tuple(phats))
