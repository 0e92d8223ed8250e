"""Newtonian divided differences, by two independent routes.

The recursive triangle is the numerically calmer route and feeds the monic
interpolant family; the residue-style sum over omega' is the route the
residue pairings reuse.  Both are exposed and must agree exactly on exact
input, which the tests enforce.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

from .errors import IndexOutOfRange
from .numerics import Scalar
from .polynomials import Grid, Polynomial, nodal_derivative_at


@dataclass(frozen=True)
class Samples:
    """Interpolation data: distinct nodes a_k and values A_k of equal length."""

    grid: Grid
    values: Tuple[Scalar, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.grid) != len(self.values):
            raise ValueError(
                f"{len(self.grid)} nodes but {len(self.values)} values")

    @classmethod
    def from_pairs(cls, nodes: Sequence[Scalar], values: Sequence[Scalar]) -> "Samples":
        return cls(Grid(nodes), tuple(values))

    def __len__(self) -> int:
        return len(self.values)

    @property
    def last_index(self) -> int:
        """N, the largest usable index."""
        return len(self.values) - 1

    def extended(self, node: Scalar, value: Scalar) -> "Samples":
        """New Samples with one more (node, value) pair appended."""
        return Samples(Grid(self.grid.nodes + (node,)), self.values + (value,))


@dataclass(frozen=True)
class DividedDifferenceTable:
    """Top edge of the divided-difference triangle: entry k is [a_0,...,a_k]."""

    samples: Samples
    diffs: Tuple[Scalar, ...]

    def __len__(self) -> int:
        return len(self.diffs)

    def __getitem__(self, k: int) -> Scalar:
        return self.diffs[k]


def divided_differences_recursive(samples: Samples) -> DividedDifferenceTable:
    """Full table [a_0..a_k], k = 0..N, by the recursive triangle.

    Column j of the triangle holds [a_i..a_{i+j}] = ([a_{i+1}..a_{i+j}] -
    [a_i..a_{i+j-1}]) / (a_{i+j} - a_i); only the i = 0 edge is retained.
    """
    if len(samples) == 0:
        raise IndexOutOfRange("divided differences need at least one sample")
    nodes = samples.grid
    column = list(samples.values)
    top = [column[0]]
    for j in range(1, len(column)):
        column = [
            (column[i + 1] - column[i]) / (nodes[i + j] - nodes[i])
            for i in range(len(column) - 1)
        ]
        top.append(column[0])
    return DividedDifferenceTable(samples, tuple(top))


def divided_difference_sum(samples: Samples, k: int) -> Scalar:
    """[a_0..a_k] as the residue-style sum over s of A_s / omega'_{k+1}(a_s)."""
    if k < 0 or k > samples.last_index:
        raise IndexOutOfRange(f"k = {k} outside 0..{samples.last_index}")
    total: Scalar = 0
    for s in range(k + 1):
        total = total + samples.values[s] / nodal_derivative_at(samples.grid, k + 1, s)
    return total


def newton_interpolant(samples: Samples, n: int) -> Polynomial:
    """Degree-<=n interpolant sum_k [a_0..a_k] omega_k(z), in the monomial basis.

    Satisfies P_n(a_k) = A_k for k <= n.
    """
    if n < 0 or n > samples.last_index:
        raise IndexOutOfRange(f"degree {n} outside 0..{samples.last_index}")
    table = divided_differences_recursive(samples)
    acc = Polynomial.zero()
    omega = Polynomial.constant(1)
    for k in range(n + 1):
        acc = acc + omega.scale(table[k])
        omega = omega * Polynomial((-samples.grid[k], 1))
    return acc
