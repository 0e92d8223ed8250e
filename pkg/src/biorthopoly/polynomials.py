"""Dense univariate polynomials and interpolation grids.

Coefficients live in whichever scalar field the caller chose (Fraction or
float); everything here is mode-agnostic.  The zero polynomial is the empty
coefficient tuple and reports degree -1.
"""

from __future__ import annotations

from typing import Iterable, Sequence, Tuple

from .errors import IndexOutOfRange, InsufficientNodes
from .numerics import Scalar


def _strip(coeffs: Sequence[Scalar]) -> Tuple[Scalar, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class Polynomial:
    """Immutable dense polynomial; coeffs[i] multiplies z**i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        object.__setattr__(self, "coeffs", _strip(tuple(coeffs)))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls(())

    @classmethod
    def constant(cls, c: Scalar) -> "Polynomial":
        return cls((c,))

    @classmethod
    def linear(cls, constant: Scalar, slope: Scalar) -> "Polynomial":
        """constant + slope * z"""
        return cls((constant, slope))

    @property
    def degree(self) -> int:
        """Highest power with nonzero coefficient; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> Scalar:
        """Coefficient of z**i, 0 beyond the stored length."""
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def leading_coefficient(self) -> Scalar:
        return self.coeffs[-1] if self.coeffs else 0

    def __call__(self, x):
        """Evaluate by Horner's scheme; x may be any scalar (or complex)."""
        acc = 0 * x  # zero in x's arithmetic so float/complex inputs stay closed
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if not self.coeffs or not other.coeffs:
                return Polynomial.zero()
            out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return Polynomial(out)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c: Scalar) -> "Polynomial":
        return Polynomial(tuple(c * a for a in self.coeffs))

    def divide(self, c: Scalar) -> "Polynomial":
        # Divide rather than scale by 1/c: x/x is exactly 1 in floating
        # point, x*(1/x) need not be, and the monic invariants downstream
        # depend on the leading coefficient coming out exact.
        return Polynomial(tuple(a / c for a in self.coeffs))

    def derivative(self) -> "Polynomial":
        return Polynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def deflate(self, root: Scalar) -> Tuple["Polynomial", Scalar]:
        """Synthetic division by (z - root): returns (quotient, remainder).

        The remainder equals self(root); it is exactly zero whenever root
        really is a root in exact arithmetic.
        """
        if not self.coeffs:
            return Polynomial.zero(), 0
        quotient = [0] * (len(self.coeffs) - 1)
        acc = self.coeffs[-1]
        for i in range(len(self.coeffs) - 2, -1, -1):
            quotient[i] = acc
            acc = self.coeffs[i] + root * acc
        return Polynomial(quotient), acc

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"


class Grid:
    """Ordered interpolation nodes a_0..a_N, pairwise distinct."""

    __slots__ = ("nodes",)

    def __init__(self, nodes: Iterable[Scalar]):
        nodes = tuple(nodes)
        for i in range(len(nodes)):
            for j in range(i + 1, len(nodes)):
                if nodes[i] == nodes[j]:
                    raise ValueError(f"grid nodes must be distinct: a_{i} == a_{j} == {nodes[i]}")
        object.__setattr__(self, "nodes", nodes)

    def __setattr__(self, name, value):
        raise AttributeError("Grid is immutable")

    def __len__(self) -> int:
        return len(self.nodes)

    def __getitem__(self, k: int) -> Scalar:
        return self.nodes[k]

    def __eq__(self, other) -> bool:
        return isinstance(other, Grid) and self.nodes == other.nodes

    def __hash__(self):
        return hash(self.nodes)

    def prefix(self, count: int) -> "Grid":
        return Grid(self.nodes[:count])

    def __repr__(self):
        return f"Grid({list(self.nodes)!r})"


def nodal_polynomial(grid: Grid, k: int) -> Polynomial:
    """omega_k(z) = (z - a_0)...(z - a_{k-1}); omega_0 = 1.  Monic of degree k."""
    if k < 0 or k > len(grid):
        raise InsufficientNodes(f"omega_{k} needs {k} nodes, grid has {len(grid)}")
    poly = Polynomial.constant(1)
    for i in range(k):
        poly = poly * Polynomial((-grid[i], 1))
    return poly


def nodal_derivative_at(grid: Grid, k_plus_1: int, s: int) -> Scalar:
    """omega'_{k+1}(a_s) = prod_{i<=k, i!=s} (a_s - a_i); nonzero by distinctness."""
    if k_plus_1 < 1 or k_plus_1 > len(grid):
        raise IndexOutOfRange(f"omega'_{k_plus_1} needs {k_plus_1} nodes, grid has {len(grid)}")
    if s < 0 or s >= k_plus_1:
        raise IndexOutOfRange(f"node index {s} outside 0..{k_plus_1 - 1}")
    a_s = grid[s]
    prod: Scalar = 1
    for i in range(k_plus_1):
        if i != s:
            prod = prod * (a_s - grid[i])
    return prod
