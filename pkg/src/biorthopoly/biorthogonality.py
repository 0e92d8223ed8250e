"""Rational functions biorthogonal to the monic interpolants.

From a monic interpolant family build the auxiliary polynomials

    T_n = P-hat_{n+1} - (z - a_{n+1}) P-hat_n,      deg T_n <= n,

whose degree-n coefficient is nu_n = a_{n+1} - a_n + alpha_n/alpha_{n+1}
- alpha_{n-1}/alpha_n.  When nu_n != 0, the monic T-hat_n = T_n/nu_n and
the rational functions V_n = T-hat_n / omega_{n+2} (simple poles exactly at
a_0..a_{n+1}) pair with the interpolants through the residue sum

    <p, V_m> = sum_{s=0}^{m+1} p(a_s) T-hat_m(a_s) / (A_s omega'_{m+2}(a_s)),

the sum of residues of p(zeta) V_m(zeta) / F(zeta) over the finite poles.
The matrix <P-hat_n, V_m> is diagonal with entries -1/(nu_n alpha_n).

Normalization note: the diagonal is -1/(nu_n alpha_n), not the +1/alpha_n
sometimes quoted for this construction; exact rational arithmetic on nodes
(0, 1, 2) with values (1, 2, 5) settles the constant (see README,
"Normalization notes").
"""

from __future__ import annotations

from typing import List, Tuple

from .divided_differences import Samples
from .errors import IndexOutOfRange, NuVanishes, PoleEvaluation, ZeroSampleValue
from .interpolation import MonicInterpolantFamily
from .numerics import Scalar
from .polynomials import Polynomial, nodal_derivative_at


class RationalInterpolant:
    """V_n = T-hat_n / omega_{n+2}: monic degree-n numerator over the poles
    a_0..a_{n+1}."""

    __slots__ = ("index", "numerator", "pole_nodes")

    def __init__(self, index: int, numerator: Polynomial, pole_nodes: Tuple[Scalar, ...]):
        self.index = index
        self.numerator = numerator
        self.pole_nodes = tuple(pole_nodes)
        if numerator.degree != index:
            raise ValueError(f"numerator must have degree {index}, got {numerator.degree}")
        if numerator.leading_coefficient() != 1:
            raise ValueError("numerator must be monic")
        if len(self.pole_nodes) != index + 2:
            raise ValueError(f"expected {index + 2} poles, got {len(self.pole_nodes)}")

    def __call__(self, z):
        """Evaluate at z (any scalar, or complex); z must avoid the poles."""
        denom = 1 * z ** 0  # one, in z's arithmetic
        for a in self.pole_nodes:
            factor = z - a
            if factor == 0:
                raise PoleEvaluation(f"z = {z} is a pole of V_{self.index}")
            denom = denom * factor
        return self.numerator(z) / denom

    def pole_derivative(self, s: int) -> Scalar:
        """omega'_{n+2}(a_s) over this pole set: prod_{i != s}(a_s - a_i)."""
        a_s = self.pole_nodes[s]
        prod: Scalar = 1
        for i, a in enumerate(self.pole_nodes):
            if i != s:
                prod = prod * (a_s - a)
        return prod

    def __repr__(self):
        return f"RationalInterpolant(index={self.index}, numerator={self.numerator!r})"


class BiorthogonalSystem:
    """The family together with its T-hats, leading coefficients nu_n, the
    rational functions V_n, and the verified diagonal pairing values d_n."""

    __slots__ = ("family", "ts", "nus", "vs", "diagonal")

    def __init__(self, family: MonicInterpolantFamily, ts: Tuple[Polynomial, ...],
                 nus: Tuple[Scalar, ...], vs: Tuple[RationalInterpolant, ...],
                 diagonal: Tuple[Scalar, ...]):
        self.family = family
        self.ts = tuple(ts)
        self.nus = tuple(nus)
        self.vs = tuple(vs)
        self.diagonal = tuple(diagonal)

    @property
    def n_max(self) -> int:
        return len(self.vs) - 1


def t_polynomial(family: MonicInterpolantFamily, n: int) -> Polynomial:
    """T_n = P-hat_{n+1} - (z - a_{n+1}) P-hat_n; degree <= n by cancellation."""
    if n + 1 > family.n_max:
        raise IndexOutOfRange(f"T_{n} needs P-hat_{n + 1}; family stops at {family.n_max}")
    if n + 1 >= len(family.grid):
        raise IndexOutOfRange(f"T_{n} needs node a_{n + 1}; grid has {len(family.grid)}")
    shifted = Polynomial((-family.grid[n + 1], 1))
    return family.phats[n + 1] - shifted * family.phats[n]


def leading_nu(family: MonicInterpolantFamily, n: int) -> Scalar:
    """Closed formula for the degree-n coefficient of T_n.

    nu_n = a_{n+1} - a_n + alpha_n/alpha_{n+1} - alpha_{n-1}/alpha_n, with
    alpha_{-1} = 0 at n = 0.  Cross-checked against the subtraction route
    in the tests.
    """
    if n + 1 > family.n_max:
        raise IndexOutOfRange(f"nu_{n} needs alpha_{n + 1}; family stops at {family.n_max}")
    return (family.grid[n + 1] - family.grid[n]
            + family.alphas[n] / family.alphas[n + 1]
            - family.alpha_ratio(n))


def build_system(family: MonicInterpolantFamily, n_max: int) -> BiorthogonalSystem:
    """Assemble T-hat_n, V_n and the verified diagonal for n = 0..n_max.

    Raises NuVanishes(n) when T_n loses its degree-n term.  The stored
    diagonal d_n is the actually computed residue pairing <P-hat_n, V_n>,
    so expansion coefficients can divide by it without re-deriving the
    closed form; in exact arithmetic it equals -1/(nu_n alpha_n).
    """
    if n_max + 1 > family.n_max:
        raise IndexOutOfRange(f"system to {n_max} needs family to {n_max + 1}")
    samples = family.samples
    ts: List[Polynomial] = []
    nus: List[Scalar] = []
    vs: List[RationalInterpolant] = []
    diagonal: List[Scalar] = []
    for n in range(n_max + 1):
        t_n = t_polynomial(family, n)
        nu_n = t_n.coefficient(n)
        if nu_n == 0:
            raise NuVanishes(n)
        t_hat = t_n.divide(nu_n)
        v_n = RationalInterpolant(n, t_hat, family.grid.nodes[: n + 2])
        ts.append(t_hat)
        nus.append(nu_n)
        vs.append(v_n)
        diagonal.append(pairing(family.phats[n], v_n, samples))
    return BiorthogonalSystem(family, tuple(ts), tuple(nus), tuple(vs), tuple(diagonal))


def pairing(p: Polynomial, v: RationalInterpolant, samples: Samples) -> Scalar:
    """Residue-sum pairing of a polynomial with V_m.

    sum_{s=0}^{m+1} p(a_s) T-hat_m(a_s) / (A_s omega'_{m+2}(a_s)): the sum
    of residues of p(zeta) V_m(zeta) / F(zeta).  Only the m+2 poles of V_m
    contribute, so extending the samples beyond index m+1 never changes the
    value.
    """
    if v.index + 1 > samples.last_index:
        raise IndexOutOfRange(
            f"pairing with V_{v.index} needs samples up to index {v.index + 1}")
    total: Scalar = 0
    for s in range(v.index + 2):
        a_value = samples.values[s]
        if a_value == 0:
            raise ZeroSampleValue(s)
        a_s = samples.grid[s]
        total = total + p(a_s) * v.numerator(a_s) / (a_value * v.pole_derivative(s))
    return total


def orthogonality_moment(family: MonicInterpolantFamily, n: int, j: int) -> Scalar:
    """I_{nj} = sum_{s<=n} a_s^j P-hat_n(a_s) / (A_s omega'_{n+1}(a_s)).

    For j <= n this equals delta_{nj} / alpha_n: the monic interpolants are
    orthogonal to all lower powers under the 1/F residue weight.
    """
    if n > family.n_max:
        raise IndexOutOfRange(f"moment needs P-hat_{n}; family stops at {family.n_max}")
    if j < 0 or j > n:
        raise IndexOutOfRange(f"power {j} outside 0..{n}")
    total: Scalar = 0
    phat = family.phats[n]
    for s in range(n + 1):
        a_value = family.values[s]
        if a_value == 0:
            raise ZeroSampleValue(s)
        a_s = family.grid[s]
        weight = 1 / (a_value * nodal_derivative_at(family.grid, n + 1, s))
        total = total + a_s ** j * phat(a_s) * weight
    return total


def biorthogonality_matrix(system: BiorthogonalSystem, samples: Samples,
                           n_max: int) -> List[List[Scalar]]:
    """Matrix of pairings <P-hat_n, V_m> for n, m <= n_max.

    Diagonal with entries -1/(nu_n alpha_n); every off-diagonal entry is
    exactly zero in exact arithmetic.
    """
    if n_max > system.n_max or n_max > system.family.n_max:
        raise IndexOutOfRange(f"matrix to {n_max} exceeds system size {system.n_max}")
    return [
        [pairing(system.family.phats[n], system.vs[m], samples) for m in range(n_max + 1)]
        for n in range(n_max + 1)
    ]


def expand_in_interpolants(q_poly: Polynomial, system: BiorthogonalSystem,
                           samples: Samples) -> Tuple[Scalar, ...]:
    """Coefficients xi_k with q_poly = sum_k xi_k P-hat_k.

    xi_k = <q_poly, V_k> / d_k for k = 0..deg(q_poly), using the system's
    verified diagonal.  Exact reconstruction is guaranteed because the
    pairing annihilates every P-hat_j with j != k.
    """
    n = q_poly.degree
    if n > system.n_max:
        raise IndexOutOfRange(f"degree {n} exceeds system size {system.n_max}")
    return tuple(
        pairing(q_poly, system.vs[k], samples) / system.diagonal[k] for k in range(n + 1)
    )
