"""Closed forms for exponential data on the integer grid.

For F(z) = q**z sampled at a_k = k (q any rational except 0 and 1, playing
the role of e**h) everything in the construction has a hypergeometric
closed form:

    P_n(z)   = sum_{k<=n} (-z)_k / k! * (1 - q)**k
    alpha_n  = (q - 1)**n / n!
    nu_n     = q / (q - 1)
    T-hat_n  = (n+1)!/(q-1)**n * 2F1(-n, -z; -1-n; 1-q)
    V_n(z)   = 1/((1-q)**n z(z-1)) * 2F1(-n, -z; 2-z; q)

with (b)_k the rising factorial.  Each closed form is checked against the
generic machinery coefficient-for-coefficient; the two V_n routes meeting
at off-grid points is the numerical witness for the underlying 2F1
transformation.  q < 0 is allowed: only q enters the identities, never a
logarithm of it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .divided_differences import Samples
from .errors import InvalidParameter, LowerParameterPole, PoleEvaluation
from .numerics import Scalar
from .polynomials import Polynomial


@dataclass(frozen=True)
class ExpGridProblem:
    """Exponential samples A_k = q**k on the integer grid 0..n_max+2."""

    q: Scalar
    n_max: int
    samples: Samples = field(init=False)

    def __post_init__(self):
        q = self.q
        if isinstance(q, int):
            q = Fraction(q)
            object.__setattr__(self, "q", q)
        if q == 0 or q == 1:
            raise InvalidParameter("q must differ from 0 and 1")
        if self.n_max < 0:
            raise InvalidParameter("n_max must be nonnegative")
        count = self.n_max + 3
        one = q / q
        nodes = tuple(one * k for k in range(count))
        values = tuple(q ** k for k in range(count))
        object.__setattr__(self, "samples", Samples.from_pairs(nodes, values))


def pochhammer(b: Scalar, k: int) -> Scalar:
    """Rising factorial (b)_k = b (b+1) ... (b+k-1); (b)_0 = 1."""
    prod: Scalar = 1
    for j in range(k):
        prod = prod * (b + j)
    return prod


def _pochhammer_of_minus_z(k: int) -> Polynomial:
    """(-z)_k as a polynomial in z: the product of (j - z) for j < k."""
    prod = Polynomial.constant(1)
    for j in range(k):
        prod = prod * Polynomial((j, -1))
    return prod


def terminating_2f1(n: int, b: Scalar, c: Scalar, x: Scalar) -> Scalar:
    """2F1(-n, b; c; x) summed exactly over its n+1 terms.

    Terms with a vanishing numerator are dropped; a vanishing
    lower-parameter factor under a nonzero numerator raises
    LowerParameterPole.
    """
    total: Scalar = 0
    for k in range(n + 1):
        numerator = pochhammer(-n, k) * pochhammer(b, k) * x ** k
        denominator = pochhammer(c, k) * factorial(k)
        if denominator == 0:
            if numerator == 0:
                continue
            raise LowerParameterPole(f"(c)_{k} = 0 with c = {c}")
        total = total + numerator / denominator
    return total


def exp_interpolant_closed(problem: ExpGridProblem, n: int) -> Polynomial:
    """P_n in closed form; equals the Newton interpolant on the derived samples."""
    q = problem.q
    acc = Polynomial.zero()
    coeff: Scalar = 1  # (1 - q)**k / k!, updated per term
    for k in range(n + 1):
        if k:
            coeff = coeff * (1 - q) / k
        acc = acc + _pochhammer_of_minus_z(k).scale(coeff)
    return acc


def exp_alpha_closed(problem: ExpGridProblem, n: int) -> Scalar:
    """alpha_n = (q - 1)**n / n!."""
    return (problem.q - 1) ** n / Fraction(factorial(n))


def exp_t_closed(problem: ExpGridProblem, n: int) -> Polynomial:
    """Monic T-hat_n via the terminating 2F1 with polynomial middle argument.

    (n+1)!/(q-1)**n * sum_{k<=n} (-n)_k (-z)_k / ((-1-n)_k k!) * (1-q)**k,
    with (-z)_k expanded symbolically so the result is a Polynomial.
    """
    q = problem.q
    acc = Polynomial.zero()
    for k in range(n + 1):
        coeff = (pochhammer(-n, k) * (1 - q) ** k
                 / (pochhammer(-1 - n, k) * factorial(k)))
        acc = acc + _pochhammer_of_minus_z(k).scale(coeff)
    return acc.scale(Fraction(factorial(n + 1)) / (q - 1) ** n)


def exp_v_alt_eval(problem: ExpGridProblem, n: int, z: Scalar) -> Scalar:
    """V_n(z) through the transformed 2F1 route.

    1/((1-q)**n z(z-1)) * 2F1(-n, -z; 2-z; q).  Admissible z excludes the
    integers 0..n+1 (the poles, and the zeros of (2-z)_k).
    """
    for m in range(n + 2):
        if z == m:
            raise PoleEvaluation(f"z = {m} is excluded for V_{n}")
    q = problem.q
    series = terminating_2f1(n, -z, 2 - z, q)
    return series / ((1 - q) ** n * z * (z - 1))
