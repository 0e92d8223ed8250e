"""Floating-point contour quadrature on circles.

Connects the residue-sum definitions to their contour-integral forms for
exponential data F(zeta) = e**(h zeta) on the integer grid.  All integrals
are reported with the (2 pi i)**-1 normalization: for a circle of center c
and radius r sampled at M equispaced points zeta_j,

    (2 pi i)**-1 contour-integral f  ~=  (1/M) sum_j f(zeta_j) (zeta_j - c),

which for integrands analytic in an annulus around the circle converges
geometrically in M (trapezoid rule on a periodic analytic function).
Summation is numpy's pairwise reduction, so results are reproducible
bit-for-bit for a fixed sample count.  This module never runs in exact
mode; complex arithmetic stays private to it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .biorthogonality import build_system
from .divided_differences import Samples
from .errors import InvalidParameter, NonFiniteSample
from .interpolation import monic_family


@dataclass(frozen=True)
class Circle:
    """Quadrature contour: |zeta - center| = radius, sampled at a power of
    two points."""

    center: complex
    radius: float
    sample_count: int = 2048

    def __post_init__(self):
        if not self.radius > 0:
            raise InvalidParameter("circle radius must be positive")
        m = self.sample_count
        if m < 16 or m & (m - 1):
            raise InvalidParameter("sample_count must be a power of two >= 16")

    def points(self) -> np.ndarray:
        angles = 2.0 * np.pi * np.arange(self.sample_count) / self.sample_count
        return self.center + self.radius * np.exp(1j * angles)


def default_circle(max_node: int, sample_count: int = 2048) -> Circle:
    """Circle centered on the midpoint of the real node span 0..max_node,
    radius span + 5: all poles comfortably inside."""
    span = float(max_node)
    return Circle(center=complex(span / 2.0, 0.0), radius=span + 5.0,
                  sample_count=sample_count)


def contour_integral(integrand: Callable[[complex], complex], circle: Circle) -> complex:
    """(2 pi i)**-1 times the circle integral of the integrand."""
    points = circle.points()
    values = np.empty(circle.sample_count, dtype=complex)
    for j, zeta in enumerate(points):
        value = complex(integrand(zeta))
        if not (math.isfinite(value.real) and math.isfinite(value.imag)):
            raise NonFiniteSample(f"integrand non-finite at zeta = {zeta}")
        values[j] = value
    return complex(np.sum(values * (points - circle.center)) / circle.sample_count)


def hermite_divided_difference(h: float, k: int, circle: Optional[Circle] = None) -> complex:
    """Divided difference [0, 1, ..., k] of e**(h z) as a contour integral.

    (2 pi i)**-1 contour-integral e**(h zeta) / omega_{k+1}(zeta): the
    real part approximates (e**h - 1)**k / k!, the imaginary part vanishes.
    """
    if k < 0:
        raise InvalidParameter("k must be nonnegative")
    if circle is None:
        circle = default_circle(k)
    nodes = [float(i) for i in range(k + 1)]

    def integrand(zeta: complex) -> complex:
        omega = 1.0 + 0.0j
        for a in nodes:
            omega *= zeta - a
        return np.exp(h * zeta) / omega

    return contour_integral(integrand, circle)


def contour_biortho_check(h: float, n: int, m: int, circle: Optional[Circle] = None) -> complex:
    """(2 pi i)**-1 contour-integral of P-hat_n(zeta) V_m(zeta) e**(-h zeta).

    The float-mode family for F = e**(h z) on nodes 0..max(n, m+1) is built
    through the same code paths as the exact one; the result approximates
    the exact residue pairing: 0 off the diagonal, d_n = -1/(nu_n alpha_n)
    on it.
    """
    if n < 0 or m < 0:
        raise InvalidParameter("indices must be nonnegative")
    top = max(n, m + 1)
    if circle is None:
        circle = default_circle(top)
    count = top + 2  # one spare node so the family reaches index top
    nodes = [float(i) for i in range(count)]
    values = [math.exp(h * i) for i in range(count)]
    samples = Samples.from_pairs(nodes, values)
    family = monic_family(samples, top)
    system = build_system(family, m)
    phat = family.phats[n]
    v_m = system.vs[m]

    def integrand(zeta: complex) -> complex:
        return phat(zeta) * v_m(zeta) * np.exp(-h * zeta)

    return contour_integral(integrand, circle)
