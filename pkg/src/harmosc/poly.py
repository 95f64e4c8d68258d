"""Real polynomials, their roots, and stability-region classification.

Coefficients are stored in ascending powers throughout the package:
``coeffs[i]`` multiplies ``lambda**i``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .errors import DegenerateLeadingCoefficient

#: default absolute tolerance for a "zero" leading coefficient
ZERO_TOL = 1e-12

#: default absolute tolerance on the real part for region classification
CLASSIFY_TOL = 1e-9


class RegionClass(enum.Enum):
    """Where a root sits relative to the oscillation boundary."""

    ASYMPTOTICALLY_STABLE = "asymptotically_stable"
    UNSTABLE = "unstable"
    HARMONIC_BOUNDARY = "harmonic_boundary"
    NON_OSCILLATING_DECAY = "non_oscillating_decay"


class PolarRoot(NamedTuple):
    """Root in magnitude/angle form; angle canonical in (-pi, pi]."""

    magnitude: float
    angle: float


@dataclass(frozen=True)
class Polynomial:
    """Immutable real polynomial of degree >= 1, ascending coefficients."""

    coeffs: np.ndarray
    zero_tol: float = field(default=ZERO_TOL, compare=False)

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=float)
        if c.ndim != 1 or c.size < 2:
            raise DegenerateLeadingCoefficient(
                "need at least two coefficients (degree >= 1)"
            )
        if not np.all(np.isfinite(c)):
            raise DegenerateLeadingCoefficient("coefficients must be finite")
        scale = max(1.0, float(np.max(np.abs(c))))
        if abs(c[-1]) <= self.zero_tol * scale:
            raise DegenerateLeadingCoefficient(
                f"leading coefficient {c[-1]!r} is below tolerance"
            )
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1

    def __iter__(self):
        return iter(self.coeffs)


def evaluate(poly: Polynomial, lam: complex) -> complex:
    """Evaluate the polynomial at ``lam`` with Horner's scheme."""
    acc = 0.0 + 0.0j
    for a in poly.coeffs[::-1]:
        acc = acc * lam + a
    return acc


def companion_matrix(poly: Polynomial) -> np.ndarray:
    """Monic companion matrix whose eigenvalues are the polynomial roots."""
    n = poly.degree
    c = poly.coeffs / poly.coeffs[-1]
    m = np.zeros((n, n))
    m[0, :] = -c[n - 1 :: -1]
    if n > 1:
        m[np.arange(1, n), np.arange(0, n - 1)] = 1.0
    return m


def roots(poly: Polynomial) -> np.ndarray:
    """All roots as a complex array, via companion-matrix eigenvalues.

    Sorted by (real, imag) so repeated calls are deterministic.
    """
    r = np.linalg.eigvals(companion_matrix(poly))
    order = np.lexsort((r.imag, r.real))
    return r[order]


def to_polar(root: complex) -> PolarRoot:
    """Magnitude/angle form of a root; the origin maps to (0, 0)."""
    z = complex(root)
    m = abs(z)
    if m == 0.0:
        return PolarRoot(0.0, 0.0)
    theta = math.atan2(z.imag, z.real)
    if theta <= -math.pi:  # atan2 returns (-pi, pi]; keep the convention explicit
        theta += 2.0 * math.pi
    return PolarRoot(m, theta)


def from_polar(p: PolarRoot | tuple[float, float]) -> complex:
    """Inverse of :func:`to_polar` for positive magnitude."""
    m, theta = p
    return complex(m * math.cos(theta), m * math.sin(theta))


def classify(root: complex, tol: float = CLASSIFY_TOL) -> RegionClass:
    """Classify a root against the harmonic-oscillation boundary.

    The boundary band is ``|Re| <= tol``; a root inside it with nonzero
    imaginary part sustains a steady oscillation.  A marginal root at the
    origin is reported as on the boundary as well.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    sigma = complex(root).real
    omega = complex(root).imag
    if sigma > tol:
        return RegionClass.UNSTABLE
    if sigma < -tol:
        if abs(omega) <= tol:
            return RegionClass.NON_OSCILLATING_DECAY
        return RegionClass.ASYMPTOTICALLY_STABLE
    return RegionClass.HARMONIC_BOUNDARY
