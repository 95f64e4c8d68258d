"""Characteristic-polynomial design for a prescribed steady oscillation.

The design assembles a square linear system in the n+1 coefficients:
two rows force a conjugate root pair at ``+-j*omega_k``, one row per
requested decay magnitude forces a real root at ``-sigma_p``, and pinned
coefficients fix the remaining freedom (at minimum the overall scale).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from . import poly as P
from .errors import (
    OverconstrainedSpec,
    SingularSystem,
    UnderconstrainedSpec,
    ValidationError,
    ZeroPivot,
)

#: relative rank tolerance for the assembled (row-scaled) design matrix
RANK_TOL = 1e-10


def _cos_half_pi(i: int) -> int:
    # cos(pi*i/2) exactly: 1, 0, -1, 0 cycling
    return (1, 0, -1, 0)[i % 4]


def _sin_half_pi(i: int) -> int:
    # sin(pi*i/2) exactly: 0, 1, 0, -1 cycling
    return (0, 1, 0, -1)[i % 4]


@dataclass(frozen=True)
class DesignSpec:
    """Order, target frequency, real-root decay magnitudes and pins."""

    order: int
    omega_k: float
    decays: tuple[float, ...] = ()
    pinned: Mapping[int, float] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "decays", tuple(float(s) for s in self.decays))
        object.__setattr__(
            self, "pinned", {int(k): float(v) for k, v in dict(self.pinned).items()}
        )
        n = self.order
        if n < 2:
            raise ValidationError(f"order must be >= 2, got {n}")
        if not (self.omega_k > 0):
            raise ValidationError(f"omega_k must be > 0, got {self.omega_k}")
        if not self.pinned:
            raise ValidationError("at least one pinned coefficient is required")
        for idx in self.pinned:
            if not 0 <= idx <= n:
                raise ValidationError(f"pinned index {idx} outside 0..{n}")
        for s in self.decays:
            if not (s > 0):
                raise ValidationError(f"decay magnitudes must be > 0, got {s}")
        if len(set(self.decays)) != len(self.decays):
            raise SingularSystem("repeated decay magnitudes give dependent rows")
        n_constraints = len(self.decays) + len(self.pinned) + 2
        if n_constraints < n + 1:
            raise UnderconstrainedSpec(
                f"{n_constraints} constraints for {n + 1} coefficients"
            )
        if n_constraints > n + 1:
            raise OverconstrainedSpec(
                f"{n_constraints} constraints for {n + 1} coefficients"
            )


@dataclass(frozen=True)
class DesignReport:
    """Verification record for a designed polynomial."""

    polynomial: P.Polynomial
    roots: np.ndarray
    oscillation_residual: tuple[float, float]
    decay_residuals: tuple[float, ...]
    classifications: tuple[P.RegionClass, ...]
    verdict: bool


def oscillation_rows(n: int, omega_k: float) -> tuple[np.ndarray, np.ndarray]:
    """The two coefficient rows that force roots at ``+-j*omega_k``.

    Structural zeros come from ``i mod 4``, never from floating trig.
    """
    if n < 2:
        raise ValidationError(f"order must be >= 2, got {n}")
    if not (omega_k > 0):
        raise ValidationError(f"omega_k must be > 0, got {omega_k}")
    powers = omega_k ** np.arange(n + 1)
    cos_row = powers * np.array([_cos_half_pi(i) for i in range(n + 1)], dtype=float)
    sin_row = powers * np.array([_sin_half_pi(i) for i in range(n + 1)], dtype=float)
    return cos_row, sin_row


def decay_row(n: int, sigma_p: float) -> np.ndarray:
    """Coefficient row enforcing a real root at ``-sigma_p``."""
    if not (sigma_p >= 0):
        raise ValidationError(f"sigma_p must be >= 0, got {sigma_p}")
    return (-sigma_p) ** np.arange(n + 1)


def design(spec: DesignSpec) -> P.Polynomial:
    """Solve for the coefficient vector meeting every constraint in ``spec``.

    Pinned coefficients are substituted out before solving, so they are
    reproduced exactly in the result.
    """
    n = spec.order
    rows = [*oscillation_rows(n, spec.omega_k)]
    rows.extend(decay_row(n, s) for s in spec.decays)
    mat = np.vstack(rows)

    pin_idx = np.array(sorted(spec.pinned), dtype=int)
    pin_val = np.array([spec.pinned[i] for i in pin_idx])
    free_idx = np.array([i for i in range(n + 1) if i not in spec.pinned], dtype=int)

    a = mat[:, free_idx]
    b = -mat[:, pin_idx] @ pin_val

    # scale each row by its largest entry to tame the omega**i / sigma**i growth
    scale = np.maximum(np.max(np.abs(a), axis=1), np.abs(b))
    scale[scale == 0] = 1.0
    a = a / scale[:, None]
    b = b / scale

    sv = np.linalg.svd(a, compute_uv=False)
    if sv.size == 0 or sv[-1] <= RANK_TOL * sv[0]:
        raise SingularSystem("design matrix is rank deficient")
    x = np.linalg.solve(a, b)

    coeffs = np.empty(n + 1)
    coeffs[free_idx] = x
    coeffs[pin_idx] = pin_val
    return P.Polynomial(coeffs)


def solve_two_free(
    known: Mapping[int, float], v: int, g: int, omega_k: float
) -> tuple[float, float]:
    """Solve the oscillation conditions for one even and one odd coefficient.

    ``known`` maps every other index 0..n to its value.  Because the cosine
    row touches only even powers and the sine row only odd powers, each
    unknown appears in exactly one condition and the solve is two scalar
    divisions.
    """
    if v % 2 != 0 or g % 2 != 1:
        raise ValidationError("v must be even and g odd")
    n = len(known) + 1
    expected = set(range(n + 1)) - {v, g}
    if set(known) != expected:
        raise ValidationError("known must cover every index except v and g")
    if not (omega_k > 0):
        raise ValidationError(f"omega_k must be > 0, got {omega_k}")

    wv = omega_k**v * _cos_half_pi(v)
    wg = omega_k**g * _sin_half_pi(g)
    if wv == 0 or wg == 0:
        raise ZeroPivot("diagonal weight vanishes")

    cos_sum = sum(a * omega_k**i * _cos_half_pi(i) for i, a in known.items())
    sin_sum = sum(a * omega_k**i * _sin_half_pi(i) for i, a in known.items())
    return -cos_sum / wv, -sin_sum / wg


def verify_design(
    poly: P.Polynomial, spec: DesignSpec, tol: float = 1e-8
) -> DesignReport:
    """Check residuals and root placement of a candidate polynomial.

    Verdict is true iff both oscillation residuals and every decay residual
    stay below ``tol`` times the coefficient scale, exactly one conjugate
    pair sits on the oscillation boundary at the target frequency, and all
    remaining roots are strictly stable.
    """
    if tol <= 0:
        raise ValidationError("tol must be positive")
    scale = float(np.max(np.abs(poly.coeffs)))
    val = P.evaluate(poly, 1j * spec.omega_k)
    osc_res = (float(val.real), float(val.imag))
    decay_res = tuple(float(abs(P.evaluate(poly, -s))) for s in spec.decays)

    rts = P.roots(poly)
    # absolute classification tolerance, scaled per root because eigenvalue
    # error grows with root magnitude
    classes = tuple(P.classify(r, tol * max(1.0, abs(r))) for r in rts)

    freq_tol = max(1e-6, 100.0 * tol) * max(1.0, spec.omega_k)
    boundary = [
        r
        for r, c in zip(rts, classes)
        if c is P.RegionClass.HARMONIC_BOUNDARY
    ]
    pair_ok = (
        len(boundary) == 2
        and abs(abs(boundary[0].imag) - spec.omega_k) <= freq_tol
        and abs(abs(boundary[1].imag) - spec.omega_k) <= freq_tol
        and abs(boundary[0].imag + boundary[1].imag) <= freq_tol
    )
    others_ok = all(
        c
        in (
            P.RegionClass.ASYMPTOTICALLY_STABLE,
            P.RegionClass.NON_OSCILLATING_DECAY,
        )
        for c in classes
        if c is not P.RegionClass.HARMONIC_BOUNDARY
    )
    residuals_ok = (
        abs(osc_res[0]) <= tol * scale
        and abs(osc_res[1]) <= tol * scale
        and all(r <= tol * scale for r in decay_res)
    )
    return DesignReport(
        polynomial=poly,
        roots=rts,
        oscillation_residual=osc_res,
        decay_residuals=decay_res,
        classifications=classes,
        verdict=bool(residuals_ok and pair_ok and others_ok),
    )
