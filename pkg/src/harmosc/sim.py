"""Controller-canonical realization, input generation, and time simulation."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import poly as P
from ._kernels import rk4_companion
from .errors import (
    EventBeyondHorizon,
    NonFiniteState,
    PoleProximity,
    ResolutionViolation,
    ValidationError,
)

#: minimum number of integration steps per period of the fastest mode
STEPS_PER_FASTEST_PERIOD = 40


@dataclass(frozen=True)
class Signal:
    """Uniformly sampled real time series."""

    t0: float
    dt: float
    samples: np.ndarray

    def __post_init__(self):
        if not (self.dt > 0):
            raise ValidationError(f"dt must be > 0, got {self.dt}")
        s = np.asarray(self.samples, dtype=float)
        if not np.all(np.isfinite(s)):
            raise ValidationError("samples must be finite")
        s.setflags(write=False)
        object.__setattr__(self, "samples", s)

    @property
    def times(self) -> np.ndarray:
        return self.t0 + self.dt * np.arange(self.samples.size)

    @property
    def duration(self) -> float:
        return self.dt * (self.samples.size - 1)


@dataclass(frozen=True)
class StateSpaceModel:
    """Companion-form SISO realization with D = 0."""

    A: np.ndarray
    B: np.ndarray
    C: np.ndarray
    D: float = 0.0

    @property
    def order(self) -> int:
        return self.A.shape[0]


@dataclass(frozen=True)
class ImpulseTrain:
    """Dirac impulses as (time, area) events."""

    events: tuple[tuple[float, float], ...]


@dataclass(frozen=True)
class StepProfile:
    """Piecewise-constant input: level applies from its start time onward."""

    steps: tuple[tuple[float, float], ...]


@dataclass(frozen=True)
class ZeroInput:
    pass


InputSpec = ImpulseTrain | StepProfile | ZeroInput


def canonical_state_space(poly: P.Polynomial) -> StateSpaceModel:
    """Controller-canonical realization of the transfer function 1/poly.

    B carries the 1/leading-coefficient scaling so the realization is
    exact for non-monic polynomials as well.
    """
    n = poly.degree
    an = poly.coeffs[-1]
    a = np.zeros((n, n))
    a[0, :] = -poly.coeffs[n - 1 :: -1] / an
    if n > 1:
        a[np.arange(1, n), np.arange(0, n - 1)] = 1.0
    b = np.zeros(n)
    b[0] = 1.0 / an
    c = np.zeros(n)
    c[n - 1] = 1.0
    for arr in (a, b, c):
        arr.setflags(write=False)
    return StateSpaceModel(A=a, B=b, C=c, D=0.0)


def _check_events(events, t_end):
    prev = -math.inf
    for t, _ in events:
        if t < 0:
            raise ValidationError(f"event time {t} is negative")
        if t <= prev:
            raise ValidationError("event times must be strictly increasing")
        if t > t_end:
            raise EventBeyondHorizon(f"event at t={t} beyond horizon {t_end}")
        prev = t


def make_input(
    spec: InputSpec, t_end: float, dt: float
) -> tuple[Signal, tuple[tuple[float, float], ...]]:
    """Sample an input spec onto the grid; impulses stay discrete events."""
    if not (t_end > 0 and dt > 0):
        raise ValidationError("t_end and dt must be > 0")
    n_samples = int(round(t_end / dt)) + 1
    t = dt * np.arange(n_samples)
    if isinstance(spec, ZeroInput):
        return Signal(0.0, dt, np.zeros(n_samples)), ()
    if isinstance(spec, ImpulseTrain):
        _check_events(spec.events, t_end)
        return Signal(0.0, dt, np.zeros(n_samples)), tuple(
            (float(a), float(b)) for a, b in spec.events
        )
    if isinstance(spec, StepProfile):
        if not spec.steps:
            raise ValidationError("step profile needs at least one level")
        _check_events(spec.steps, t_end)
        starts = np.array([s for s, _ in spec.steps])
        levels = np.array([v for _, v in spec.steps])
        # level i applies on (start_i, start_{i+1}]; the first level also
        # covers t <= start_0
        idx = np.clip(np.searchsorted(starts, t, side="left") - 1, 0, None)
        return Signal(0.0, dt, levels[idx]), ()
    raise ValidationError(f"unknown input spec {type(spec).__name__}")


def resolution_limit(model: StateSpaceModel) -> float:
    """Largest admissible dt for the fastest eigenvalue of the model."""
    omega_max = float(np.max(np.abs(np.linalg.eigvals(model.A))))
    if omega_max == 0.0:
        return math.inf
    return 2.0 * math.pi / (omega_max * STEPS_PER_FASTEST_PERIOD)


def simulate(
    model: StateSpaceModel,
    u: Signal,
    events: tuple[tuple[float, float], ...] = (),
    x0: np.ndarray | None = None,
) -> Signal:
    """Fixed-step RK4 response of the model to ``u`` plus impulse events.

    Each impulse (t, g) is applied as the exact state jump x <- x + B*g at
    the nearest grid point.
    """
    dt = u.dt
    limit = resolution_limit(model)
    if dt > limit:
        raise ResolutionViolation(
            f"dt={dt} exceeds the resolution limit {limit:.6g}"
        )
    n = model.order
    if x0 is None:
        x0 = np.zeros(n)
    else:
        x0 = np.asarray(x0, dtype=float)
        if x0.shape != (n,):
            raise ValidationError(f"x0 must have shape ({n},)")

    jumps = np.zeros(u.samples.size)
    t_end = u.duration
    _check_events(events, t_end)
    b0 = float(model.B[0])
    for t, g in events:
        jumps[int(round(t / dt))] += g

    y = rk4_companion(
        np.ascontiguousarray(model.A[0, :]),
        b0,
        np.ascontiguousarray(model.C),
        np.ascontiguousarray(u.samples),
        jumps,
        x0,
        float(dt),
    )
    if not np.all(np.isfinite(y)):
        raise NonFiniteState("state overflowed during simulation")
    return Signal(u.t0, dt, y)


def transfer_eval(poly: P.Polynomial, s: complex, tol: float = 1e-9) -> complex:
    """Evaluate the unity-numerator transfer function 1/poly at ``s``."""
    d = P.evaluate(poly, s)
    scale = float(np.max(np.abs(poly.coeffs))) * max(1.0, abs(s)) ** poly.degree
    if abs(d) < tol * scale:
        raise PoleProximity(f"|denominator|={abs(d):.3g} too close to a pole")
    return 1.0 / d
