"""Harmonic oscillation design for high-order LTI systems."""

from .analysis import (
    AnalyticSignal,
    OscillationReport,
    Spectrogram,
    analytic,
    characterize,
    estimate_decay,
    estimate_steady,
    spectrogram,
)
from .design import (
    DesignReport,
    DesignSpec,
    decay_row,
    design,
    oscillation_rows,
    solve_two_free,
    verify_design,
)
from .poly import (
    PolarRoot,
    Polynomial,
    RegionClass,
    classify,
    evaluate,
    from_polar,
    roots,
    to_polar,
)
from .sim import (
    ImpulseTrain,
    Signal,
    StateSpaceModel,
    StepProfile,
    ZeroInput,
    canonical_state_space,
    make_input,
    resolution_limit,
    simulate,
    transfer_eval,
)

__version__ = "0.1.0"

__all__ = [
    "AnalyticSignal",
    "DesignReport",
    "DesignSpec",
    "ImpulseTrain",
    "OscillationReport",
    "PolarRoot",
    "Polynomial",
    "RegionClass",
    "Signal",
    "Spectrogram",
    "StateSpaceModel",
    "StepProfile",
    "ZeroInput",
    "analytic",
    "canonical_state_space",
    "characterize",
    "classify",
    "decay_row",
    "design",
    "estimate_decay",
    "estimate_steady",
    "evaluate",
    "from_polar",
    "make_input",
    "oscillation_rows",
    "resolution_limit",
    "roots",
    "simulate",
    "solve_two_free",
    "spectrogram",
    "to_polar",
    "transfer_eval",
    "verify_design",
]
