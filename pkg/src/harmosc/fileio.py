"""JSON/CSV serialization for specs, signals, spectrograms and reports.

All floats are written with 17 significant digits so identical runs
produce byte-identical artifacts.
"""

from __future__ import annotations

import json
from typing import Any

import numpy as np

from . import poly as P
from .analysis import AnalyticSignal, OscillationReport, Spectrogram
from .design import DesignReport, DesignSpec
from .errors import ValidationError
from .sim import ImpulseTrain, InputSpec, Signal, StepProfile, ZeroInput


def fmt(v: float) -> str:
    return f"{float(v):.17g}"


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


# ---------------------------------------------------------------- specs


def design_spec_from_dict(d: dict) -> DesignSpec:
    try:
        return DesignSpec(
            order=int(d["order"]),
            omega_k=float(d["omega_k"]),
            decays=tuple(float(x) for x in d.get("decays", [])),
            pinned={int(k): float(v) for k, v in d.get("pinned", {}).items()},
        )
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"bad design spec: {exc}") from exc


def input_spec_from_dict(d: dict) -> InputSpec:
    kind = d.get("type")
    if kind == "zero":
        return ZeroInput()
    if kind == "impulses":
        return ImpulseTrain(tuple((float(t), float(g)) for t, g in d["events"]))
    if kind == "steps":
        return StepProfile(tuple((float(t), float(v)) for t, v in d["levels"]))
    raise ValidationError(f"unknown input type {kind!r}")


def coefficients_from_json(text: str) -> list[float]:
    data = json.loads(text)
    if isinstance(data, dict):
        data = data.get("coefficients")
    if not isinstance(data, list):
        raise ValidationError("expected a coefficient list")
    return [float(v) for v in data]


# -------------------------------------------------------------- reports


def design_report_to_dict(report: DesignReport) -> dict:
    root_rows = []
    for r, cls in zip(report.roots, report.classifications):
        m, theta = P.to_polar(r)
        root_rows.append(
            {
                "sigma": r.real,
                "omega": r.imag,
                "magnitude": m,
                "angle": theta,
                "class": cls.value,
            }
        )
    return {
        "coefficients": [float(c) for c in report.polynomial.coeffs],
        "roots": root_rows,
        "oscillation_residual": {
            "real": report.oscillation_residual[0],
            "imag": report.oscillation_residual[1],
        },
        "decay_residuals": list(report.decay_residuals),
        "verdict": report.verdict,
    }


def oscillation_report_to_dict(report: OscillationReport) -> dict:
    return {
        "f_hz": report.f_hz,
        "omega_rad_s": report.omega_rad_s,
        "amplitude": report.amplitude,
        "bias": report.bias,
        "tau_s": report.tau_s,
        "transient_f_hz": report.transient_f_hz,
        "flags": list(report.flags),
    }


# ------------------------------------------------------------------ csv


def signal_to_csv(signal: Signal) -> str:
    t = signal.times
    lines = ["t,y"]
    lines.extend(f"{fmt(ti)},{fmt(yi)}" for ti, yi in zip(t, signal.samples))
    return "\n".join(lines) + "\n"


def signal_from_csv(text: str) -> Signal:
    lines = [ln for ln in text.strip().splitlines() if ln]
    if not lines or lines[0].strip().lower() != "t,y":
        raise ValidationError("signal CSV must start with a 't,y' header")
    data = np.array(
        [[float(v) for v in ln.split(",")] for ln in lines[1:]], dtype=float
    )
    if data.shape[0] < 2:
        raise ValidationError("signal CSV needs at least two samples")
    t, y = data[:, 0], data[:, 1]
    dts = np.diff(t)
    dt = float(dts[0])
    if np.max(np.abs(dts - dt)) > 1e-9 * max(1.0, abs(dt)):
        raise ValidationError("signal CSV must be uniformly sampled")
    return Signal(float(t[0]), dt, y)


def spectrogram_to_csv(spect: Spectrogram) -> str:
    header = "," + ",".join(fmt(f) for f in spect.freqs)
    lines = [header]
    for t, row in zip(spect.times, spect.magnitudes):
        lines.append(fmt(t) + "," + ",".join(fmt(v) for v in row))
    return "\n".join(lines) + "\n"


def orbit_to_csv(orbit: AnalyticSignal) -> str:
    lines = ["re,im"]
    lines.extend(f"{fmt(z.real)},{fmt(z.imag)}" for z in orbit.values)
    return "\n".join(lines) + "\n"
