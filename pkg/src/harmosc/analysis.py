"""Oscillation verification: analytic signal, spectrogram, and estimators."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import NoTransient, TooShort, ValidationError, WindowTooLong, WindowTooShort
from .sim import Signal

#: fraction of samples trimmed at each end of an analytic signal before
#: envelope statistics (FFT wrap-around artifacts)
EDGE_TRIM = 0.05


@dataclass(frozen=True)
class AnalyticSignal:
    """Complex signal whose real part is the original waveform."""

    t0: float
    dt: float
    values: np.ndarray

    @property
    def envelope(self) -> np.ndarray:
        return np.abs(self.values)

    @property
    def phase(self) -> np.ndarray:
        return np.unwrap(np.angle(self.values))

    @property
    def times(self) -> np.ndarray:
        return self.t0 + self.dt * np.arange(self.values.size)


@dataclass(frozen=True)
class Spectrogram:
    """STFT magnitude grid: rows are time frames, columns frequency bins."""

    times: np.ndarray
    freqs: np.ndarray
    magnitudes: np.ndarray


class SteadyEstimate(NamedTuple):
    f_hz: float
    amplitude: float
    bias: float


class DecayEstimate(NamedTuple):
    tau_s: float
    transient_f_hz: float


def hann(n: int) -> np.ndarray:
    return 0.5 - 0.5 * np.cos(2.0 * np.pi * np.arange(n) / n)


def analytic(signal: Signal) -> AnalyticSignal:
    """FFT-based analytic signal.

    Positive-frequency bins are doubled, negative bins zeroed, DC and
    Nyquist kept; the real part of the result is the input, bit for bit.
    """
    x = signal.samples
    n = x.size
    if n < 8:
        raise TooShort(f"need at least 8 samples, got {n}")
    spec = np.fft.fft(x)
    mult = np.zeros(n)
    mult[0] = 1.0
    if n % 2 == 0:
        mult[1 : n // 2] = 2.0
        mult[n // 2] = 1.0
    else:
        mult[1 : (n + 1) // 2] = 2.0
    z = np.fft.ifft(spec * mult)
    values = x + 1j * z.imag
    values.setflags(write=False)
    return AnalyticSignal(signal.t0, signal.dt, values)


def spectrogram(signal: Signal, window_len: int, hop: int) -> Spectrogram:
    """Hann-windowed magnitude STFT with frame centers on the time axis."""
    n = signal.samples.size
    if window_len > n:
        raise WindowTooLong(f"window {window_len} exceeds signal length {n}")
    if hop < 1:
        raise ValidationError(f"hop must be >= 1, got {hop}")
    w = hann(window_len)
    starts = np.arange(0, n - window_len + 1, hop)
    mags = np.empty((starts.size, window_len // 2 + 1))
    for i, s in enumerate(starts):
        mags[i] = np.abs(np.fft.rfft(signal.samples[s : s + window_len] * w))
    times = signal.t0 + (starts + (window_len - 1) / 2.0) * signal.dt
    freqs = np.arange(window_len // 2 + 1) / (window_len * signal.dt)
    return Spectrogram(times=times, freqs=freqs, magnitudes=mags)


def _interp_peak(logmag: np.ndarray, k: int) -> tuple[float, float]:
    # three-point parabolic interpolation on log magnitude
    a, b, c = logmag[k - 1], logmag[k], logmag[k + 1]
    denom = a - 2.0 * b + c
    if denom >= 0.0:
        return float(k), b
    delta = 0.5 * (a - c) / denom
    return k + delta, b - 0.25 * (a - c) * delta


def estimate_steady(signal: Signal, discard: float) -> SteadyEstimate:
    """Bias, frequency and amplitude of the post-transient oscillation.

    Frequency comes from a parabolic-interpolated peak of the Hann-windowed
    spectrum; the bias is re-estimated over an integer number of periods so
    partial cycles do not leak into the mean.
    """
    if discard < 0:
        raise ValidationError("discard must be >= 0")
    i0 = int(round(discard / signal.dt))
    if i0 >= signal.samples.size - 16:
        raise WindowTooShort("nothing left after discarding the transient")
    rem = signal.samples[i0:]
    nw = rem.size
    w = hann(nw)
    mag = np.abs(np.fft.rfft((rem - rem.mean()) * w))
    lo = min(3, mag.size - 2)
    k = lo + int(np.argmax(mag[lo:-1]))
    if mag[k] <= 0.0:
        raise WindowTooShort("no dominant spectral component")
    with np.errstate(divide="ignore"):
        kf, logpeak = _interp_peak(np.log(np.maximum(mag, 1e-300)), k)
    f_hz = kf / (nw * signal.dt)
    amplitude = 2.0 * math.exp(logpeak) / w.sum()
    if nw * signal.dt * f_hz < 5.0:
        raise WindowTooShort("fewer than 5 periods of the dominant component")
    n_per = int(nw * signal.dt * f_hz)
    i1 = min(nw, int(round(n_per / (f_hz * signal.dt))))
    bias = float(np.mean(rem[:i1]))
    return SteadyEstimate(f_hz=float(f_hz), amplitude=float(amplitude), bias=bias)


def _fit_steady_component(signal: Signal, steady: SteadyEstimate) -> np.ndarray:
    # amplitude/phase/bias fit of the steady sinusoid over the
    # least-contaminated second half, then extrapolated over the full
    # record.  The FFT-peak frequency is only good to a fraction of a bin,
    # which is not phase-coherent across a long record, so it is refined
    # first from the slope of the unwrapped analytic-signal phase.
    t = signal.times
    om = 2.0 * np.pi * steady.f_hz
    i0 = t.size // 2
    tf, yf = t[i0:], signal.samples[i0:]
    tail = analytic(Signal(float(tf[0]), signal.dt, yf - yf.mean()))
    cut = max(1, int(EDGE_TRIM * tf.size))
    phase = tail.phase[cut:-cut]
    slope = np.polyfit(tail.times[cut:-cut], phase, 1)[0]
    if slope > 0 and abs(slope - om) < 0.5 * om:
        om = float(slope)
    cos_t, sin_t = np.cos(om * tf), np.sin(om * tf)
    g = np.column_stack([cos_t, sin_t, np.ones(tf.size)])
    (a, b, c), *_ = np.linalg.lstsq(g, yf, rcond=None)
    return a * np.cos(om * t) + b * np.sin(om * t) + c


def estimate_decay(signal: Signal, steady: SteadyEstimate) -> DecayEstimate:
    """Time constant of the decaying oscillatory transient.

    The fitted steady component is subtracted first; the residual envelope
    is fit in log space over the stretch where it exceeds three times the
    noise floor.  The fit region is additionally capped to the top three
    e-foldings of the envelope and to the contiguous stretch around its
    peak, so the slowly decaying Hilbert-transform skirt of the turn-on
    does not flatten the slope.  Raises :class:`NoTransient` when the
    residual is negligible against the steady component, never rises above
    the floor, or is not oscillatory.
    """
    resid = signal.samples - _fit_steady_component(signal, steady)
    n = resid.size
    env = np.abs(analytic(Signal(signal.t0, signal.dt, resid)).values)
    trim = max(1, int(EDGE_TRIM * n))
    core = slice(trim, n - trim)
    peak = float(env[core].max())
    steady_scale = steady.amplitude + abs(steady.bias)
    if peak < 0.02 * steady_scale:
        raise NoTransient("residual is negligible against the steady component")
    floor = float(np.percentile(env[core], 10))
    thr = max(3.0 * floor, peak * math.exp(-3.0))
    above = np.flatnonzero(env[core] > thr) + trim
    if above.size < 8:
        raise NoTransient("residual never rises above the noise floor")
    # keep only the stretch contiguous with the transient peak; later
    # above-threshold islands are edge artifacts
    gap_max = max(200, int(EDGE_TRIM * n))
    breaks = np.flatnonzero(np.diff(above) > gap_max)
    if breaks.size:
        above = above[: breaks[0] + 1]
    if above.size < 8:
        raise NoTransient("residual never rises above the noise floor")
    i_first, i_last = int(above[0]), int(above[-1])
    seg = resid[i_first : i_last + 1]
    signs = np.sign(seg[seg != 0.0])
    crossings = int(np.count_nonzero(signs[1:] != signs[:-1]))
    if crossings < 4:
        raise NoTransient("residual transient is not oscillatory")
    t = signal.times
    slope, _ = np.polyfit(t[above], np.log(env[above]), 1)
    if slope >= 0.0:
        raise NoTransient("residual envelope does not decay")
    span = t[i_last] - t[i_first]
    return DecayEstimate(
        tau_s=float(-1.0 / slope),
        transient_f_hz=float(crossings / (2.0 * span)),
    )


@dataclass(frozen=True)
class OscillationReport:
    """Summary of the steady oscillation and transient of one signal."""

    f_hz: float
    omega_rad_s: float
    amplitude: float
    bias: float
    tau_s: float | None
    transient_f_hz: float | None
    flags: tuple[str, ...]


def characterize(
    signal: Signal, window_len: int, hop: int, discard: float
) -> tuple[OscillationReport, Spectrogram, AnalyticSignal]:
    """Run the full analysis chain on one simulated output."""
    steady = estimate_steady(signal, discard)
    flags: list[str] = []
    tau = transient_f = None
    try:
        decay = estimate_decay(signal, steady)
        tau, transient_f = decay.tau_s, decay.transient_f_hz
    except NoTransient:
        flags.append("no_transient")
    spect = spectrogram(signal, window_len, hop)
    orbit = analytic(signal)
    report = OscillationReport(
        f_hz=steady.f_hz,
        omega_rad_s=2.0 * math.pi * steady.f_hz,
        amplitude=steady.amplitude,
        bias=steady.bias,
        tau_s=tau,
        transient_f_hz=transient_f,
        flags=tuple(flags),
    )
    return report, spect, orbit
