"""Command-line pipeline: design -> realize -> simulate -> analyze.

Exit codes: 0 success (and design verdict true), 1 validation error,
2 numerical failure (including a failed end-to-end cross-check).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import analysis, fileio, sim
from .design import design, verify_design
from .errors import HarmoscError, NumericalError, ValidationError
from .poly import Polynomial

#: relative mismatch allowed between the designed and measured frequency
OMEGA_MISMATCH_TOL = 0.01


def _emit(out_dir: Path | None, name: str, text: str) -> None:
    if out_dir is not None:
        out_dir.mkdir(parents=True, exist_ok=True)
        (out_dir / name).write_text(text)


def _load_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ValidationError(f"cannot read JSON from {path}: {exc}") from exc


def _run_design(spec_dict: dict, out_dir: Path | None) -> dict:
    spec = fileio.design_spec_from_dict(spec_dict)
    poly = design(spec)
    report = verify_design(poly, spec)
    payload = fileio.design_report_to_dict(report)
    _emit(out_dir, "coefficients.json", fileio.dumps(
        {"coefficients": payload["coefficients"]}) + "\n")
    _emit(out_dir, "design_report.json", fileio.dumps(payload) + "\n")
    return payload


def cmd_design(args) -> int:
    out_dir = Path(args.out_dir) if args.out_dir else None
    payload = _run_design(_load_json(args.spec), out_dir)
    print(fileio.dumps(payload))
    return 0 if payload["verdict"] else 2


def _run_simulate(coeffs, input_dict, t_end, dt):
    poly = Polynomial(coeffs)
    model = sim.canonical_state_space(poly)
    u, events = sim.make_input(fileio.input_spec_from_dict(input_dict), t_end, dt)
    return sim.simulate(model, u, events)


def cmd_simulate(args) -> int:
    coeffs = fileio.coefficients_from_json(Path(args.coeffs).read_text())
    y = _run_simulate(coeffs, _load_json(args.input), args.t_end, args.dt)
    if args.format == "json":
        text = fileio.dumps(
            {"t": [float(t) for t in y.times], "y": [float(v) for v in y.samples]}
        ) + "\n"
        name = "signal.json"
    else:
        text = fileio.signal_to_csv(y)
        name = "signal.csv"
    if args.out_dir:
        _emit(Path(args.out_dir), name, text)
    else:
        sys.stdout.write(text)
    return 0


def _run_analyze(signal, window, hop, discard, out_dir: Path | None) -> dict:
    report, spect, orbit = analysis.characterize(signal, window, hop, discard)
    payload = fileio.oscillation_report_to_dict(report)
    _emit(out_dir, "report.json", fileio.dumps(payload) + "\n")
    _emit(out_dir, "spectrogram.csv", fileio.spectrogram_to_csv(spect))
    _emit(out_dir, "orbit.csv", fileio.orbit_to_csv(orbit))
    return payload


def cmd_analyze(args) -> int:
    signal = fileio.signal_from_csv(Path(args.signal).read_text())
    out_dir = Path(args.out_dir) if args.out_dir else None
    payload = _run_analyze(signal, args.window, args.hop, args.discard, out_dir)
    print(fileio.dumps(payload))
    return 0


def cmd_pipeline(args) -> int:
    cfg = _load_json(args.config)
    out_dir = Path(args.out_dir or cfg.get("out_dir", "harmosc_out"))

    if ("design" in cfg) == ("coefficients" in cfg):
        raise ValidationError("config needs exactly one of 'design'/'coefficients'")

    omega_target = None
    if "design" in cfg:
        design_payload = _run_design(cfg["design"], out_dir)
        if not design_payload["verdict"]:
            raise ValidationError("pipeline: design verification failed")
        coeffs = design_payload["coefficients"]
        omega_target = float(cfg["design"]["omega_k"])
    else:
        coeffs = [float(v) for v in cfg["coefficients"]]

    try:
        t_end = float(cfg["t_end"])
        dt = float(cfg["dt"])
        input_dict = cfg["input"]
    except KeyError as exc:
        raise ValidationError(f"pipeline config missing {exc}") from exc
    y = _run_simulate(coeffs, input_dict, t_end, dt)
    _emit(out_dir, "signal.csv", fileio.signal_to_csv(y))

    ana = cfg.get("analysis", {})
    payload = _run_analyze(
        y,
        int(ana.get("window", 4096)),
        int(ana.get("hop", 512)),
        float(ana.get("discard", 0.0)),
        out_dir,
    )

    summary = {
        "coefficients": coeffs,
        "omega_target": omega_target,
        "omega_measured": payload["omega_rad_s"],
        "report": payload,
        "verdict": "PASS",
    }
    if omega_target is not None:
        mismatch = abs(payload["omega_rad_s"] - omega_target) / omega_target
        summary["omega_mismatch"] = mismatch
        if mismatch > OMEGA_MISMATCH_TOL:
            summary["verdict"] = "FAIL"
    _emit(out_dir, "summary.json", fileio.dumps(summary) + "\n")
    print(fileio.dumps(summary))
    if summary["verdict"] != "PASS":
        raise NumericalError(
            f"measured omega deviates by {summary['omega_mismatch']:.3%}"
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="harmosc",
        description="Design and verify harmonically oscillating LTI systems",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("design", help="solve a design spec for coefficients")
    p.add_argument("--spec", required=True, help="design spec JSON file")
    p.add_argument("--out-dir")
    p.set_defaults(func=cmd_design)

    p = subs.add_parser("simulate", help="simulate a response to an input spec")
    p.add_argument("--coeffs", required=True, help="coefficient JSON file")
    p.add_argument("--input", required=True, help="input spec JSON file")
    p.add_argument("--t-end", type=float, required=True)
    p.add_argument("--dt", type=float, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out-dir")
    p.set_defaults(func=cmd_simulate)

    p = subs.add_parser("analyze", help="characterize a simulated signal")
    p.add_argument("signal", help="signal CSV file")
    p.add_argument("--window", type=int, default=4096)
    p.add_argument("--hop", type=int, default=512)
    p.add_argument("--discard", type=float, default=0.0)
    p.add_argument("--out-dir")
    p.set_defaults(func=cmd_analyze)

    p = subs.add_parser("pipeline", help="run design->simulate->analyze")
    p.add_argument("--config", required=True, help="pipeline config JSON file")
    p.add_argument("--out-dir")
    p.set_defaults(func=cmd_pipeline)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(fileio.dumps({"error": type(exc).__name__, "message": str(exc)}))
        return 1
    except (NumericalError, HarmoscError) as exc:
        print(fileio.dumps({"error": type(exc).__name__, "message": str(exc)}))
        return 2


if __name__ == "__main__":
    sys.exit(main())
