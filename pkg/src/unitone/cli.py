"""Command-line front end.

Subcommands:

  titchmarsh-verify   randomized support-additivity trials + two fixed
                      counterexample fields; exit 0 iff everything passes
  simulate            run a preset or config-file model, write the record
  analyze             spectrum report + CSV for a saved record
  check-nonlinearity  admissibility verdict for a nonlinearity/dimension
  demo-breather       odd-harmonic ladder of the closed-form breather

Exit codes: 0 success, 1 scientific failure (verification or admissibility
failed, run diverged), 2 usage/config errors or missing files.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import config as cfgmod
from . import io as iomod
from .errors import (
    ConfigError,
    DivergenceError,
    NoSolitaryWaveError,
    StabilityError,
)
from .evolve import analytic_record, run_simulation
from .fieldgen import piecewise_box_pair, spike_plus_box_field, step_delta_field
from .fields import AxisGrid, support_mask
from .spectrum import harmonic_peaks, single_frequency_test, time_spectrum
from .support import (
    lower_bound_profile,
    lower_envelope,
    titchmarsh_check,
    upper_bound_profile,
    upper_envelope,
)
from .waves import akhmediev_field, breather_field, solitary_profile


def _emit(args, summary: dict, human_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(summary, indent=2))
    else:
        for line in human_lines:
            print(line)


def _outdir(args) -> Path:
    out = Path(args.out) if args.out else Path(".")
    out.mkdir(parents=True, exist_ok=True)
    return out


# -- titchmarsh-verify -------------------------------------------------------

def _special_case_checks() -> list[dict]:
    """The two fixed fields with the support behaviour the envelope
    calculus must not paper over."""
    checks = []

    # field 1: frequency jumps from -1 to +1 across the interface; upper and
    # lower bounds coincide columnwise, yet near the step the one-cell upper
    # envelope of a exceeds the lower envelope of b.
    f = step_delta_field()
    m = support_mask(f)
    a = lower_bound_profile(m)
    b = upper_bound_profile(m)
    left = f.xgrid.coordinates < 0
    ok1 = (
        np.array_equal(a.values, b.values)
        and np.all(a.values[left] == -1.0)
        and np.all(a.values[~left] == 1.0)
        and np.any(upper_envelope(a).values > lower_envelope(b).values)
    )
    checks.append({"name": "interface_jump_orders_profiles", "passed": bool(ok1)})

    # field 2: a one-column spike on top of a broadband floor; the lower
    # envelope flattens b to the floor, and no upper envelope recovers it.
    g = spike_plus_box_field()
    mb = support_mask(g)
    bb = upper_bound_profile(mb)
    x0 = int(np.argmin(np.abs(g.xgrid.coordinates)))
    spike_ok = bb.values[x0] == 1.0 and np.all(np.delete(bb.values, x0) == 0.0)
    bl = lower_envelope(bb)
    blu = upper_envelope(bl)
    ok2 = spike_ok and np.all(bl.values == 0.0) and np.any(blu.values != bb.values)
    checks.append({"name": "spike_lost_by_lower_envelope", "passed": bool(ok2)})
    return checks


def cmd_titchmarsh_verify(args) -> int:
    cfg = cfgmod.load_experiment_config(
        "titchmarsh", cfgmod.TITCHMARSH_KEYS, path=args.config, seed_override=args.seed
    )
    trials = int(cfg.get("trials", 50))
    if trials < 0:
        raise ConfigError("trials must be >= 0")
    rng = cfgmod.make_rng(cfg)
    rel = float(cfg.get("rel_threshold", 1e-8))
    radius = int(cfg.get("radius", 1))
    kw = dict(
        nx=int(cfg.get("nx", 32)),
        nw=int(cfg.get("nw", 64)),
        min_block=int(cfg.get("min_block", 3)),
        max_block=int(cfg.get("max_block", 6)),
        empty_prob=float(cfg.get("empty_prob", 0.15)),
    )

    worst = 0.0
    failures = 0
    for _ in range(trials):
        f, g = piecewise_box_pair(rng, **kw)
        rep = titchmarsh_check(f, g, rel_threshold=rel, radius=radius)
        d = max(rep.a.max_discrepancy_cells, rep.b.max_discrepancy_cells)
        if np.isfinite(d):
            worst = max(worst, d)
        if not rep.passed:
            failures += 1

    specials = _special_case_checks()
    passed = failures == 0 and all(c["passed"] for c in specials)
    summary = {
        "trials": trials,
        "failures": failures,
        "worst_discrepancy_cells": worst,
        "special_case_checks": specials,
        "passed": passed,
        "seed": cfg.seed,
    }
    if args.out:
        path = _outdir(args) / "titchmarsh_report.json"
        path.write_text(json.dumps(summary, indent=2) + "\n")
    _emit(
        args,
        summary,
        [
            f"trials: {trials}, failures: {failures}, worst discrepancy "
            f"{worst:g} cells",
            *(f"{c['name']}: {'pass' if c['passed'] else 'FAIL'}" for c in specials),
            "PASS" if passed else "FAIL",
        ],
    )
    return 0 if passed else 1


# -- simulate ----------------------------------------------------------------

def _analytic_grids(cfg, t_origin: float):
    L = float(cfg.require("L"))
    nx = int(cfg.require("nx"))
    dt = float(cfg.require("dt"))
    t_end = float(cfg.require("t_end"))
    every = int(cfg.get("snapshot_every", 1))
    step = dt * every
    count = int(np.floor(t_end / step + 1e-9)) + 1
    return AxisGrid(-L / 2, L / nx, nx), AxisGrid(t_origin, step, count)


def _build_record(cfg):
    ikind = cfg.require("initial.kind")
    if ikind == "breather":
        xg, tg = _analytic_grids(cfg, 0.0)
        return analytic_record(breather_field(float(cfg.require("initial.omega")), xg, tg))
    if ikind == "akhmediev":
        t_end = float(cfg.require("t_end"))
        xg, tg = _analytic_grids(cfg, -t_end / 2)
        return analytic_record(akhmediev_field(xg, tg))

    model = cfgmod.build_model(cfg)
    x = model.xgrid.coordinates
    if ikind == "profile":
        prof = solitary_profile(
            model,
            float(cfg.require("initial.omega")),
            guess_amplitude=float(cfg.get("initial.amplitude", 1.0)),
        )
        initial = prof.phi.astype(np.complex128)
    elif ikind == "gaussian":
        amp = float(cfg.get("initial.amplitude", 1.0))
        width = float(cfg.get("initial.width", 1.0))
        if width <= 0:
            raise ConfigError("initial.width must be positive")
        initial = amp * np.exp(-(x**2) / (2 * width**2)) + 0j
    elif ikind == "file":
        field = iomod.load_field(Path(cfg.require("initial.file")))
        if not field.xgrid.close_to(model.xgrid):
            raise ConfigError("initial-data file grid does not match the model grid")
        initial = field.values[:, 0]
    else:
        raise ConfigError(f"unknown initial.kind {ikind!r}")
    return run_simulation(model, initial, snapshot_every=int(cfg.get("snapshot_every", 1)))


def cmd_simulate(args) -> int:
    if not args.preset and not args.config:
        raise ConfigError("simulate needs --preset or --config")
    preset = None
    if args.preset:
        if args.preset not in cfgmod.PRESETS:
            raise ConfigError(
                f"unknown preset {args.preset!r} (have: {', '.join(sorted(cfgmod.PRESETS))})"
            )
        preset = cfgmod.PRESETS[args.preset]
    cfg = cfgmod.load_experiment_config(
        "simulate", cfgmod.SIMULATE_KEYS, path=args.config,
        preset=preset, seed_override=args.seed,
    )
    record = _build_record(cfg)

    name = args.preset or Path(args.config).stem
    path = _outdir(args) / f"{name}.record.json"
    iomod.save_record(record, path)

    tr = record.invariant_trace
    drift = float(np.max(np.abs(tr - tr[0])) / max(abs(tr[0]), 1e-300))
    summary = {
        "record": str(path),
        "snapshots": int(record.snapshots.tgrid.count),
        "invariant": record.invariant_name,
        "relative_drift": drift,
        "seed": cfg.seed,
    }
    _emit(
        args,
        summary,
        [
            f"wrote {path}",
            f"{summary['snapshots']} snapshots; {record.invariant_name} "
            f"relative drift {drift:.3e}",
        ],
    )
    return 0


# -- analyze -----------------------------------------------------------------

def cmd_analyze(args) -> int:
    record_path = Path(args.record)
    if not record_path.exists():
        print(f"record not found: {record_path}", file=sys.stderr)
        return 2
    cfg = cfgmod.load_experiment_config(
        "analyze", cfgmod.ANALYZE_KEYS, path=args.config, seed_override=args.seed
    )
    record = iomod.load_record(record_path)
    spec = time_spectrum(record, window=cfg.get("window", "hann"))
    report = single_frequency_test(
        spec,
        delta=float(cfg.get("delta", 0.01)),
        band_halfwidth=int(cfg.get("band_halfwidth", 2)),
        time_field=record.snapshots,
    )

    out = _outdir(args)
    stem = record_path.stem.replace(".record", "")
    report_path = out / f"{stem}.report.json"
    report_path.write_text(json.dumps(report.to_doc(), indent=2) + "\n")
    csv_path = out / f"{stem}.spectrum.csv"
    iomod.field_to_csv(spec, csv_path)

    summary = dict(report.to_doc())
    summary["report"] = str(report_path)
    summary["spectrum_csv"] = str(csv_path)
    _emit(
        args,
        summary,
        [
            f"verdict: {report.verdict}",
            f"concentration {report.concentration:.6f}, peak dispersion "
            f"{report.peak_dispersion} bins, modulus drift "
            f"{report.modulus_drift:.3e}",
            f"wrote {report_path} and {csv_path}",
        ],
    )
    return 0


# -- check-nonlinearity ------------------------------------------------------

def _parse_floats(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(p) for p in text.split(",") if p.strip())
    except ValueError as exc:
        raise ConfigError(f"bad coefficient list {text!r}: {exc}") from None


def cmd_check_nonlinearity(args) -> int:
    from .nonlinearity import (
        PolynomialAlpha,
        RationalAlpha,
        RootAlpha,
        admissible,
        poly,
    )

    try:
        if args.variant == "polynomial":
            if args.coeffs is None:
                raise ConfigError("polynomial variant needs --coeffs")
            nl = PolynomialAlpha(poly(_parse_floats(args.coeffs)))
        elif args.variant == "root":
            if args.coeffs is None or args.root_n is None:
                raise ConfigError("root variant needs --coeffs and --root-n")
            nl = RootAlpha(poly(_parse_floats(args.coeffs)), args.root_n)
        else:
            if args.num is None or args.den is None:
                raise ConfigError("rational variant needs --num and --den")
            nl = RationalAlpha(poly(_parse_floats(args.num)), poly(_parse_floats(args.den)))
    except ValueError as exc:
        raise ConfigError(str(exc)) from None

    verdict = admissible(nl, args.n)
    summary = verdict.to_doc()
    if args.out:
        path = _outdir(args) / "verdict.json"
        path.write_text(json.dumps(summary, indent=2) + "\n")
    word = "admissible" if verdict.admissible else "inadmissible"
    detail = "" if verdict.admissible else f" (failed: {', '.join(verdict.failed)})"
    _emit(args, summary, [f"{word} in dimension {args.n}{detail}"])
    return 0 if verdict.admissible else 1


# -- demo-breather -----------------------------------------------------------

def cmd_demo_breather(args) -> int:
    omega = args.omega
    if not 0 < abs(omega) < 1:
        raise ConfigError("breather needs 0 < |omega| < 1")
    period = 2 * np.pi / abs(omega)
    xg = AxisGrid(-8 * np.pi, 16 * np.pi / 256, 256)
    tg = AxisGrid(0.0, 16 * period / 512, 513)
    record = analytic_record(breather_field(omega, xg, tg))
    spec = time_spectrum(record, window="hann")
    peaks = harmonic_peaks(spec, fundamental=abs(omega), orders=(1, 2, 3, 4, 5, 6, 7, 8))

    odd = [peaks[k] for k in (1, 3, 5, 7)]
    even = [peaks[k] for k in (2, 4, 6, 8)]
    ladder_ok = all(a > b for a, b in zip(odd, odd[1:])) and max(even) < 0.05 * odd[0]
    summary = {
        "omega": omega,
        "harmonic_peaks": {str(k): v for k, v in sorted(peaks.items())},
        "odd_ladder_decreasing": bool(ladder_ok),
    }
    if args.out:
        path = _outdir(args) / "breather_harmonics.json"
        path.write_text(json.dumps(summary, indent=2) + "\n")
    lines = [f"fundamental omega = {omega}"]
    lines += [f"  harmonic {k}: {peaks[k]:.6e}" for k in sorted(peaks)]
    lines.append(f"odd ladder strictly decreasing, even suppressed: {ladder_ok}")
    _emit(args, summary, lines)
    return 0 if ladder_ok else 1


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unitone",
        description="support calculus, admissibility checks, and 1-D model runs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", help="flat key=value config file")
        p.add_argument("--seed", type=int, help="RNG seed (overrides config)")
        p.add_argument("--out", help="output directory")
        p.add_argument("--json", action="store_true", help="print a JSON summary")

    p = sub.add_parser("titchmarsh-verify", help="randomized support-additivity check")
    common(p)
    p.set_defaults(func=cmd_titchmarsh_verify)

    p = sub.add_parser("simulate", help="integrate a model or sample a closed form")
    p.add_argument("--preset", help=f"one of: {', '.join(sorted(cfgmod.PRESETS))}")
    common(p)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("analyze", help="spectrum report for a saved record")
    p.add_argument("record", help="path to a saved record")
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("check-nonlinearity", help="admissibility verdict")
    p.add_argument("--variant", required=True, choices=("polynomial", "root", "rational"))
    p.add_argument("--coeffs", help="comma-separated, constant term first")
    p.add_argument("--root-n", type=int, help="root order for the root variant")
    p.add_argument("--num", help="numerator coefficients (rational)")
    p.add_argument("--den", help="denominator coefficients (rational)")
    p.add_argument("--n", type=int, required=True, help="spatial dimension")
    p.add_argument("--out", help="output directory")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check_nonlinearity)

    p = sub.add_parser("demo-breather", help="odd-harmonic ladder demo")
    p.add_argument("--omega", type=float, default=0.8)
    p.add_argument("--out", help="output directory")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_demo_breather)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (StabilityError, DivergenceError, NoSolitaryWaveError) as exc:
        print(f"run failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
