"""Flat key/value experiment configuration.

Config files are plain text: one `key = value` per line, `#` comments, no
sections.  Unknown keys are rejected so typos fail loudly.  Every run carries
an explicit seed (config key `seed`, overridable by the CLI flag), echoed in
the outputs.

Keys by command:

simulate     kind (nls|nlkg), m, alpha.variant (polynomial|root|rational),
             alpha.coeffs, alpha.n, alpha.num, alpha.den, L, nx, dt, t_end,
             snapshot_every, seed, initial.kind (profile|gaussian|breather|
             akhmediev|file), initial.omega, initial.amplitude,
             initial.width, initial.file
analyze      delta, band_halfwidth, window (none|hann), rel_threshold, seed
titchmarsh   trials, seed, nx, nw, rel_threshold, radius, min_block,
             max_block, empty_prob
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Any, Mapping

import numpy as np

from .errors import ConfigError
from .evolve import ModelSpec
from .fields import AxisGrid
from .nonlinearity import (
    Nonlinearity,
    PolynomialAlpha,
    RationalAlpha,
    RootAlpha,
    poly,
)

_INT_KEYS = {
    "nx", "nw", "snapshot_every", "seed", "trials", "radius",
    "band_halfwidth", "min_block", "max_block", "alpha.n",
}
_FLOAT_KEYS = {
    "m", "L", "dt", "t_end", "delta", "rel_threshold", "empty_prob",
    "initial.omega", "initial.amplitude", "initial.width",
}
_STR_KEYS = {"kind", "alpha.variant", "window", "initial.kind", "initial.file"}
_LIST_KEYS = {"alpha.coeffs", "alpha.num", "alpha.den"}

SIMULATE_KEYS = {
    "kind", "m", "alpha.variant", "alpha.coeffs", "alpha.n", "alpha.num",
    "alpha.den", "L", "nx", "dt", "t_end", "snapshot_every", "seed",
    "initial.kind", "initial.omega", "initial.amplitude", "initial.width",
    "initial.file",
}
ANALYZE_KEYS = {"delta", "band_halfwidth", "window", "rel_threshold", "seed"}
TITCHMARSH_KEYS = {
    "trials", "seed", "nx", "nw", "rel_threshold", "radius",
    "min_block", "max_block", "empty_prob",
}


def parse_kv_text(text: str) -> dict[str, str]:
    entries: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if not key or not value:
            raise ConfigError(f"line {lineno}: empty key or value in {raw!r}")
        if key in entries:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        entries[key] = value
    return entries


def _coerce_one(key: str, value: str) -> Any:
    try:
        if key in _INT_KEYS:
            return int(value)
        if key in _FLOAT_KEYS:
            return float(value)
        if key in _LIST_KEYS:
            return tuple(float(p) for p in value.split(",") if p.strip())
    except ValueError as exc:
        raise ConfigError(f"bad value for {key!r}: {value!r} ({exc})") from None
    return value


def coerce_entries(entries: Mapping[str, str], allowed: set[str]) -> dict[str, Any]:
    unknown = sorted(set(entries) - allowed)
    if unknown:
        raise ConfigError(f"unknown config keys: {', '.join(unknown)}")
    return {k: _coerce_one(k, v) for k, v in entries.items()}


@dataclass(frozen=True)
class ExperimentConfig:
    """Typed snapshot of a config file plus CLI overrides."""

    command: str
    entries: Mapping[str, Any]
    seed: int

    def get(self, key: str, default: Any = None) -> Any:
        return self.entries.get(key, default)

    def require(self, key: str) -> Any:
        if key not in self.entries:
            raise ConfigError(f"missing required config key {key!r}")
        return self.entries[key]


def load_experiment_config(
    command: str,
    allowed: set[str],
    path: str | None = None,
    preset: Mapping[str, str] | None = None,
    seed_override: int | None = None,
) -> ExperimentConfig:
    """Merge preset defaults, a config file, and the CLI seed override."""
    raw: dict[str, str] = dict(preset or {})
    if path is not None:
        p = Path(path)
        if not p.exists():
            raise ConfigError(f"config file not found: {path}")
        raw.update(parse_kv_text(p.read_text()))
    entries = coerce_entries(raw, allowed)
    seed = seed_override if seed_override is not None else int(entries.get("seed", 0))
    entries["seed"] = seed
    return ExperimentConfig(command=command, entries=entries, seed=seed)


def build_alpha(cfg: ExperimentConfig) -> Nonlinearity:
    variant = cfg.require("alpha.variant")
    try:
        if variant == "polynomial":
            return PolynomialAlpha(poly(cfg.require("alpha.coeffs")))
        if variant == "root":
            return RootAlpha(poly(cfg.require("alpha.coeffs")), int(cfg.require("alpha.n")))
        if variant == "rational":
            return RationalAlpha(poly(cfg.require("alpha.num")), poly(cfg.require("alpha.den")))
    except ValueError as exc:
        raise ConfigError(f"bad nonlinearity: {exc}") from None
    raise ConfigError(f"unknown alpha.variant {variant!r}")


def build_model(cfg: ExperimentConfig) -> ModelSpec:
    kind = cfg.require("kind")
    if kind not in ("nls", "nlkg"):
        raise ConfigError(f"kind must be nls or nlkg, got {kind!r}")
    L = float(cfg.require("L"))
    nx = int(cfg.require("nx"))
    if L <= 0 or nx < 2:
        raise ConfigError("need L > 0 and nx >= 2")
    xg = AxisGrid(-L / 2, L / nx, nx)
    try:
        return ModelSpec(
            kind=kind,
            nonlinearity=build_alpha(cfg),
            xgrid=xg,
            dt=float(cfg.require("dt")),
            t_end=float(cfg.require("t_end")),
            m=float(cfg.get("m", 0.0)),
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def alpha_to_doc(nl: Nonlinearity) -> dict:
    if isinstance(nl, PolynomialAlpha):
        return {"variant": "polynomial", "coeffs": list(nl.p.coeffs)}
    if isinstance(nl, RootAlpha):
        return {"variant": "root", "coeffs": list(nl.a.coeffs), "n": nl.order}
    if isinstance(nl, RationalAlpha):
        return {"variant": "rational", "num": list(nl.num.coeffs), "den": list(nl.den.coeffs)}
    raise ConfigError(f"nonlinearity {type(nl).__name__} has no file representation")


def alpha_from_doc(doc: Mapping[str, Any]) -> Nonlinearity:
    variant = doc["variant"]
    if variant == "polynomial":
        return PolynomialAlpha(poly(doc["coeffs"]))
    if variant == "root":
        return RootAlpha(poly(doc["coeffs"]), int(doc["n"]))
    if variant == "rational":
        return RationalAlpha(poly(doc["num"]), poly(doc["den"]))
    raise ConfigError(f"unknown alpha variant {variant!r}")


def model_to_doc(model: ModelSpec | None) -> dict | None:
    if model is None:
        return None
    return {
        "kind": model.kind,
        "m": model.m,
        "alpha": alpha_to_doc(model.nonlinearity),
        "xgrid": {"origin": model.xgrid.origin, "step": model.xgrid.step, "count": model.xgrid.count},
        "dt": model.dt,
        "t_end": model.t_end,
    }


def model_from_doc(doc: Mapping[str, Any] | None) -> ModelSpec | None:
    if doc is None:
        return None
    g = doc["xgrid"]
    return ModelSpec(
        kind=doc["kind"],
        nonlinearity=alpha_from_doc(doc["alpha"]),
        xgrid=AxisGrid(float(g["origin"]), float(g["step"]), int(g["count"])),
        dt=float(doc["dt"]),
        t_end=float(doc["t_end"]),
        m=float(doc["m"]),
    )


def make_rng(cfg: ExperimentConfig) -> np.random.Generator:
    return np.random.default_rng(cfg.seed)


# Canned simulate setups.  Values are raw strings so they flow through the
# same parsing/validation path as a config file.
PRESETS: dict[str, dict[str, str]] = {
    # focusing cubic NLS soliton on [-20pi, 20pi); exp(it) sech(x) profile
    "soliton": {
        "kind": "nls",
        "alpha.variant": "polynomial",
        "alpha.coeffs": "0,-2",
        "L": "125.66370614359172",
        "nx": "256",
        "dt": "0.001",
        "t_end": "20.0",
        "snapshot_every": "40",
        "initial.kind": "profile",
        "initial.omega": "-1.0",
        "initial.amplitude": "1.0",
    },
    # same model, dispersing gaussian bump
    "gaussian": {
        "kind": "nls",
        "alpha.variant": "polynomial",
        "alpha.coeffs": "0,-2",
        "L": "125.66370614359172",
        "nx": "256",
        "dt": "0.001",
        "t_end": "20.0",
        "snapshot_every": "40",
        "initial.kind": "gaussian",
        "initial.amplitude": "1.5",
        "initial.width": "2.0",
    },
    # sine-Gordon breather sampled in closed form, 16 periods of omega=0.8
    "breather": {
        "initial.kind": "breather",
        "initial.omega": "0.8",
        "L": "50.26548245743669",
        "nx": "256",
        "dt": "0.2454369260617026",
        "t_end": "125.66370614359172",
        "snapshot_every": "1",
    },
    # Akhmediev breather of cubic NLS, sampled on t in [-6, 6]
    "akhmediev": {
        "initial.kind": "akhmediev",
        "L": "25.132741228718345",
        "nx": "256",
        "dt": "0.046875",
        "t_end": "12.0",
        "snapshot_every": "1",
    },
}
