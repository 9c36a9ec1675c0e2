"""Time-spectrum diagnostics: is a recorded field a single-frequency wave?

The test transforms the snapshot record along time (optionally windowed),
finds the frequency band of a declared half-width that captures the most
energy, and reports:

  concentration    energy fraction inside the best band
  peak dispersion  spread (in bins) of the per-column peak locations
  modulus drift    max_t || |u(., t)| - |u(., 0)| ||_2 / || |u(., 0)| ||_2

Verdict:  SingleFrequency  iff  concentration >= 1 - delta
          and peak_dispersion <= band_halfwidth;  otherwise Broad.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import GridError
from .fields import SpaceFreqField, SpaceTimeField, time_fourier
from .support import lower_bound_profile, upper_bound_profile, sigma_projection, BoundProfile
from .fields import support_mask

SINGLE_FREQUENCY = "SingleFrequency"
BROAD = "Broad"

_COLUMN_FLOOR = 1e-10  # columns below this fraction of the peak column are ignored


@dataclass(frozen=True)
class SpectrumReport:
    concentration: float
    peak_bin_per_x: np.ndarray  # -1 marks columns below the energy floor
    peak_dispersion: int
    band_center_bin: int
    band_halfwidth_bins: int
    modulus_drift: float | None
    verdict: str

    def to_doc(self) -> dict:
        return {
            "verdict": self.verdict,
            "concentration": self.concentration,
            "peak_dispersion": self.peak_dispersion,
            "band_center_bin": self.band_center_bin,
            "band_halfwidth_bins": self.band_halfwidth_bins,
            "modulus_drift": self.modulus_drift,
            "peak_bin_per_x": [int(k) for k in self.peak_bin_per_x],
        }


def _window(name: str, n: int) -> np.ndarray:
    if name == "none":
        return np.ones(n)
    if name == "hann":
        # periodic hann scaled to unit mean
        return 1.0 - np.cos(2 * np.pi * np.arange(n) / n)
    raise ValueError(f"unknown window {name!r}")


def time_spectrum(record, window: str = "hann") -> SpaceFreqField:
    """Windowed transform of a snapshot record along the time axis.

    Needs at least 8 uniformly spaced snapshots; the window is normalized to
    unit mean so amplitudes stay comparable across windows.
    """
    snaps: SpaceTimeField = record.snapshots
    times = record.snapshot_times
    n = snaps.tgrid.count
    if n < 8:
        raise GridError(f"need at least 8 snapshots for a spectrum, got {n}")
    steps = np.diff(times)
    if np.max(np.abs(steps - steps[0])) > 1e-9 * steps[0]:
        raise GridError("snapshots are not uniformly spaced")
    w = _window(window, n)
    windowed = SpaceTimeField(snaps.xgrid, snaps.tgrid, snaps.values * w[None, :])
    return time_fourier(windowed)


def modulus_drift(field: SpaceTimeField) -> float:
    """max over t of || |u(.,t)| - |u(.,0)| ||_2 relative to || |u(.,0)| ||_2."""
    mags = np.abs(field.values)
    ref = mags[:, 0]
    denom = np.linalg.norm(ref)
    if denom == 0:
        raise ValueError("reference snapshot is identically zero")
    return float(np.max(np.linalg.norm(mags - ref[:, None], axis=0)) / denom)


def single_frequency_test(
    spec: SpaceFreqField,
    delta: float = 0.01,
    band_halfwidth: int = 2,
    time_field: SpaceTimeField | None = None,
) -> SpectrumReport:
    """Classify a spectrum as SingleFrequency or Broad.

    The modulus drift needs the time-domain record; pass it as time_field
    when available (the analysis pipeline does), else that entry is None.
    """
    if not 0 < delta < 1:
        raise ValueError(f"delta must be in (0, 1), got {delta}")
    if band_halfwidth < 0:
        raise ValueError("band_halfwidth must be >= 0")
    energy = np.abs(spec.values) ** 2
    total = float(energy.sum())
    if total == 0:
        raise ValueError("cannot classify the zero field")

    col_energy = energy.sum(axis=1)
    floor = _COLUMN_FLOOR * col_energy.max()
    peaks = np.full(spec.xgrid.count, -1, dtype=int)
    for i in range(spec.xgrid.count):
        if col_energy[i] > floor:
            peaks[i] = int(np.argmax(energy[i]))  # ties resolve to the lowest bin

    bins = energy.sum(axis=0)
    nw = spec.wgrid.count
    best_center, best_sum = 0, -1.0
    for c in range(nw):
        lo = max(0, c - band_halfwidth)
        hi = min(nw, c + band_halfwidth + 1)
        s = float(bins[lo:hi].sum())
        if s > best_sum:
            best_center, best_sum = c, s
    concentration = best_sum / total

    live = peaks[peaks >= 0]
    dispersion = int(live.max() - live.min()) if live.size else 0
    drift = modulus_drift(time_field) if time_field is not None else None
    verdict = (
        SINGLE_FREQUENCY
        if concentration >= 1 - delta and dispersion <= band_halfwidth
        else BROAD
    )
    return SpectrumReport(
        concentration=concentration,
        peak_bin_per_x=peaks,
        peak_dispersion=dispersion,
        band_center_bin=best_center,
        band_halfwidth_bins=band_halfwidth,
        modulus_drift=drift,
        verdict=verdict,
    )


def support_compactness(
    spec: SpaceFreqField, rel_threshold: float = 1e-3
) -> tuple[BoundProfile, BoundProfile, int]:
    """Support bounds of a spectrum and the widest per-column width in bins."""
    m = support_mask(spec, rel_threshold)
    a = lower_bound_profile(m)
    b = upper_bound_profile(m)
    sigma = sigma_projection(m)
    width = 0
    dw = spec.wgrid.step
    for i in np.flatnonzero(sigma.flags):
        width = max(width, int(round((b.values[i] - a.values[i]) / dw)))
    return a, b, width


def harmonic_peaks(
    spec: SpaceFreqField, fundamental: float, orders: tuple[int, ...] = (1, 2, 3, 4, 5, 6, 7)
) -> dict[int, float]:
    """Peak magnitude near each harmonic n * fundamental (nearest bin),
    maximized over x.  Used to read off the odd-harmonic ladder of a
    time-periodic real field."""
    mags = np.abs(spec.values)
    w = spec.wgrid
    out = {}
    for nharm in orders:
        target = nharm * fundamental
        k = int(round((target - w.origin) / w.step))
        if 0 <= k < w.count:
            out[nharm] = float(mags[:, k].max())
    return out
