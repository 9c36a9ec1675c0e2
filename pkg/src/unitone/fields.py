"""Uniform grids, complex space-time / space-frequency fields, and the
time-axis Fourier transform.

Sign convention (fixed throughout the package): the forward transform maps a
time signal to frequencies with the *plus* sign in the exponent,

    u~(x, omega) = dt * sum_j u(x, t_j) * exp(+i omega t_j),

and the inverse uses exp(-i omega t) together with the 1/(2 pi) factor.  This
is the analysis convention in which a pure wave phi(x) e^{-i omega_0 t}
transforms to a single line at omega = +omega_0.  Frequencies are stored
fftshift-style: ascending, centered on zero, omega_k = 2 pi k / (N dt) with
integer k in [-floor(N/2), N-1-floor(N/2)].
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import GridError

_REL_TOL = 1e-9


@dataclass(frozen=True)
class AxisGrid:
    """Uniform 1-D sample axis: points origin + i*step for i in range(count)."""

    origin: float
    step: float
    count: int

    def __post_init__(self):
        if not (math.isfinite(self.origin) and math.isfinite(self.step)):
            raise GridError("grid origin/step must be finite")
        if self.step <= 0:
            raise GridError(f"grid step must be positive, got {self.step}")
        if self.count < 2:
            raise GridError(f"grid needs at least 2 points, got {self.count}")

    @property
    def coordinates(self) -> np.ndarray:
        return self.origin + self.step * np.arange(self.count)

    @property
    def length(self) -> float:
        """Periodic extent covered by the samples (count * step)."""
        return self.step * self.count

    def coordinate(self, i: int) -> float:
        return self.origin + self.step * i

    def close_to(self, other: "AxisGrid") -> bool:
        if self.count != other.count:
            return False
        tol = _REL_TOL * self.step
        return abs(self.origin - other.origin) <= tol and abs(self.step - other.step) <= tol


def _readonly_complex(values, shape) -> np.ndarray:
    arr = np.asarray(values, dtype=np.complex128)
    if arr.shape != shape:
        raise GridError(f"field values shape {arr.shape} does not match grids {shape}")
    if not np.all(np.isfinite(arr)):
        raise GridError("field values must be finite")
    arr = arr.copy()
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class SpaceTimeField:
    """Complex field sampled on xgrid x tgrid; values[i, j] = u(x_i, t_j)."""

    xgrid: AxisGrid
    tgrid: AxisGrid
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(
            self, "values", _readonly_complex(self.values, (self.xgrid.count, self.tgrid.count))
        )


@dataclass(frozen=True)
class SpaceFreqField:
    """Complex field sampled on xgrid x wgrid; values[i, k] = u~(x_i, omega_k)."""

    xgrid: AxisGrid
    wgrid: AxisGrid
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(
            self, "values", _readonly_complex(self.values, (self.xgrid.count, self.wgrid.count))
        )


@dataclass(frozen=True)
class SupportMask:
    """Thresholded support indicator of a space-frequency field.

    mask[i, k] is True exactly when |values[i, k]| > threshold_used * max|values|.
    threshold_used is the relative threshold the mask was built with.
    """

    xgrid: AxisGrid
    wgrid: AxisGrid
    mask: np.ndarray
    threshold_used: float

    def __post_init__(self):
        arr = np.asarray(self.mask, dtype=bool)
        if arr.shape != (self.xgrid.count, self.wgrid.count):
            raise GridError("mask shape does not match grids")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "mask", arr)


def dual_frequency_grid(tgrid: AxisGrid) -> AxisGrid:
    """fftshift-style DFT frequency axis dual to a uniform time axis."""
    n = tgrid.count
    dw = 2 * np.pi / (n * tgrid.step)
    return AxisGrid(origin=-(n // 2) * dw, step=dw, count=n)


def time_fourier(u: SpaceTimeField) -> SpaceFreqField:
    """Forward transform along the time axis (see module docstring for the
    sign convention).

    Output frequency axis is the fftshift-style DFT dual of u.tgrid.  The
    phases use the actual sample times t_j = t0 + j dt, so a nonzero time
    origin is carried correctly.
    """
    tg = u.tgrid
    n = tg.count
    wg = dual_frequency_grid(tg)
    j = np.arange(n)
    # sum_j u_j e^{+i w_k t_j} = e^{+i w_k t0} * N * ifft(u_j e^{-2 pi i (N//2) j / N})[k]
    pre = np.exp(-2j * np.pi * (n // 2) * j / n)
    inner = np.fft.ifft(u.values * pre, axis=1) * n
    post = np.exp(1j * wg.coordinates * tg.origin)
    return SpaceFreqField(u.xgrid, wg, tg.step * inner * post)


def inverse_time_fourier(f: SpaceFreqField, tgrid: AxisGrid | None = None) -> SpaceTimeField:
    """Inverse transform back to the time axis.

    The time origin is not recoverable from the frequency axis alone, so the
    target tgrid may be passed explicitly; it must be reciprocal to f.wgrid
    (same count, dt * dw = 2 pi / N).  Default: origin 0.
    """
    wg = f.wgrid
    n = wg.count
    dt = 2 * np.pi / (n * wg.step)
    if tgrid is None:
        tgrid = AxisGrid(0.0, dt, n)
    if tgrid.count != n:
        raise GridError("time grid count does not match frequency grid")
    if abs(tgrid.step - dt) > _REL_TOL * dt:
        raise GridError("time grid step is not reciprocal to the frequency grid")
    j = np.arange(n)
    k = np.arange(n)
    # u_j = (dw / 2 pi) e^{-i w0 t_j} fft(f_k e^{-i k dw t0})[j]
    pre = np.exp(-1j * k * wg.step * tgrid.origin)
    inner = np.fft.fft(f.values * pre, axis=1)
    post = np.exp(-1j * wg.origin * tgrid.coordinates)
    return SpaceTimeField(f.xgrid, tgrid, (wg.step / (2 * np.pi)) * inner * post)


def _reflection_permutation(wgrid: AxisGrid) -> np.ndarray:
    """Index permutation realizing omega -> -omega on the frequency lattice.

    Two lattice layouts admit a reflection: the true mirror layout with
    origin -(N-1)/2 * step (reflection is index reversal), and the DFT layout
    with origin -floor(N/2) * step, where for even N the single unpaired
    most-negative bin maps to itself, consistent with DFT frequency aliasing.
    """
    n = wgrid.count
    tol = _REL_TOL * wgrid.step
    j = np.arange(n)
    if abs(wgrid.origin + (n - 1) / 2 * wgrid.step) <= tol:
        return n - 1 - j
    if abs(wgrid.origin + (n // 2) * wgrid.step) <= tol:
        return (2 * (n // 2) - j) % n
    raise GridError("frequency grid is not symmetric about zero")


def sharp(f: SpaceFreqField) -> SpaceFreqField:
    """Frequency-reflected conjugate: (sharp f)(x, omega) = conj(f(x, -omega)).

    An isometric involution.  It intertwines with time-domain conjugation:
    sharp(time_fourier(u)) == time_fourier(conj(u)).
    """
    perm = _reflection_permutation(f.wgrid)
    return SpaceFreqField(f.xgrid, f.wgrid, np.conj(f.values[:, perm]))


def support_mask(f: SpaceFreqField, rel_threshold: float = 1e-8) -> SupportMask:
    """Cells whose magnitude exceeds rel_threshold times the global maximum.

    The zero field yields an all-false mask for any admissible threshold.
    """
    if not (0 <= rel_threshold < 1):
        raise ValueError(f"rel_threshold must be in [0, 1), got {rel_threshold}")
    mags = np.abs(f.values)
    gmax = mags.max() if mags.size else 0.0
    return SupportMask(f.xgrid, f.wgrid, mags > rel_threshold * gmax, rel_threshold)


def field_norm(f: SpaceFreqField | SpaceTimeField) -> float:
    """Discrete L2 norm: sqrt(sum |values|^2 * dx * d(second axis))."""
    ax2 = f.wgrid if isinstance(f, SpaceFreqField) else f.tgrid
    w = f.xgrid.step * ax2.step
    return math.sqrt(w * float(np.sum(np.abs(f.values) ** 2)))
