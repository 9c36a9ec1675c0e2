"""Solitary-wave profiles (by shooting) and closed-form wave fields.

The profile of a wave u = phi(x) e^{-i omega t} solves

    NLS:   omega phi = -phi'' + alpha(phi^2) phi
    NLKG:  -phi'' + (m^2 - omega^2) phi + alpha(phi^2) phi = 0,

i.e. phi'' = c phi + alpha(phi^2) phi with c = -omega (NLS) or m^2 - omega^2
(NLKG).  A decaying even profile exists only for c > 0; the shooter bisects
on phi(0) with phi'(0) = 0, following the separatrix until the amplitude is
negligible and attaching the linearized exponential tail beyond that.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp

from .errors import NoSolitaryWaveError
from .evolve import ModelSpec, wavenumbers
from .fields import AxisGrid, SpaceTimeField

_TAIL_REL = 1e-6  # hand off to the exponential tail at this fraction of phi(0)


@dataclass(frozen=True)
class SolitaryWaveProfile:
    omega: float
    xgrid: AxisGrid
    phi: np.ndarray
    residual_norm: float


def _restoring_coefficient(model: ModelSpec, omega: float) -> float:
    if model.kind == "nls":
        return -omega
    return model.m**2 - omega**2


def _classify(alpha, c, s, x_max, dense=False):
    """Integrate from phi(0)=s.  Returns (tag, solution or None); tag is
    'cross' (phi hit zero), 'turn' (phi' turned positive), or 'decay'."""
    accel0 = c * s + float(alpha(s**2)) * s
    if accel0 >= 0:
        return "turn", None
    x0 = 1e-8
    y0 = [s + 0.5 * accel0 * x0**2, accel0 * x0]

    def rhs(x, y):
        return [y[1], c * y[0] + float(alpha(y[0] ** 2)) * y[0]]

    def ev_cross(x, y):
        return y[0]

    ev_cross.terminal = True
    ev_cross.direction = -1

    def ev_turn(x, y):
        return y[1]

    ev_turn.terminal = True
    ev_turn.direction = 1

    def ev_tail(x, y):
        return y[0] - _TAIL_REL * s

    ev_tail.terminal = True
    ev_tail.direction = -1

    events = [ev_cross, ev_turn] + ([ev_tail] if dense else [])
    sol = solve_ivp(
        rhs,
        (x0, x_max),
        y0,
        events=events,
        rtol=1e-12,
        atol=1e-14 * s,
        dense_output=dense,
        max_step=x_max / 16,
    )
    if sol.t_events[0].size:
        return "cross", sol
    if sol.t_events[1].size:
        return "turn", sol
    return "decay", sol


def solitary_profile(
    model: ModelSpec, omega: float, guess_amplitude: float = 1.0
) -> SolitaryWaveProfile:
    """Shoot for the even, positive, decaying profile at frequency omega.

    Raises NoSolitaryWaveError when the linearization does not decay
    (c <= 0, e.g. NLKG with |omega| >= m) or when no bracket exists (e.g. a
    defocusing nonlinearity).
    """
    alpha = model.nonlinearity
    c = _restoring_coefficient(model, omega)
    if c <= 0:
        raise NoSolitaryWaveError(
            f"no decaying profile: restoring coefficient {c:g} is not positive"
        )
    lam = math.sqrt(c)
    half_box = model.xgrid.length / 2
    x_max = min(half_box, 40.0 / lam)

    # bracket: small amplitudes turn, solitary amplitude lies below a crossing
    s_hi = None
    s_lo = None
    s = guess_amplitude
    for _ in range(60):
        tag, _sol = _classify(alpha, c, s, x_max)
        if tag == "cross":
            s_hi = s
            break
        s_lo = s
        s *= 2.0
    if s_hi is None:
        raise NoSolitaryWaveError("no crossing bracket found (defocusing nonlinearity?)")
    if s_lo is None:
        s = guess_amplitude / 2.0
        for _ in range(60):
            tag, _sol = _classify(alpha, c, s, x_max)
            if tag != "cross":
                s_lo = s
                break
            s_hi = s
            s /= 2.0
        if s_lo is None:
            raise NoSolitaryWaveError("no turning bracket found")

    for _ in range(200):
        if (s_hi - s_lo) <= 1e-15 * s_hi:
            break
        mid = 0.5 * (s_lo + s_hi)
        tag, _sol = _classify(alpha, c, mid, x_max)
        if tag == "cross":
            s_hi = mid
        elif tag == "turn":
            s_lo = mid
        else:  # stayed on the separatrix to x_max
            s_lo = s_hi = mid
            break
    s_star = 0.5 * (s_lo + s_hi)

    tag, sol = _classify(alpha, c, s_star, x_max, dense=True)
    if sol is None:
        raise NoSolitaryWaveError("degenerate profile at the bracket midpoint")
    x_hand = sol.t[-1]
    phi_hand = max(float(sol.y[0, -1]), 0.0)

    def eval_profile(xa: np.ndarray) -> np.ndarray:
        xa = np.abs(xa)
        out = np.empty_like(xa)
        inside = xa <= x_hand
        out[inside] = sol.sol(xa[inside])[0]
        out[~inside] = phi_hand * np.exp(-lam * (xa[~inside] - x_hand))
        return out

    phi = eval_profile(model.xgrid.coordinates)
    k2 = wavenumbers(model.xgrid) ** 2
    phi_xx = np.fft.ifft(-k2 * np.fft.fft(phi)).real
    resid = phi_xx - c * phi - np.asarray(alpha(phi**2), dtype=float) * phi
    residual_norm = math.sqrt(float(np.sum(resid**2)) * model.xgrid.step)
    return SolitaryWaveProfile(omega, model.xgrid, phi, residual_norm)


def breather_field(omega: float, xgrid: AxisGrid, tgrid: AxisGrid) -> SpaceTimeField:
    """Sine-Gordon breather sampled on a space-time grid:

        u = 4 arctan( sqrt(1-w^2) cos(w t) / (w cosh(sqrt(1-w^2) x)) ),

    real-valued, periodic in t with period 2 pi / w; needs 0 < |w| < 1.
    """
    if not 0 < abs(omega) < 1:
        raise ValueError(f"breather needs 0 < |omega| < 1, got {omega}")
    s = math.sqrt(1 - omega**2)
    x = xgrid.coordinates[:, None]
    t = tgrid.coordinates[None, :]
    vals = 4 * np.arctan(s * np.cos(omega * t) / (omega * np.cosh(s * x)))
    return SpaceTimeField(xgrid, tgrid, vals)


def akhmediev_field(xgrid: AxisGrid, tgrid: AxisGrid) -> SpaceTimeField:
    """Closed-form breather on a plane-wave background:

        u = (cos x + i sqrt(2) sinh t) / (sqrt(2) cosh t - cos x) * e^{it} / sqrt(2),

    which solves i u_t + u_xx + 2 |u|^2 u = 0 exactly (hand check at the
    origin: without the 1/sqrt(2) amplitude factor the residual is 7 + 5
    sqrt(2); with it, zero).  The background is the plane wave e^{it}/sqrt(2)
    and the denominator never vanishes (sqrt(2) cosh t >= sqrt(2) > 1 >=
    cos x)."""
    r2 = math.sqrt(2.0)
    x = xgrid.coordinates[:, None]
    t = tgrid.coordinates[None, :]
    vals = (np.cos(x) + 1j * r2 * np.sinh(t)) / (r2 * np.cosh(t) - np.cos(x)) * np.exp(1j * t) / r2
    return SpaceTimeField(xgrid, tgrid, vals)
