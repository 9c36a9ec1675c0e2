"""Shooting profiles against closed forms; closed-form fields against their PDEs.

Known profiles of phi'' = c phi + alpha(phi^2) phi:
  alpha = -2 tau,  c = 1:  phi = sech(x)
  alpha = -tau^2,  c = 1:  phi = 3^{1/4} sech^{1/2}(2x)
"""

import math

import numpy as np
import pytest

from unitone import (
    AxisGrid,
    ModelSpec,
    NoSolitaryWaveError,
    PolynomialAlpha,
    akhmediev_field,
    breather_field,
    poly,
    solitary_profile,
    wavenumbers,
)

CUBIC = PolynomialAlpha(poly([0, -2]))
QUINTIC = PolynomialAlpha(poly([0, 0, -1]))
XG = AxisGrid(-20.0, 40.0 / 512, 512)


def make_model(kind="nls", alpha=CUBIC, m=1.0):
    return ModelSpec(kind, alpha, XG, 0.01, 1.0, m=m)


def test_cubic_profile_is_sech():
    prof = solitary_profile(make_model(), omega=-1.0)
    exact = 1 / np.cosh(XG.coordinates)
    assert np.max(np.abs(prof.phi - exact)) < 1e-6
    assert prof.residual_norm < 1e-6


def test_quintic_profile_closed_form():
    prof = solitary_profile(make_model(alpha=QUINTIC), omega=-1.0)
    exact = 3**0.25 / np.sqrt(np.cosh(2 * XG.coordinates))
    assert np.max(np.abs(prof.phi - exact)) < 1e-6
    assert prof.residual_norm < 1e-6


def test_nlkg_profile_closed_form():
    # c = m^2 - omega^2 = 0.36: phi = 0.6 sech(0.6 x); the box is widened so
    # the slower e^{-0.6|x|} tail is negligible at the edge
    grid = AxisGrid(-30.0, 60.0 / 768, 768)
    model = ModelSpec("nlkg", CUBIC, grid, 0.01, 1.0, m=1.0)
    prof = solitary_profile(model, omega=0.8)
    exact = 0.6 / np.cosh(0.6 * grid.coordinates)
    assert np.max(np.abs(prof.phi - exact)) < 1e-6


def test_profile_even_positive_decaying():
    prof = solitary_profile(make_model(), omega=-1.0)
    phi = prof.phi
    assert np.all(phi > 0)
    # x_j = -20 + j dx, so the mirror of index j >= 1 is index 512 - j
    assert np.allclose(phi[1:], phi[1:][::-1], atol=1e-9)
    assert phi[0] < 1e-6 * phi.max()


def test_bad_guess_still_converges():
    prof = solitary_profile(make_model(), omega=-1.0, guess_amplitude=100.0)
    assert np.max(np.abs(prof.phi - 1 / np.cosh(XG.coordinates))) < 1e-6


def test_nonpositive_restoring_rejected():
    with pytest.raises(NoSolitaryWaveError):
        solitary_profile(make_model(), omega=0.0)
    with pytest.raises(NoSolitaryWaveError):
        solitary_profile(make_model(), omega=1.0)
    with pytest.raises(NoSolitaryWaveError):
        solitary_profile(make_model(kind="nlkg", m=1.0), omega=1.0)
    with pytest.raises(NoSolitaryWaveError):
        solitary_profile(make_model(kind="nlkg", m=1.0), omega=-1.2)


def test_defocusing_has_no_profile():
    defoc = PolynomialAlpha(poly([0, 2]))
    with pytest.raises(NoSolitaryWaveError):
        solitary_profile(make_model(alpha=defoc), omega=-1.0)


# -- breather ---------------------------------------------------------------------


def test_breather_needs_subunit_frequency():
    xg = AxisGrid(-5.0, 0.5, 21)
    tg = AxisGrid(0.0, 0.1, 5)
    for bad in (0.0, 1.0, -1.0, 1.5):
        with pytest.raises(ValueError):
            breather_field(bad, xg, tg)


def test_breather_values_and_symmetries():
    w = 0.8
    xg = AxisGrid(-16.0, 0.25, 129)
    tg = AxisGrid(0.0, 0.37, 40)
    f = breather_field(w, xg, tg)
    assert np.allclose(f.values.imag, 0)
    # t = 0, x = 0 by hand: 4 atan(sqrt(1-w^2)/w)
    assert f.values[64, 0] == pytest.approx(4 * math.atan(math.sqrt(1 - w**2) / w))
    # anti-periodic: u(t + pi/w) = -u(t)
    tg_shift = AxisGrid(math.pi / w, 0.37, 40)
    g = breather_field(w, xg, tg_shift)
    assert np.allclose(g.values, -f.values, atol=1e-12)
    # even in x (grid is symmetric about x = 0), localized: 4(s/w) sech(16 s)
    assert np.allclose(f.values, f.values[::-1, :], atol=1e-12)
    assert np.max(np.abs(f.values[0, :])) < 1e-3


def test_breather_satisfies_sine_gordon():
    # u_tt - u_xx + sin u = 0, checked with 2nd-order stencils in x and t
    w, h = 0.6, 1e-3
    xg = AxisGrid(-4.0, h, 8001)
    resid_sup = 0.0
    for t0 in (0.0, 0.7, 2.1):
        f = breather_field(w, xg, AxisGrid(t0 - h, h, 3))
        cols = [f.values[:, j].real for j in range(3)]
        u_tt = (cols[0] - 2 * cols[1] + cols[2]) / h**2
        u_xx = (cols[1][:-2] - 2 * cols[1][1:-1] + cols[1][2:]) / h**2
        resid = u_tt[1:-1] - u_xx + np.sin(cols[1][1:-1])
        resid_sup = max(resid_sup, float(np.max(np.abs(resid))))
    assert resid_sup < 1e-4


# -- plane-wave background breather -------------------------------------------------


def akhmediev_residual(dt):
    # i u_t + u_xx + 2|u|^2 u, spectral in x (2 pi periodic), centered in t
    xg = AxisGrid(-math.pi, 2 * math.pi / 64, 64)
    k2 = wavenumbers(xg) ** 2
    out = 0.0
    for t0 in (-0.8, 0.0, 0.5):
        f = akhmediev_field(xg, AxisGrid(t0 - dt, dt, 3))
        um, u0, up = f.values[:, 0], f.values[:, 1], f.values[:, 2]
        u_t = (up - um) / (2 * dt)
        u_xx = np.fft.ifft(-k2 * np.fft.fft(u0))
        resid = 1j * u_t + u_xx + 2 * np.abs(u0) ** 2 * u0
        out = max(out, float(np.max(np.abs(resid))))
    return out


def test_akhmediev_solves_focusing_cubic():
    r1 = akhmediev_residual(1e-2)
    r2 = akhmediev_residual(5e-3)
    assert r1 < 1e-3
    slope = math.log2(r1 / r2)
    assert slope >= 1.9


def test_akhmediev_background_and_peak():
    xg = AxisGrid(-math.pi, 2 * math.pi / 64, 64)
    far = akhmediev_field(xg, AxisGrid(18.0, 1.0, 2)).values[:, 0]
    # far from the event the field returns to the plane-wave background
    assert np.allclose(np.abs(far), 1 / math.sqrt(2), atol=1e-6)
    peak = akhmediev_field(AxisGrid(0.0, 1.0, 2), AxisGrid(0.0, 1.0, 2)).values[0, 0]
    # amplification over the background is 1 + sqrt 2
    assert abs(peak) == pytest.approx((1 + math.sqrt(2)) / math.sqrt(2))
