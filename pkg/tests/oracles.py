"""Independent reference implementations used only by the tests.

Everything here is written directly from the defining formulas, favouring
obviousness over speed (double loops, exhaustive scans), so that agreement
with the package is evidence and not tautology.
"""

import numpy as np


def naive_time_dft(values, tgrid, wgrid):
    """u~[i,k] = dt * sum_j u[i,j] exp(+1i w_k t_j), straight from the sum."""
    nx, nt = values.shape
    out = np.zeros((nx, wgrid.count), dtype=complex)
    for i in range(nx):
        for k in range(wgrid.count):
            w = wgrid.origin + k * wgrid.step
            acc = 0.0 + 0.0j
            for j in range(nt):
                t = tgrid.origin + j * tgrid.step
                acc += values[i, j] * np.exp(1j * w * t)
            out[i, k] = tgrid.step * acc
    return out


def naive_inverse_dft(values, wgrid, tgrid):
    """u[i,j] = (dw / 2 pi) * sum_k f[i,k] exp(-1i w_k t_j)."""
    nx, nw = values.shape
    out = np.zeros((nx, tgrid.count), dtype=complex)
    for i in range(nx):
        for j in range(tgrid.count):
            t = tgrid.origin + j * tgrid.step
            acc = 0.0 + 0.0j
            for k in range(nw):
                w = wgrid.origin + k * wgrid.step
                acc += values[i, k] * np.exp(-1j * w * t)
            out[i, j] = wgrid.step / (2 * np.pi) * acc
    return out


def naive_conv_columns(f, g):
    """Full linear convolution along axis 1, triple loop."""
    nx, nf = f.shape
    _, ng = g.shape
    out = np.zeros((nx, nf + ng - 1), dtype=complex)
    for i in range(nx):
        for a in range(nf):
            for b in range(ng):
                out[i, a + b] += f[i, a] * g[i, b]
    return out


def brute_lower_bound(mask, wgrid):
    """Smallest frequency with mask set, +inf when the column is empty."""
    out = np.full(mask.shape[0], np.inf)
    for i in range(mask.shape[0]):
        for k in range(mask.shape[1]):
            if mask[i, k]:
                out[i] = wgrid.origin + k * wgrid.step
                break
    return out


def brute_upper_bound(mask, wgrid):
    out = np.full(mask.shape[0], -np.inf)
    for i in range(mask.shape[0]):
        for k in range(mask.shape[1] - 1, -1, -1):
            if mask[i, k]:
                out[i] = wgrid.origin + k * wgrid.step
                break
    return out


def brute_window_min(profile, radius):
    n = len(profile)
    out = np.empty(n)
    for i in range(n):
        lo = max(0, i - radius)
        hi = min(n, i + radius + 1)
        out[i] = min(profile[lo:hi])
    return out


def brute_window_max(profile, radius):
    n = len(profile)
    out = np.empty(n)
    for i in range(n):
        lo = max(0, i - radius)
        hi = min(n, i + radius + 1)
        out[i] = max(profile[lo:hi])
    return out


def conv_int_lists(a_offset, a_coeffs, b_offset, b_coeffs):
    """Exact integer sequence convolution via explicit index arithmetic."""
    if not a_coeffs or not b_coeffs:
        return 0, ()
    lo = a_offset + b_offset
    out = [0] * (len(a_coeffs) + len(b_coeffs) - 1)
    for i, av in enumerate(a_coeffs):
        for j, bv in enumerate(b_coeffs):
            out[i + j] += av * bv
    return lo, tuple(out)
