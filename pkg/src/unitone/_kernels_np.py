"""NumPy fallback kernels, used when the compiled extension is unavailable."""

import numpy as np


def conv_columns(f: np.ndarray, g: np.ndarray) -> np.ndarray:
    """Row-wise full linear convolution: (nx, nf) x (nx, ng) -> (nx, nf+ng-1)."""
    nx, nf = f.shape
    ng = g.shape[1]
    out = np.empty((nx, nf + ng - 1), dtype=np.complex128)
    for i in range(nx):
        out[i] = np.convolve(f[i], g[i])
    return out


def _windows(p: np.ndarray, radius: int, fill: float) -> np.ndarray:
    padded = np.pad(p, radius, constant_values=fill)
    n = p.shape[0]
    return np.stack([padded[k : k + n] for k in range(2 * radius + 1)])


def sliding_min(p: np.ndarray, radius: int) -> np.ndarray:
    """Windowed minimum with the window clipped at the array ends."""
    return np.min(_windows(p, radius, np.inf), axis=0)


def sliding_max(p: np.ndarray, radius: int) -> np.ndarray:
    """Windowed maximum with the window clipped at the array ends."""
    return np.max(_windows(p, radius, -np.inf), axis=0)
