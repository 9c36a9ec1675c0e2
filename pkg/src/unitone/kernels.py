"""Kernel backend selection.

The compiled extension is preferred when it imported cleanly; the numpy
implementation is the fallback.  Set UNITONE_NO_EXT=1 to force the fallback
(used by the benchmark and the backend-equivalence tests).
"""

import os

import numpy as np

from . import _kernels_np

try:
    from . import _kernels as _ext
except ImportError:  # extension not built
    _ext = None

if _ext is not None and not os.environ.get("UNITONE_NO_EXT"):
    _impl = _ext
else:
    _impl = _kernels_np


def backend_name() -> str:
    return "compiled" if _impl is _ext else "numpy"


def _as_c(arr: np.ndarray, dtype) -> np.ndarray:
    # typed memoryviews in the extension need writable C-contiguous buffers;
    # field/profile arrays are deliberately read-only, so copy in that case
    out = np.ascontiguousarray(arr, dtype=dtype)
    if not out.flags.writeable:
        out = out.copy()
    return out


def conv_columns(f: np.ndarray, g: np.ndarray) -> np.ndarray:
    return _impl.conv_columns(_as_c(f, np.complex128), _as_c(g, np.complex128))


def sliding_min(p: np.ndarray, radius: int) -> np.ndarray:
    return _impl.sliding_min(_as_c(p, np.float64), radius)


def sliding_max(p: np.ndarray, radius: int) -> np.ndarray:
    return _impl.sliding_max(_as_c(p, np.float64), radius)
