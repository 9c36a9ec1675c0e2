"""Structured test fields for the support-calculus checks.

The randomized family is piecewise-constant in x (blocks of >= min_block
cells, shared between the two fields of a pair so discrete features are never
thinner than a block) with one frequency box per block.  Magnitudes live in
[boundary_floor, 1], so every support-boundary cell carries at least
boundary_floor of the global maximum and thresholding cannot erode supports.
min_block must be >= 2*radius + 1 of the envelope radius the fields will be
checked with: the closing/opening in the support-addition check erases
interior plateaus narrower than the structuring window, so 2-cell blocks
would produce spurious discrepancies even though the per-column law is exact.

The two fixed counterexample fields realize the known failure modes of naive
support bounds: a two-sided step of Dirac lines (a-upper envelope exceeding
b-lower), and a Dirac line plus a single exceptional column (bound profiles
collapsing under envelopes).
"""

from __future__ import annotations

import numpy as np

from .fields import AxisGrid, SpaceFreqField


def random_partition(rng: np.random.Generator, n: int, min_block: int = 3, max_block: int = 6):
    """Split range(n) into contiguous blocks with sizes in [min_block, max_block]."""
    edges = [0]
    while edges[-1] < n:
        size = int(rng.integers(min_block, max_block + 1))
        nxt = edges[-1] + size
        if n - nxt < min_block:
            nxt = n
        edges.append(min(nxt, n))
    return [(edges[i], edges[i + 1]) for i in range(len(edges) - 1)]


def _block_values(rng: np.random.Generator, shape, floor: float) -> np.ndarray:
    mag = rng.uniform(floor, 1.0, shape)
    phase = rng.uniform(0.0, 2 * np.pi, shape)
    return mag * np.exp(1j * phase)


def piecewise_box_pair(
    rng: np.random.Generator,
    nx: int = 32,
    nw: int = 64,
    dx: float = 1.0,
    dw: float = 0.25,
    min_block: int = 3,
    max_block: int = 6,
    empty_prob: float = 0.15,
    boundary_floor: float = 0.1,
) -> tuple[SpaceFreqField, SpaceFreqField]:
    """A pair of random piecewise-box fields on a shared x-partition."""
    xg = AxisGrid(0.0, dx, nx)
    wg = AxisGrid(-(nw // 2) * dw, dw, nw)
    blocks = random_partition(rng, nx, min_block, max_block)

    def one_field() -> SpaceFreqField:
        vals = np.zeros((nx, nw), dtype=np.complex128)
        filled = 0
        for bi, (lo, hi) in enumerate(blocks):
            # keep at least one block occupied per field
            if rng.random() < empty_prob and not (bi == len(blocks) - 1 and filled == 0):
                continue
            k1 = int(rng.integers(0, nw))
            k2 = int(rng.integers(k1, nw))
            vals[lo:hi, k1 : k2 + 1] = _block_values(rng, (hi - lo, k2 - k1 + 1), boundary_floor)
            filled += 1
        return SpaceFreqField(xg, wg, vals)

    return one_field(), one_field()


def step_delta_field() -> SpaceFreqField:
    """Dirac line at omega = -1 for x < 0 and at omega = +1 for x > 0.

    Support bounds: a = b = -1 on the left, +1 on the right.  Around the step
    the upper envelope of a exceeds the lower envelope of b, the canonical
    case where naive bound ordering fails."""
    xg = AxisGrid(-3.75, 0.5, 16)  # no x = 0 column
    wg = AxisGrid(-2.0, 0.5, 9)  # odd, mirror-symmetric; +-1 on the lattice
    vals = np.zeros((16, 9), dtype=np.complex128)
    k_minus = 2  # omega = -1
    k_plus = 6  # omega = +1
    left = xg.coordinates < 0
    vals[left, k_minus] = 1.0
    vals[~left, k_plus] = 1.0
    return SpaceFreqField(xg, wg, vals)


def spike_plus_box_field() -> SpaceFreqField:
    """Dirac line at omega = 0 on every column plus a frequency box [-1, 1]
    on the single column x = 0.

    b equals 1 at x = 0 and 0 elsewhere (a: -1 and 0), so the lower envelope
    of b and the upper envelope of a are both identically 0: envelopes erase
    a single exceptional column."""
    xg = AxisGrid(-4.0, 0.5, 17)  # x = 0 at index 8
    wg = AxisGrid(-2.0, 0.25, 17)  # omega = 0 at index 8, +-1 at 4 and 12
    vals = np.zeros((17, 17), dtype=np.complex128)
    vals[:, 8] = 1.0
    vals[8, 4:13] += 1.0
    return SpaceFreqField(xg, wg, vals)
