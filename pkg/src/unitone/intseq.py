"""Exact integer sequences on the frequency lattice.

An IntSeq is a finitely supported integer-valued sequence: `coeffs[j]` sits at
lattice position `offset + j`.  Arithmetic uses Python integers, which never
overflow, so convolution support endpoints add exactly:

    min_support(conv(a, b)) == min_support(a) + min_support(b)

and likewise for max_support (an integral domain has no zero divisors).
This is the exact ground truth the floating-point support calculus is
cross-validated against.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class IntSeq:
    offset: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.coeffs and (self.coeffs[0] == 0 or self.coeffs[-1] == 0):
            raise ValueError("coeffs must be trimmed; use intseq()")
        if not self.coeffs and self.offset != 0:
            raise ValueError("zero sequence must have offset 0")
        if not all(isinstance(c, int) for c in self.coeffs):
            raise TypeError("coefficients must be ints")

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def min_support(self) -> int | None:
        return None if self.is_zero else self.offset

    @property
    def max_support(self) -> int | None:
        return None if self.is_zero else self.offset + len(self.coeffs) - 1


def intseq(offset: int, coeffs) -> IntSeq:
    """Build an IntSeq, trimming leading/trailing zeros (canonical form)."""
    cs = [int(c) for c in coeffs]
    lo = 0
    while lo < len(cs) and cs[lo] == 0:
        lo += 1
    hi = len(cs)
    while hi > lo and cs[hi - 1] == 0:
        hi -= 1
    if lo == hi:
        return IntSeq(0, ())
    return IntSeq(offset + lo, tuple(cs[lo:hi]))


def conv(a: IntSeq, b: IntSeq) -> IntSeq:
    """Exact convolution: (a conv b)[k] = sum_j a[j] b[k - j]."""
    if a.is_zero or b.is_zero:
        return IntSeq(0, ())
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, ca in enumerate(a.coeffs):
        for j, cb in enumerate(b.coeffs):
            out[i + j] += ca * cb
    return intseq(a.offset + b.offset, out)
