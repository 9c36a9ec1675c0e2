"""Nonlinearity families, their growth exponents, and algebraic certificates.

A nonlinearity alpha(tau) (tau = |u|^2 >= 0) is *admissible* in spatial
dimension n when w(tau) = tau * alpha(tau) satisfies a polynomial relation

    M(tau, w) = sum_{j=0}^{J} M_j(tau) w^j == 0,   M_J not identically 0,

whose degrees obey deg M_0 > deg M_j + j for 1 <= j <= J, together with the
dimension-dependent growth constraints

    0 < kappa <= 2 / (n - 2)            (n >= 3)
    deg M_j + (kappa + 1) j <= n/(n-2)  (n >= 3, 0 <= j <= J),

kappa being the growth exponent of alpha.  Certificates are synthesized for
the three built-in families; Custom nonlinearities must supply their own.
Exponents and degree checks use exact rational arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from .errors import UnsupportedVariantError

_SAMPLE_TAUS = np.linspace(0.0, 10.0, 64)


@dataclass(frozen=True)
class Poly:
    """Real polynomial, coefficients low to high, canonical (trimmed) form."""

    coeffs: tuple[float, ...]

    def __post_init__(self):
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("coeffs must be trimmed; use poly()")

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int | float:
        """Degree; -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    def __call__(self, tau):
        out = np.zeros_like(np.asarray(tau, dtype=float))
        for c in reversed(self.coeffs):
            out = out * tau + c
        return out

    def shift_up(self, k: int) -> "Poly":
        """Multiply by tau^k."""
        if self.is_zero:
            return self
        return Poly((0.0,) * k + self.coeffs)

    def scale(self, s: float) -> "Poly":
        return poly([s * c for c in self.coeffs])


def poly(coeffs) -> Poly:
    cs = [float(c) for c in coeffs]
    while cs and cs[-1] == 0.0:
        cs.pop()
    return Poly(tuple(cs))


class Nonlinearity:
    """Base class; subclasses are callable on tau >= 0 (scalar or array)."""

    def __call__(self, tau):
        raise NotImplementedError


@dataclass(frozen=True)
class PolynomialAlpha(Nonlinearity):
    """alpha(tau) = polynomial with alpha(0) = 0."""

    p: Poly

    def __post_init__(self):
        if self.p.coeffs and self.p.coeffs[0] != 0.0:
            raise ValueError("polynomial nonlinearity requires alpha(0) = 0")

    def __call__(self, tau):
        return self.p(tau)


@dataclass(frozen=True)
class RootAlpha(Nonlinearity):
    """alpha(tau) = A(tau)^(1/N) for a polynomial A and root order N >= 2.

    For even N, A must be nonnegative on tau >= 0 (checked by sampling);
    for odd N the real root sign(A)|A|^(1/N) is used.
    """

    a: Poly
    order: int

    def __post_init__(self):
        if self.order < 2:
            raise ValueError("root order must be >= 2")
        if self.a.is_zero or self.a.degree < 1:
            raise ValueError("root nonlinearity needs deg A >= 1")
        if self.order % 2 == 0 and np.any(self.a(_SAMPLE_TAUS) < 0):
            raise ValueError("even root order requires A >= 0 on tau >= 0")

    def __call__(self, tau):
        vals = self.a(tau)
        return np.sign(vals) * np.abs(vals) ** (1.0 / self.order)


@dataclass(frozen=True)
class RationalAlpha(Nonlinearity):
    """alpha(tau) = A(tau)/B(tau) with B nonvanishing on tau >= 0."""

    num: Poly
    den: Poly

    def __post_init__(self):
        if self.den.is_zero or self.den.degree < 1:
            raise ValueError("rational nonlinearity needs deg B >= 1")
        dv = self.den(_SAMPLE_TAUS)
        # a sign change between samples implies a zero crossing in between
        if np.any(np.abs(dv) < 1e-12) or np.any(dv[:-1] * dv[1:] < 0):
            raise ValueError("denominator must not vanish on tau >= 0")

    def __call__(self, tau):
        return self.num(tau) / self.den(tau)


@dataclass(frozen=True)
class CustomAlpha(Nonlinearity):
    """User-supplied nonlinearity with a declared growth exponent and,
    optionally, a user-supplied certificate."""

    func: Callable
    declared_kappa: Fraction
    certificate: "AlgebraicCertificate | None" = None

    def __call__(self, tau):
        return self.func(tau)


@dataclass(frozen=True)
class AlgebraicCertificate:
    """The coefficient polynomials M_0 ... M_J of the relation M(tau, w) = 0."""

    m: tuple[Poly, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if len(self.m) < 2:
            raise ValueError("certificate needs at least M_0 and M_1")
        if self.m[-1].is_zero:
            raise ValueError("leading coefficient M_J must not vanish identically")

    @property
    def top_degree(self) -> int:
        return len(self.m) - 1


def growth_exponent(nl: Nonlinearity) -> Fraction:
    """kappa such that |alpha(tau)| <= C (1 + tau)^kappa, as an exact rational.

    For Rational variants the value may be <= 0; contexts that require
    kappa > 0 report that through the Verdict rather than here.
    """
    if isinstance(nl, PolynomialAlpha):
        d = nl.p.degree
        return Fraction(int(d)) if nl.p.coeffs else Fraction(0)
    if isinstance(nl, RootAlpha):
        return Fraction(int(nl.a.degree), nl.order)
    if isinstance(nl, RationalAlpha):
        return Fraction(int(nl.num.degree) - int(nl.den.degree)) if not nl.num.is_zero else Fraction(0)
    if isinstance(nl, CustomAlpha):
        return nl.declared_kappa
    raise UnsupportedVariantError(f"unknown nonlinearity {type(nl).__name__}")


def certificate_synthesize(nl: Nonlinearity) -> AlgebraicCertificate:
    """Build the canonical certificate for w = tau alpha(tau).

    Polynomial alpha:  M_0 = -tau alpha(tau),        M_1 = 1.
    Root alpha:        M_0 = -tau^N A(tau),          M_N = 1 (M_j = 0 between).
    Rational alpha:    M_0 = -tau A(tau),            M_1 = B(tau).
    Custom alphas must carry their own certificate.
    """
    one = poly([1.0])
    zero = poly([])
    if isinstance(nl, PolynomialAlpha):
        return AlgebraicCertificate((nl.p.shift_up(1).scale(-1.0), one))
    if isinstance(nl, RootAlpha):
        ms = [nl.a.shift_up(nl.order).scale(-1.0)]
        ms.extend([zero] * (nl.order - 1))
        ms.append(one)
        return AlgebraicCertificate(tuple(ms))
    if isinstance(nl, RationalAlpha):
        return AlgebraicCertificate((nl.num.shift_up(1).scale(-1.0), nl.den))
    raise UnsupportedVariantError(
        f"no certificate synthesis for {type(nl).__name__}; supply one explicitly"
    )


def certificate_residual(nl: Nonlinearity, cert: AlgebraicCertificate) -> float:
    """Max of |M(tau, w(tau))| over sample points, relative to the term scale."""
    tau = _SAMPLE_TAUS
    w = tau * np.asarray(nl(tau), dtype=float)
    total = np.zeros_like(tau)
    scale = np.ones_like(tau)
    for j, mj in enumerate(cert.m):
        term = mj(tau) * w**j
        total = total + term
        scale = np.maximum(scale, np.abs(term))
    return float(np.max(np.abs(total) / scale))


@dataclass(frozen=True)
class Verdict:
    """Outcome of the admissibility check in dimension n."""

    admissible: bool
    n: int
    kappa: Fraction
    failed: tuple[str, ...]
    variant: str

    def to_doc(self) -> dict:
        return {
            "variant": self.variant,
            "n": self.n,
            "kappa": str(self.kappa),
            "admissible": self.admissible,
            "failed": list(self.failed),
        }


def variant_name(nl: Nonlinearity) -> str:
    for cls, name in (
        (PolynomialAlpha, "polynomial"),
        (RootAlpha, "root"),
        (RationalAlpha, "rational"),
        (CustomAlpha, "custom"),
    ):
        if isinstance(nl, cls):
            return name
    return type(nl).__name__


def admissible(nl: Nonlinearity, n: int) -> Verdict:
    """Check every admissibility condition in dimension n and report which
    failed.  Conditions (in reporting order):

    kappa_positive        kappa > 0
    kappa_growth_bound    kappa <= 2/(n-2)              (n >= 3 only)
    certificate_exists    a certificate is available (synthesized or supplied)
    certificate_degrees   deg M_0 > deg M_j + j for 1 <= j <= J
    dimension_degrees     deg M_j + (kappa+1) j <= n/(n-2) for all j (n >= 3)
    """
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    kappa = growth_exponent(nl)
    failed: list[str] = []
    if kappa <= 0:
        failed.append("kappa_positive")
    if n >= 3 and kappa > Fraction(2, n - 2):
        failed.append("kappa_growth_bound")

    cert = None
    if isinstance(nl, CustomAlpha):
        cert = nl.certificate
    else:
        try:
            cert = certificate_synthesize(nl)
        except UnsupportedVariantError:
            cert = None
    if cert is None:
        failed.append("certificate_exists")
    else:
        d0 = cert.m[0].degree
        for j in range(1, len(cert.m)):
            mj = cert.m[j]
            if mj.is_zero:
                continue
            if not d0 > mj.degree + j:
                failed.append("certificate_degrees")
                break
        if n >= 3:
            bound = Fraction(n, n - 2)
            for j, mj in enumerate(cert.m):
                if mj.is_zero:
                    continue
                if Fraction(int(mj.degree)) + (kappa + 1) * j > bound:
                    failed.append("dimension_degrees")
                    break

    return Verdict(
        admissible=not failed,
        n=n,
        kappa=kappa,
        failed=tuple(failed),
        variant=variant_name(nl),
    )
