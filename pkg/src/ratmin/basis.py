"""Basis families whose linear combinations form numerators and denominators.

A family only has to provide ``values(t, count)`` returning the first
``count`` basis functions evaluated at ``t`` (vectorized over arrays), so
custom families can be plugged into the library through the same contract.
The denominator is never sine-modulated: modulating the whole ratio by a sine
is algebraically the same as modulating the numerator alone, and it keeps the
denominator-positivity constraint meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "BasisSpec",
    "ChebyshevT",
    "EvaluationError",
    "Monomial",
    "SineModulatedMonomial",
    "eval_denominator_basis",
    "eval_numerator_basis",
    "eval_ratio",
    "family_label",
]


class EvaluationError(ValueError):
    """A ratio could not be evaluated (zero denominator)."""


def _as_points(t):
    arr = np.asarray(t, dtype=float)
    if arr.ndim == 0:
        return arr.reshape(1), True
    if arr.ndim != 1:
        raise ValueError("evaluation points must be a scalar or 1-d array")
    return arr, False


def _monomial_block(points: np.ndarray, count: int) -> np.ndarray:
    return points[:, None] ** np.arange(count)


@dataclass(frozen=True)
class Monomial:
    """1, t, t^2, ..., the default family."""

    def values(self, t, count: int) -> np.ndarray:
        points, scalar = _as_points(t)
        out = _monomial_block(points, count)
        return out[0] if scalar else out


@dataclass(frozen=True)
class ChebyshevT:
    """Chebyshev polynomials of the first kind, via the three-term recurrence.

    Better conditioned than raw monomials at higher degrees; values on
    [-1, 1] never exceed 1 in magnitude.
    """

    def values(self, t, count: int) -> np.ndarray:
        points, scalar = _as_points(t)
        cols = [np.ones_like(points)]
        if count > 1:
            cols.append(points.copy())
        for _ in range(2, count):
            cols.append(2.0 * points * cols[-1] - cols[-2])
        out = np.stack(cols[:count], axis=1)
        return out[0] if scalar else out


@dataclass(frozen=True)
class SineModulatedMonomial:
    """Monomials multiplied by sin(omega*t + tau) with fixed omega and tau.

    Used as the numerator family of the amplitude-modulated sine model; omega
    is in radians per unit of *normalized* time.
    """

    omega: float
    tau: float

    def values(self, t, count: int) -> np.ndarray:
        points, scalar = _as_points(t)
        out = _monomial_block(points, count) * np.sin(self.omega * points + self.tau)[:, None]
        return out[0] if scalar else out


def family_label(family) -> str:
    if isinstance(family, Monomial):
        return "monomial"
    if isinstance(family, ChebyshevT):
        return "chebyshev"
    if isinstance(family, SineModulatedMonomial):
        return f"sine-monomial(omega={family.omega:g}, tau={family.tau:g})"
    return type(family).__name__


def constant_capable(family) -> bool:
    """True when the family's first function is identically one."""
    return isinstance(family, (Monomial, ChebyshevT))


@dataclass(frozen=True)
class BasisSpec:
    """Numerator family of degree n and denominator family of degree m."""

    numerator: object
    denominator: object
    n: int
    m: int

    def __post_init__(self):
        if self.n < 0 or self.m < 0:
            raise ValueError("degrees must be nonnegative")
        if isinstance(self.denominator, SineModulatedMonomial):
            raise ValueError("the denominator family cannot be sine-modulated")


def eval_numerator_basis(spec: BasisSpec, t) -> np.ndarray:
    """The n+1 numerator basis functions at t."""
    return spec.numerator.values(t, spec.n + 1)


def eval_denominator_basis(spec: BasisSpec, t) -> np.ndarray:
    """The m+1 denominator basis functions at t."""
    return spec.denominator.values(t, spec.m + 1)


def eval_ratio(spec: BasisSpec, numer_coeffs, denom_coeffs, t):
    """(A . G(t)) / (B . H(t)); invariant under rescaling both coefficient sets."""
    a = np.asarray(numer_coeffs, dtype=float)
    b = np.asarray(denom_coeffs, dtype=float)
    if a.shape != (spec.n + 1,):
        raise ValueError(f"expected {spec.n + 1} numerator coefficients, got {a.shape}")
    if b.shape != (spec.m + 1,):
        raise ValueError(f"expected {spec.m + 1} denominator coefficients, got {b.shape}")
    num = eval_numerator_basis(spec, t) @ a
    den = eval_denominator_basis(spec, t) @ b
    if np.any(np.asarray(den) == 0.0):
        raise EvaluationError("denominator evaluates to zero")
    return num / den
