"""Alternation diagnostics for best uniform approximation error curves.

A fit of degrees (n, m) is certifiably optimal when its error attains near-
maximal magnitude at n+m+2 points with alternating signs (the defect-free
count). Fewer alternations are inconclusive rather than a proof of
suboptimality, because the defect is unknown.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = ["EquioscillationReport", "analyze"]

CERTIFIED = "CertifiedOptimal"
INCONCLUSIVE = "Inconclusive"


@dataclass
class EquioscillationReport:
    """Extreme-deviation points of an error curve and the alternation verdict.

    ``peaks`` holds (t, signed deviation) pairs, increasing in t and
    alternating in sign by construction. ``uniformity`` is the ratio of the
    smallest to the largest peak magnitude (1.0 when fewer than two peaks).
    """

    peaks: list[tuple[float, float]] = field(default_factory=list)
    alternation_count: int = 0
    required_count: int = 0
    uniformity: float = 1.0
    verdict: str = INCONCLUSIVE

    def to_dict(self) -> dict:
        return {
            "peaks": [[float(t), float(e)] for t, e in self.peaks],
            "alternation_count": self.alternation_count,
            "required_count": self.required_count,
            "uniformity": self.uniformity,
            "verdict": self.verdict,
        }


def _extremum_candidates(errors: np.ndarray) -> list[int]:
    """Indices of local extrema of the signed curve, endpoints included.

    Plateaus (runs of exactly equal neighbours) contribute their midpoint.
    """
    count = errors.size
    if count == 1:
        return [0]
    signs = np.sign(np.diff(errors))
    nonzero = np.flatnonzero(signs)
    if nonzero.size == 0:
        # perfectly flat curve: one plateau spanning everything
        return [count // 2]
    candidates = []
    first = nonzero[0]
    # leading plateau [0 .. first] is an endpoint extremum
    candidates.append((0 + first) // 2)
    for a, b in zip(nonzero[:-1], nonzero[1:]):
        if signs[a] != signs[b]:
            # turning point; equal values span indices [a+1 .. b]
            candidates.append((a + 1 + b) // 2)
    last = nonzero[-1]
    candidates.append((last + 1 + count - 1) // 2)
    return candidates


def analyze(
    ts,
    errors,
    n: int,
    m: int,
    z: float,
    peak_tol: float = 0.05,
) -> EquioscillationReport:
    """Find alternating extreme deviations of magnitude >= (1 - peak_tol) * z.

    Consecutive same-sign extrema are collapsed to the one of largest
    magnitude, so the reported peaks form a longest sign-alternating
    subsequence; the verdict certifies optimality when their count reaches
    n + m + 2.
    """
    ts = np.asarray(ts, dtype=float)
    errors = np.asarray(errors, dtype=float)
    if ts.ndim != 1 or ts.size == 0 or ts.shape != errors.shape:
        raise ValueError("error curve must be two matching nonempty vectors")
    if z < 0:
        raise ValueError("deviation bound must be nonnegative")
    if not 0 < peak_tol < 1:
        raise ValueError("peak_tol must lie strictly between 0 and 1")
    required = n + m + 2
    if z == 0 or not np.any(errors):
        return EquioscillationReport(
            peaks=[],
            alternation_count=0,
            required_count=required,
            uniformity=1.0,
            verdict=CERTIFIED,
        )

    threshold = (1.0 - peak_tol) * z
    candidates = [i for i in _extremum_candidates(errors) if abs(errors[i]) >= threshold]

    peaks: list[int] = []
    for i in candidates:
        if peaks and np.sign(errors[i]) == np.sign(errors[peaks[-1]]):
            if abs(errors[i]) > abs(errors[peaks[-1]]):
                peaks[-1] = i
        else:
            peaks.append(i)

    magnitudes = [abs(errors[i]) for i in peaks]
    uniformity = float(min(magnitudes) / max(magnitudes)) if len(peaks) >= 2 else 1.0
    count = len(peaks)
    return EquioscillationReport(
        peaks=[(float(ts[i]), float(errors[i])) for i in peaks],
        alternation_count=count,
        required_count=required,
        uniformity=uniformity,
        verdict=CERTIFIED if count >= required else INCONCLUSIVE,
    )
