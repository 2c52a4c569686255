"""Brute-force oracles used to validate the solvers independently.

All searches here enumerate coefficient lattices directly against the grid
values; none of them touch the LP or bisection code paths.
"""

import numpy as np


def lattice_constant(values, points=4001, span=None):
    """Best constant fit by scanning a 1-d lattice of candidate constants."""
    values = np.asarray(values, dtype=float)
    if span is None:
        lo, hi = values.min() - 0.5, values.max() + 0.5
    else:
        lo, hi = span
    cand = np.linspace(lo, hi, points)
    devs = np.abs(values[None, :] - cand[:, None]).max(axis=1)
    k = int(devs.argmin())
    return float(cand[k]), float(devs[k]), (hi - lo) / (points - 1)


def _zoom_1d(objective, lo, hi, points, rounds):
    """Lattice scan with zooming; reliable for 1-d unimodal objectives, with
    value error bounded by the final step times the local slope."""
    domain_lo, domain_hi = lo, hi
    best_x = best_val = step = None
    for _ in range(rounds):
        xs = np.linspace(lo, hi, points)
        vals = objective(xs)
        k = int(np.argmin(vals))
        best_x, best_val = float(xs[k]), float(vals[k])
        step = xs[1] - xs[0]
        lo = max(domain_lo, best_x - 2 * step)
        hi = min(domain_hi, best_x + 2 * step)
    return best_x, best_val, float(step)


def lattice_linear(values, nodes, points=401, rounds=3):
    """Best a0 + a1*t fit: lattice over the slope, exact intercept per slope.

    For a fixed slope the optimal intercept is the midrange of the residual,
    so the sweep is one-dimensional and convex; zooming is then reliable and
    the value error is bounded by the final step times max|t|.
    """
    values = np.asarray(values, dtype=float)
    nodes = np.asarray(nodes, dtype=float)
    span = float(np.max(np.abs(values))) + 1.0

    def objective(slopes):
        residual = values[None, :] - slopes[:, None] * nodes[None, :]
        return (residual.max(axis=1) - residual.min(axis=1)) / 2.0

    a1, dev, step = _zoom_1d(objective, -span, span, points, rounds)
    residual = values - a1 * nodes
    a0 = (residual.max() + residual.min()) / 2.0
    return (float(a0), a1), dev, step * float(np.max(np.abs(nodes)))


def lattice_ratio01(values, nodes, delta, points=401, rounds=3):
    """Best a0 / (1 + b1*t) fit with denominator >= delta at every node.

    Lattice over b1 (the partial minimum is quasiconvex there, so the sweep
    is unimodal); for each b1 the best a0 is found exactly by bisecting the
    crossing of the two monotone one-sided deviation envelopes.
    """
    values = np.asarray(values, dtype=float)
    nodes = np.asarray(nodes, dtype=float)
    t_scale = float(np.max(np.abs(nodes)))
    b_max = (1.0 - delta) / t_scale if t_scale > 0 else 1.0
    span = float(np.max(np.abs(values))) + 1.0

    def best_a0_dev(b1s):
        weights = 1.0 / (1.0 + b1s[:, None] * nodes[None, :])  # (B, N), positive

        def envelopes(a0s):
            fit = a0s[:, None] * weights
            upper = (values[None, :] - fit).max(axis=1)
            lower = (fit - values[None, :]).max(axis=1)
            return upper, lower

        lo = np.full(b1s.size, -span * 3)
        hi = np.full(b1s.size, span * 3)
        for _ in range(80):
            mid = (lo + hi) / 2.0
            upper, lower = envelopes(mid)
            go_up = upper > lower  # upper envelope decreases in a0
            lo = np.where(go_up, mid, lo)
            hi = np.where(go_up, hi, mid)
        mid = (lo + hi) / 2.0
        upper, lower = envelopes(mid)
        return np.maximum(upper, lower)

    b1, dev, step = _zoom_1d(best_a0_dev, -b_max, b_max, points, rounds)
    return (None, b1), dev, step


def random_piecewise_target(rng, nodes):
    """A random piecewise-smooth sample vector: two smooth pieces and a jump."""
    nodes = np.asarray(nodes, dtype=float)
    breakpoint = rng.uniform(-0.5, 0.5)

    def piece():
        kind = rng.integers(0, 3)
        c = rng.normal(size=3)
        if kind == 0:
            return lambda t: c[0] + c[1] * t + c[2] * t * t
        if kind == 1:
            w = rng.uniform(0.5, 4.0)
            return lambda t: c[0] * np.sin(w * t + c[1])
        return lambda t: c[0] * np.sqrt(np.abs(t - breakpoint)) + c[1]

    left, right = piece(), piece()
    jump = rng.normal() * 0.5
    return np.where(nodes < breakpoint, left(nodes), right(nodes) + jump)
