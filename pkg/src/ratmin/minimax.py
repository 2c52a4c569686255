"""Best uniform ratio approximation by bisection on the deviation level.

The maximal-deviation objective is quasiconvex in the coefficients, so its
global optimum is bracketed by bisection: a level z is achievable exactly when
a linear feasibility system has a solution, which one LP solve decides. Each
probe LP minimizes the worst constraint violation; a nonpositive optimum
certifies the level feasible. The denominator's leading coefficient is pinned
to +1 (falling back to -1) to remove the common-scaling ambiguity of ratios,
and the denominator is kept above a small positive floor at every node.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import lp_solver
from .basis import (
    BasisSpec,
    constant_capable,
    eval_denominator_basis,
    eval_numerator_basis,
    eval_ratio,
)
from .grid import Grid, IntervalMap
from .poly_minimax import solve_poly_minimax

__all__ = [
    "ApproximationError",
    "ApproximationProblem",
    "BisectionConfig",
    "BisectionLimitError",
    "FeasibilityInstance",
    "InfeasibleProblemError",
    "RationalApproximant",
    "build_feasibility_lp",
    "error_curve",
    "initial_upper_bound",
    "max_deviation",
    "resolve_delta",
    "solve_minimax",
]


class ApproximationError(RuntimeError):
    """Base class for ratio-fit failures."""


class InfeasibleProblemError(ApproximationError):
    """No feasible coefficients even at the starting upper bound.

    Usually means the denominator floor is too large for the basis, or the
    input is degenerate.
    """


class BisectionLimitError(ApproximationError):
    """Iteration cap hit; carries the best-known bracket."""

    def __init__(self, lower: float, upper: float, iterations: int):
        super().__init__(
            f"bisection did not converge in {iterations} iterations "
            f"(bracket [{lower:.6e}, {upper:.6e}])"
        )
        self.lower = lower
        self.upper = upper
        self.iterations = iterations


@dataclass
class BisectionConfig:
    """Controls for the bisection solve.

    ``delta`` is the denominator floor; None scales it off the data as
    1e-6 * max|f| with floor 1e-12. ``epsilon`` is the absolute precision of
    the returned deviation.
    """

    epsilon: float = 1e-10
    delta: float | None = None
    upper_bound_override: float | None = None
    max_iterations: int = 200
    feasibility_tol: float = 1e-9

    def __post_init__(self):
        if self.epsilon <= 0:
            raise ValueError("epsilon must be positive")
        if self.delta is not None and self.delta <= 0:
            raise ValueError("delta must be positive")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be positive")


@dataclass
class ApproximationProblem:
    """A sampled target on a grid plus the basis to approximate it with."""

    grid: Grid
    values: np.ndarray
    basis: BasisSpec

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        if self.values.ndim != 1 or self.values.size != len(self.grid):
            raise ValueError(f"{self.values.size} values for {len(self.grid)} grid nodes")
        if not np.all(np.isfinite(self.values)):
            raise ValueError("values must be finite")
        needed = 10 * (self.basis.n + self.basis.m + 2)
        if len(self.grid) < needed:
            raise ValueError(
                f"grid too coarse: {len(self.grid)} nodes, need at least {needed} "
                f"for degrees ({self.basis.n}, {self.basis.m})"
            )

    @cached_property
    def interval_map(self) -> IntervalMap:
        return IntervalMap(*self.grid.interval)

    @cached_property
    def _tables(self) -> tuple[np.ndarray, np.ndarray]:
        s = self.interval_map.to_unit(self.grid.nodes)
        return (
            eval_numerator_basis(self.basis, s),
            eval_denominator_basis(self.basis, s),
        )


@dataclass
class FeasibilityInstance:
    """One bisection probe: the LP asking whether deviation ``level`` is achievable.

    Variables are (numerator coefficients, free denominator coefficients,
    violation); the denominator's leading coefficient is fixed at
    ``fixed_sign``. Feasible iff the LP optimum is nonpositive.
    """

    level: float
    lp: lp_solver.LpProblem
    n: int
    m: int
    fixed_sign: float
    delta: float

    def coefficients(self, solution: lp_solver.LpSolution) -> tuple[np.ndarray, np.ndarray]:
        vals = solution.values
        numer = vals[: self.n + 1].copy()
        denom = np.concatenate([[self.fixed_sign], vals[self.n + 1 : self.n + 1 + self.m]])
        return numer, denom


@dataclass
class RationalApproximant:
    """A fitted ratio: coefficient vectors, achieved deviation, solve metadata.

    ``A`` and ``B`` refer to the basis evaluated in normalized coordinates;
    ``interval_map`` records the affine map back to the original axis. ``B``'s
    leading coefficient is exactly +1 or -1.
    """

    basis: BasisSpec
    A: np.ndarray
    B: np.ndarray
    z: float
    iterations: int
    interval_map: IntervalMap
    lower_bound: float = 0.0
    delta: float = 0.0

    def evaluate(self, t):
        """Ratio value at original-coordinate points t."""
        return eval_ratio(self.basis, self.A, self.B, self.interval_map.to_unit(t))

    def to_dict(self) -> dict:
        from .basis import family_label

        return {
            "n": self.basis.n,
            "m": self.basis.m,
            "basis": {
                "numerator": family_label(self.basis.numerator),
                "denominator": family_label(self.basis.denominator),
            },
            "map": self.interval_map.to_dict(),
            "A": [float(v) for v in self.A],
            "B": [float(v) for v in self.B],
            "z": float(self.z),
            "iterations": int(self.iterations),
            "delta": float(self.delta),
        }


def resolve_delta(problem: ApproximationProblem, config: BisectionConfig) -> float:
    if config.delta is not None:
        return float(config.delta)
    fmax = float(np.max(np.abs(problem.values)))
    return max(1e-6 * fmax, 1e-12)


def build_feasibility_lp(
    problem: ApproximationProblem,
    level: float,
    delta: float,
    fixed_sign: float = 1.0,
) -> FeasibilityInstance:
    """Assemble the probe LP for deviation ``level``.

    Per node the LP carries the two one-sided deviation rows and the
    denominator-floor row: 3N rows over (n+1) + m + 1 variables, minimizing
    the worst-violation variable alone.
    """
    if level < 0:
        raise ValueError("deviation level must be nonnegative")
    if delta <= 0:
        raise ValueError("delta must be positive")
    if fixed_sign not in (1.0, -1.0, 1, -1):
        raise ValueError("fixed_sign must be +1 or -1")
    fixed_sign = float(fixed_sign)
    f = problem.values
    n, m = problem.basis.n, problem.basis.m
    g, h = problem._tables
    h0 = h[:, 0]
    h_free = h[:, 1:]
    n_nodes = f.size
    ncols = (n + 1) + m + 1
    lhs = np.zeros((3 * n_nodes, ncols))
    rhs = np.empty(3 * n_nodes)

    lo = slice(0, n_nodes)
    hi = slice(n_nodes, 2 * n_nodes)
    pos = slice(2 * n_nodes, 3 * n_nodes)

    # (f - z) * den - num <= violation
    lhs[lo, : n + 1] = -g
    lhs[lo, n + 1 : n + 1 + m] = (f - level)[:, None] * h_free
    lhs[lo, -1] = -1.0
    rhs[lo] = -(f - level) * fixed_sign * h0

    # num - (f + z) * den <= violation
    lhs[hi, : n + 1] = g
    lhs[hi, n + 1 : n + 1 + m] = -(f + level)[:, None] * h_free
    lhs[hi, -1] = -1.0
    rhs[hi] = (f + level) * fixed_sign * h0

    # den >= delta
    lhs[pos, n + 1 : n + 1 + m] = -h_free
    rhs[pos] = fixed_sign * h0 - delta

    objective = np.zeros(ncols)
    objective[-1] = 1.0
    # The violation is floored at zero: the verdict only needs the sign of the
    # optimum, the floor keeps the probe bounded, and a zero-violation optimum
    # certifies the coefficients achieve deviation <= level outright.
    bounds = [(None, None)] * (ncols - 1) + [(0.0, None)]
    lp = lp_solver.LpProblem(objective, lhs, rhs, bounds=bounds)
    return FeasibilityInstance(level=level, lp=lp, n=n, m=m, fixed_sign=fixed_sign, delta=delta)


def initial_upper_bound(problem: ApproximationProblem) -> float:
    """Deviation of the best linear fit in the numerator family alone.

    Always a feasible level for the ratio problem: take the denominator
    constant.
    """
    _, dev = solve_poly_minimax(
        problem.values, problem.grid, problem.basis.n, problem.basis.numerator
    )
    return dev


def max_deviation(problem: ApproximationProblem, numer_coeffs, denom_coeffs) -> float:
    """Worst absolute error of the given coefficients over the grid."""
    g, h = problem._tables
    num = g @ np.asarray(numer_coeffs, dtype=float)
    den = h @ np.asarray(denom_coeffs, dtype=float)
    return float(np.max(np.abs(problem.values - num / den)))


def error_curve(
    problem: ApproximationProblem, approximant: RationalApproximant
) -> tuple[np.ndarray, np.ndarray]:
    """Signed error f(t) - r(t) at every grid node, in original coordinates."""
    ts = problem.grid.nodes
    return ts, problem.values - approximant.evaluate(ts)


def _probe(problem, level, delta, fixed_sign, tol):
    inst = build_feasibility_lp(problem, level, delta, fixed_sign)
    sol = lp_solver.solve(inst.lp)
    feasible = sol.status is lp_solver.LpStatus.OPTIMAL and sol.objective_value <= tol
    return feasible, inst, sol


def solve_minimax(
    problem: ApproximationProblem, config: BisectionConfig | None = None
) -> RationalApproximant:
    """Bisection on the deviation level with one feasibility LP per probe.

    Maintains a bracket whose upper end is always a feasible level; the
    returned coefficients come from the last feasible probe, so the reported
    deviation is actually achieved on the grid.
    """
    cfg = config if config is not None else BisectionConfig()
    f = problem.values
    basis = problem.basis
    delta = resolve_delta(problem, cfg)
    imap = problem.interval_map

    if np.all(f == f[0]):
        shortcut = _constant_shortcut(problem, float(f[0]), delta, imap)
        if shortcut is not None:
            return shortcut

    if cfg.upper_bound_override is not None:
        upper0 = float(cfg.upper_bound_override)
    else:
        upper0 = initial_upper_bound(problem)

    best = None
    for sign in (1.0, -1.0):
        feasible, inst, sol = _probe(problem, upper0, delta, sign, cfg.feasibility_tol)
        if feasible:
            best = inst.coefficients(sol)
            fixed_sign = sign
            break
    if best is None:
        raise InfeasibleProblemError(
            f"no feasible coefficients at deviation {upper0:.6e} for either "
            f"normalization sign; delta={delta:.3e} may be too large or the "
            f"input degenerate"
        )

    low, high = 0.0, upper0
    iterations = 0
    while high - low > cfg.epsilon:
        if iterations >= cfg.max_iterations:
            raise BisectionLimitError(low, high, iterations)
        mid = 0.5 * (high + low)
        feasible, inst, sol = _probe(problem, mid, delta, fixed_sign, cfg.feasibility_tol)
        if feasible:
            high = mid
            best = inst.coefficients(sol)
        else:
            low = mid
        iterations += 1

    numer, denom = best
    achieved = max_deviation(problem, numer, denom)
    return RationalApproximant(
        basis=basis,
        A=numer,
        B=denom,
        z=max(high, achieved),
        iterations=iterations,
        interval_map=imap,
        lower_bound=low,
        delta=delta,
    )


def _constant_shortcut(problem, value, delta, imap):
    """Exact fit for constant inputs, avoiding a zero-width bracket."""
    basis = problem.basis
    if not constant_capable(basis.denominator) or delta > 1.0:
        return None
    if value != 0.0 and not constant_capable(basis.numerator):
        return None
    numer = np.zeros(basis.n + 1)
    numer[0] = value
    denom = np.zeros(basis.m + 1)
    denom[0] = 1.0
    return RationalApproximant(
        basis=basis,
        A=numer,
        B=denom,
        z=0.0,
        iterations=0,
        interval_map=imap,
        lower_bound=0.0,
        delta=delta,
    )
