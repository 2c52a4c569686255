"""Dense two-phase simplex for the small inequality-form LPs built by the solvers.

Problems arrive as ``min c.x  s.t.  A x <= b,  lower <= x <= upper`` where any
bound may be infinite. Free variables are handled through bound bookkeeping (a
free nonbasic variable rests at zero and may enter the basis in either
direction); they are never split into differences of nonnegative parts, so the
column count stays at the caller's variable count.

The tableau is held in condensed (Tucker) form: only the columns of the
currently nonbasic variables are stored and updated, which keeps each pivot
cheap on the tall, thin problems produced by the approximation code. Slack
variables form the starting basis. Phase one adds a single artificial variable
covering every out-of-bounds basic row and minimizes it (the same mechanism
repairs the small drift the relaxed ratio test can accumulate); phase two runs
the bounded-variable primal simplex on the real objective. Entering columns
are priced by greatest actual improvement with a Harris two-pass ratio test
until the iteration count passes the anti-cycling threshold, after which
Bland's rule takes over. Problems with many rows are solved through row
activation: a strided subset first, then every violated row joins until the
subset optimum is feasible (hence optimal) for the whole system. All selection
rules are deterministic, so the same input always produces bit-identical
output.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

__all__ = [
    "LpProblem",
    "LpSolution",
    "LpStatus",
    "SimplexConfig",
    "SolverFailure",
    "solve",
]


class SolverFailure(RuntimeError):
    """The simplex could not certify any answer (tiny pivots, iteration cap)."""


class LpStatus(Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class SimplexConfig:
    """Numerical knobs; the defaults suit well-scaled problems."""

    feasibility_tol: float = 1e-9
    pivot_tol: float = 1e-12
    max_iterations: int | None = None  # None: 50*(rows+cols) + 200
    bland_after: int | None = None     # None: 5*(rows+cols)


class LpProblem:
    """min c.x subject to rows A x <= b and per-variable bounds.

    ">=" rows may be supplied via ``relations``; they are negated into "<="
    form at construction. ``bounds`` entries are (lower, upper) pairs with
    None for an infinite end; variables default to free.
    """

    def __init__(self, objective, lhs, rhs, relations=None, bounds=None):
        c = np.asarray(objective, dtype=float)
        if c.ndim != 1 or c.size == 0:
            raise ValueError("objective must be a nonempty 1-d vector")
        A = np.asarray(lhs, dtype=float)
        if A.size == 0:
            A = np.zeros((0, c.size))
        if A.ndim != 2 or A.shape[1] != c.size:
            raise ValueError(
                f"constraint matrix shape {A.shape} does not match {c.size} variables"
            )
        b = np.asarray(rhs, dtype=float).reshape(-1)
        if b.size != A.shape[0]:
            raise ValueError(f"{b.size} right-hand sides for {A.shape[0]} rows")
        if relations is not None:
            rel = list(relations)
            if len(rel) != A.shape[0]:
                raise ValueError(f"{len(rel)} relations for {A.shape[0]} rows")
            A = A.copy()
            b = b.copy()
            for i, r in enumerate(rel):
                if r == "<=":
                    continue
                if r == ">=":
                    A[i] = -A[i]
                    b[i] = -b[i]
                else:
                    raise ValueError(f"unsupported relation {r!r}")
        lower = np.full(c.size, -np.inf)
        upper = np.full(c.size, np.inf)
        if bounds is not None:
            pairs = list(bounds)
            if len(pairs) != c.size:
                raise ValueError(f"{len(pairs)} bound pairs for {c.size} variables")
            for j, (lo, hi) in enumerate(pairs):
                lower[j] = -np.inf if lo is None else float(lo)
                upper[j] = np.inf if hi is None else float(hi)
            if np.any(lower > upper):
                raise ValueError("empty variable bound interval")
        for name, arr in (("objective", c), ("constraint matrix", A), ("right-hand side", b)):
            if not np.all(np.isfinite(arr)):
                raise ValueError(f"{name} contains non-finite entries")
        self.objective = c
        self.lhs = A
        self.rhs = b
        self.lower = lower
        self.upper = upper

    @property
    def n_variables(self) -> int:
        return self.objective.size

    @property
    def n_constraints(self) -> int:
        return self.rhs.size

    def dump(self) -> str:
        """Plain-text rendering of the problem for inspection."""
        lines = ["minimize  " + "  ".join(f"{v:+.6g}" for v in self.objective)]
        lines.append("subject to")
        for row, rhs in zip(self.lhs, self.rhs):
            lines.append("  " + "  ".join(f"{v:+.6g}" for v in row) + f"  <=  {rhs:.6g}")
        lines.append("bounds")
        for j, (lo, hi) in enumerate(zip(self.lower, self.upper)):
            lines.append(f"  x{j} in [{lo:g}, {hi:g}]")
        return "\n".join(lines)


@dataclass
class LpSolution:
    status: LpStatus
    values: np.ndarray | None
    objective_value: float
    duals: np.ndarray | None = None
    reduced_costs: np.ndarray | None = None
    iterations: int = 0
    infeasibility: float | None = None


_AT_LOWER, _AT_UPPER, _FREE, _BASIC = 0, 1, 2, 3


class _Simplex:
    """Mutable solver state: condensed tableau plus variable bookkeeping."""

    def __init__(self, problem: LpProblem, cfg: SimplexConfig):
        A = problem.lhs
        self.A = A
        self.b = problem.rhs
        self.M, self.n = A.shape
        self.LO = np.concatenate([problem.lower, np.zeros(self.M)])
        self.HI = np.concatenate([problem.upper, np.full(self.M, np.inf)])
        status = np.empty(self.n + self.M, dtype=np.int8)
        for j in range(self.n):
            if self.LO[j] > -np.inf:
                status[j] = _AT_LOWER
            elif self.HI[j] < np.inf:
                status[j] = _AT_UPPER
            else:
                status[j] = _FREE
        status[self.n:] = _BASIC
        self.status = status
        self.basis = np.arange(self.n, self.n + self.M)
        self.nonbasic = np.arange(self.n)
        self.T = A.astype(float, copy=True)
        self.beta = problem.rhs.astype(float, copy=True)
        self.cfg = cfg
        self.iters = 0
        self.max_iter = cfg.max_iterations if cfg.max_iterations is not None else 50 * (self.M + self.n) + 200
        self.bland_at = cfg.bland_after if cfg.bland_after is not None else 5 * (self.M + self.n)

    def nb_values(self) -> np.ndarray:
        v = np.zeros(self.nonbasic.size)
        st = self.status[self.nonbasic]
        at_lo = st == _AT_LOWER
        at_hi = st == _AT_UPPER
        v[at_lo] = self.LO[self.nonbasic[at_lo]]
        v[at_hi] = self.HI[self.nonbasic[at_hi]]
        return v

    def point(self) -> tuple[np.ndarray, np.ndarray]:
        xn = self.nb_values()
        return xn, self.beta - self.T @ xn

    def value_of(self, var: int, xb: np.ndarray) -> float:
        if self.status[var] == _BASIC:
            row = int(np.nonzero(self.basis == var)[0][0])
            return float(xb[row])
        if self.status[var] == _AT_LOWER:
            return float(self.LO[var])
        if self.status[var] == _AT_UPPER:
            return float(self.HI[var])
        return 0.0

    def _entering_bland(self, d: np.ndarray) -> int | None:
        tol = self.cfg.feasibility_tol
        st = self.status[self.nonbasic]
        fixed = self.LO[self.nonbasic] == self.HI[self.nonbasic]
        eligible = (
            ((st == _AT_LOWER) & (d < -tol))
            | ((st == _AT_UPPER) & (d > tol))
            | ((st == _FREE) & (np.abs(d) > tol))
        ) & ~fixed
        idx = np.flatnonzero(eligible)
        if idx.size == 0:
            return None
        return int(idx[np.argmin(self.nonbasic[idx])])

    def _pivot(self, row: int, col: int, leaves_to_lower: bool) -> None:
        piv = self.T[row, col]
        colq = self.T[:, col].copy()
        self.T[:, col] = 0.0
        self.T[row, col] = 1.0
        inv = 1.0 / piv
        self.T[row] *= inv
        self.beta[row] *= inv
        colq[row] = 0.0
        self.T -= np.outer(colq, self.T[row])
        self.beta -= colq * self.beta[row]
        leaving = self.basis[row]
        entering = self.nonbasic[col]
        self.basis[row] = entering
        self.nonbasic[col] = leaving
        self.status[entering] = _BASIC
        self.status[leaving] = _AT_LOWER if leaves_to_lower else _AT_UPPER

    def _ratio_column(self, xb: np.ndarray, col: int, direction: float) -> np.ndarray:
        cfg = self.cfg
        w = direction * self.T[:, col]
        lob = self.LO[self.basis]
        hib = self.HI[self.basis]
        ratios = np.full(self.M, np.inf)
        pos = w > cfg.pivot_tol
        neg = w < -cfg.pivot_tol
        ratios[pos] = (xb[pos] - lob[pos]) / w[pos]
        ratios[neg] = (xb[neg] - hib[neg]) / w[neg]
        np.nan_to_num(ratios, copy=False, nan=np.inf, posinf=np.inf)
        np.maximum(ratios, 0.0, out=ratios)
        return ratios

    def run_phase(self, cost: np.ndarray, watch: int | None = None) -> str:
        """Iterate until ``cost`` is optimal; returns 'optimal' or 'unbounded'.

        Pricing: greatest actual improvement across the (few) eligible
        columns, with exact per-column ratio tests; after the anti-cycling
        threshold, Bland's smallest-index rule. ``watch`` enables the
        phase-one early exit: stop as soon as that variable's value is within
        feasibility tolerance of zero.
        """
        cfg = self.cfg
        while True:
            if self.iters > self.max_iter:
                raise SolverFailure(f"simplex iteration limit ({self.max_iter}) exceeded")
            xn, xb = self.point()
            if watch is not None and self.value_of(watch, xb) <= cfg.feasibility_tol:
                return "optimal"
            d = cost[self.nonbasic] - self.T.T @ cost[self.basis]
            bland = self.iters >= self.bland_at
            if bland:
                col = self._entering_bland(d)
                if col is None:
                    return "optimal"
                var = int(self.nonbasic[col])
                st = self.status[var]
                if st == _AT_LOWER:
                    direction = 1.0
                elif st == _AT_UPPER:
                    direction = -1.0
                else:
                    direction = 1.0 if d[col] < 0.0 else -1.0
                ratios = self._ratio_column(xb, col, direction)
                t_basic = ratios.min() if self.M else np.inf
                own = self.HI[var] - self.LO[var]
            else:
                st = self.status[self.nonbasic]
                fixed = self.LO[self.nonbasic] == self.HI[self.nonbasic]
                eligible = (
                    ((st == _AT_LOWER) & (d < -cfg.feasibility_tol))
                    | ((st == _AT_UPPER) & (d > cfg.feasibility_tol))
                    | ((st == _FREE) & (np.abs(d) > cfg.feasibility_tol))
                ) & ~fixed
                idx = np.flatnonzero(eligible)
                if idx.size == 0:
                    return "optimal"
                dirs = np.where(
                    st[idx] == _AT_LOWER,
                    1.0,
                    np.where(st[idx] == _AT_UPPER, -1.0, np.where(d[idx] < 0.0, 1.0, -1.0)),
                )
                w_all = self.T[:, idx] * dirs
                lob = self.LO[self.basis][:, None]
                hib = self.HI[self.basis][:, None]
                xbc = xb[:, None]
                pos = w_all > cfg.pivot_tol
                neg = w_all < -cfg.pivot_tol
                # Harris two-pass test, vectorized per candidate column: the
                # bound-relaxed limit first, then the largest admissible pivot
                # among rows whose plain ratio fits under it.
                relaxed = np.full(w_all.shape, np.inf)
                np.divide(xbc - lob + cfg.feasibility_tol, w_all, out=relaxed, where=pos)
                tmp = np.full(w_all.shape, np.inf)
                np.divide(xbc - hib - cfg.feasibility_tol, w_all, out=tmp, where=neg)
                relaxed = np.where(neg, tmp, relaxed)
                np.nan_to_num(relaxed, copy=False, nan=np.inf, posinf=np.inf, neginf=0.0)
                np.maximum(relaxed, 0.0, out=relaxed)
                t_max = relaxed.min(axis=0) if self.M else np.full(idx.size, np.inf)

                plain = np.full(w_all.shape, np.inf)
                np.divide(xbc - lob, w_all, out=plain, where=pos)
                tmp = np.full(w_all.shape, np.inf)
                np.divide(xbc - hib, w_all, out=tmp, where=neg)
                plain = np.where(neg, tmp, plain)
                np.nan_to_num(plain, copy=False, nan=np.inf, posinf=np.inf, neginf=0.0)
                np.maximum(plain, 0.0, out=plain)

                if self.M:
                    admissible = (pos | neg) & (plain <= t_max[None, :])
                    pivot_size = np.where(admissible, np.abs(w_all), -1.0)
                    row_all = pivot_size.argmax(axis=0)
                    blocked = pivot_size.max(axis=0) > 0.0
                    t_all = np.where(blocked, plain[row_all, np.arange(idx.size)], np.inf)
                else:
                    row_all = np.zeros(idx.size, dtype=int)
                    blocked = np.zeros(idx.size, dtype=bool)
                    t_all = np.full(idx.size, np.inf)
                own_all = self.HI[self.nonbasic[idx]] - self.LO[self.nonbasic[idx]]
                step = np.minimum(t_all, own_all)
                gain = np.where(np.isfinite(step), np.abs(d[idx]) * step, np.inf)
                tied = np.flatnonzero(gain == gain.max())
                if tied.size > 1:
                    dmag = np.abs(d[idx[tied]])
                    tied = tied[dmag == dmag.max()]
                if tied.size > 1:
                    tied = tied[[np.argmin(self.nonbasic[idx[tied]])]]
                k = int(tied[0])
                col = int(idx[k])
                var = int(self.nonbasic[col])
                direction = float(dirs[k])
                t_basic = float(t_all[k])
                own = float(own_all[k])
                chosen_row = int(row_all[k]) if blocked[k] else None
            self.iters += 1
            if own <= t_basic:
                if np.isinf(own):
                    tq = self.T[:, col]
                    near = (np.abs(tq) > 0.0) & (np.abs(tq) <= cfg.pivot_tol)
                    blockable = near & (
                        np.isfinite(self.LO[self.basis]) | np.isfinite(self.HI[self.basis])
                    )
                    if np.any(blockable):
                        raise SolverFailure(
                            "pivot below tolerance with no admissible alternative"
                        )
                    return "unbounded"
                self.status[var] = _AT_UPPER if self.status[var] == _AT_LOWER else _AT_LOWER
                continue
            if bland:
                rows = np.flatnonzero(ratios <= t_basic + cfg.feasibility_tol)
                row = int(rows[np.argmin(self.basis[rows])])
            else:
                row = chosen_row
            self._pivot(row, col, leaves_to_lower=direction * self.T[row, col] > 0.0)

    def assemble(self) -> np.ndarray:
        xn, xb = self.point()
        x = np.zeros(self.LO.size)
        x[self.nonbasic] = xn
        x[self.basis] = xb
        return x[: self.n]

    def ensure_feasible(self, cost: np.ndarray) -> tuple[str, np.ndarray, float]:
        """Restore basic feasibility from the current basis.

        Appends a fresh artificial variable covering every out-of-bounds basic
        row, drives it to zero (phase one), and retires it. Returns the
        verdict ('feasible' or 'infeasible'), the cost vector extended for any
        new variable, and the residual infeasibility.
        """
        cfg = self.cfg
        _, xb = self.point()
        low_gap = self.LO[self.basis] - xb
        high_gap = xb - self.HI[self.basis]
        worst = np.maximum(low_gap, high_gap)
        if self.M == 0 or worst.max(initial=0.0) <= cfg.feasibility_tol:
            return "feasible", cost, 0.0
        art = self.LO.size
        self.LO = np.append(self.LO, 0.0)
        self.HI = np.append(self.HI, np.inf)
        self.status = np.append(self.status, np.int8(_AT_LOWER))
        column = np.zeros(self.M)
        column[low_gap > cfg.feasibility_tol] = -1.0
        column[high_gap > cfg.feasibility_tol] = 1.0
        self.T = np.hstack([self.T, column[:, None]])
        self.nonbasic = np.append(self.nonbasic, art)
        cost = np.append(cost, 0.0)
        row = int(np.argmax(worst))
        self._pivot(row, self.nonbasic.size - 1, leaves_to_lower=low_gap[row] >= high_gap[row])
        phase_one = np.zeros(self.LO.size)
        phase_one[art] = 1.0
        outcome = self.run_phase(phase_one, watch=art)
        if outcome != "optimal":
            raise SolverFailure("phase one lost boundedness; numerical breakdown")
        _, xb = self.point()
        art_value = self.value_of(art, xb)
        if art_value > cfg.feasibility_tol:
            return "infeasible", cost, art_value
        if self.status[art] != _BASIC:
            slot = int(np.nonzero(self.nonbasic == art)[0][0])
            self.T = np.delete(self.T, slot, axis=1)
            self.nonbasic = np.delete(self.nonbasic, slot)
        else:
            self.LO[art] = 0.0
            self.HI[art] = 0.0
        return "feasible", cost, art_value

    def basic_violation(self) -> float:
        _, xb = self.point()
        if self.M == 0:
            return 0.0
        low_gap = self.LO[self.basis] - xb
        high_gap = xb - self.HI[self.basis]
        return float(np.maximum(low_gap, high_gap).max(initial=0.0))

    def refactorize(self) -> bool:
        """Rebuild the tableau from the original data to shed pivot drift.

        The basis is mostly slacks, so reinversion reduces to one small solve
        over the tight rows against the basic structural columns. Returns
        False (leaving the tableau untouched) when the current basis does not
        admit it (retired artificial still basic, or a singular active block).
        """
        if np.any(self.basis >= self.n + self.M) or np.any(self.nonbasic >= self.n + self.M):
            return False
        struct_pos = np.flatnonzero(self.basis < self.n)
        slack_pos = np.flatnonzero(self.basis >= self.n)
        struct_vars = self.basis[struct_pos]
        slack_rows = self.basis[slack_pos] - self.n
        tight = np.ones(self.M, dtype=bool)
        tight[slack_rows] = False
        tight_rows = np.flatnonzero(tight)
        if tight_rows.size != struct_vars.size:
            return False
        nn = self.nonbasic.size
        n_cols = np.zeros((self.M, nn))
        for slot, var in enumerate(self.nonbasic):
            if var < self.n:
                n_cols[:, slot] = self.A[:, var]
            else:
                n_cols[var - self.n, slot] = 1.0
        if struct_vars.size:
            rhs = np.column_stack([n_cols[tight_rows], self.b[tight_rows]])
            try:
                xs = np.linalg.solve(self.A[np.ix_(tight_rows, struct_vars)], rhs)
            except np.linalg.LinAlgError:
                return False
            if not np.all(np.isfinite(xs)):
                return False
        else:
            xs = np.zeros((0, nn + 1))
        xk = np.column_stack([n_cols[slack_rows], self.b[slack_rows]])
        if struct_vars.size:
            xk -= self.A[np.ix_(slack_rows, struct_vars)] @ xs
        t_new = np.empty((self.M, nn))
        beta_new = np.empty(self.M)
        t_new[struct_pos] = xs[:, :nn]
        beta_new[struct_pos] = xs[:, nn]
        t_new[slack_pos] = xk[:, :nn]
        beta_new[slack_pos] = xk[:, nn]
        self.T = t_new
        self.beta = beta_new
        return True


def _max_violation(problem: LpProblem, x: np.ndarray) -> float:
    worst = 0.0
    if problem.n_constraints:
        worst = float(np.max(problem.lhs @ x - problem.rhs, initial=0.0))
    worst = max(worst, float(np.max(problem.lower - x, initial=0.0)))
    worst = max(worst, float(np.max(x - problem.upper, initial=0.0)))
    return worst


def _polish(problem: LpProblem, sx: _Simplex, x: np.ndarray) -> np.ndarray:
    """Re-solve the final active set exactly to shed accumulated pivot drift."""
    n, M = sx.n, sx.M
    basic_struct = np.sort(sx.basis[sx.basis < n])
    nb = sx.nonbasic
    tight = np.sort(nb[(nb >= n) & (nb < n + M)] - n)
    if basic_struct.size == 0 or basic_struct.size != tight.size:
        return x
    a_active = problem.lhs[np.ix_(tight, basic_struct)]
    fixed = x.copy()
    fixed[basic_struct] = 0.0
    rhs = problem.rhs[tight] - problem.lhs[tight] @ fixed
    try:
        solved = np.linalg.solve(a_active, rhs)
    except np.linalg.LinAlgError:
        return x
    if not np.all(np.isfinite(solved)):
        return x
    candidate = x.copy()
    candidate[basic_struct] = solved
    tol = sx.cfg.feasibility_tol
    obj_old = problem.objective @ x
    obj_new = problem.objective @ candidate
    if _max_violation(problem, candidate) <= tol and obj_new <= obj_old + tol * max(1.0, abs(obj_old)):
        return candidate
    return x


# Above this row count, tall problems are solved by activating rows on demand:
# solve a strided subset, append every violated row, re-solve until the subset
# optimum is feasible for the whole system (then it is optimal for it too).
_ACTIVATION_THRESHOLD = 1500
_ACTIVATION_SEED_ROWS = 384


def _subproblem(problem: LpProblem, rows: np.ndarray) -> LpProblem:
    sub = LpProblem.__new__(LpProblem)
    sub.objective = problem.objective
    sub.lhs = problem.lhs[rows]
    sub.rhs = problem.rhs[rows]
    sub.lower = problem.lower
    sub.upper = problem.upper
    return sub


def solve(problem: LpProblem, config: SimplexConfig | None = None) -> LpSolution:
    """Solve the LP; deterministic, with explicit failure on numerical breakdown."""
    cfg = config if config is not None else SimplexConfig()
    n_rows = problem.n_constraints
    if n_rows <= _ACTIVATION_THRESHOLD:
        return _solve_dense(problem, cfg)

    stride = max(1, n_rows // _ACTIVATION_SEED_ROWS)
    active = np.arange(0, n_rows, stride)
    iterations = 0
    for _ in range(64):
        sol = _solve_dense(_subproblem(problem, active), cfg)
        iterations += sol.iterations
        sol.iterations = iterations
        if sol.status is LpStatus.INFEASIBLE:
            # a row subset is a relaxation, so the full problem is infeasible too
            return sol
        if sol.status is LpStatus.UNBOUNDED:
            break
        violation = problem.lhs @ sol.values - problem.rhs
        bad = np.flatnonzero(violation > cfg.feasibility_tol)
        if bad.size == 0:
            duals = np.zeros(n_rows)
            duals[active] = sol.duals
            sol.duals = duals
            return sol
        active = np.union1d(active, bad)
    full = _solve_dense(problem, cfg)
    full.iterations += iterations
    return full


def _solve_dense(problem: LpProblem, cfg: SimplexConfig) -> LpSolution:
    sx = _Simplex(problem, cfg)
    M, n = sx.M, sx.n
    cost = np.concatenate([problem.objective, np.zeros(M)])

    # The relaxed (Harris) ratio test lets non-pivot rows drift out of bounds
    # by up to the feasibility tolerance per pivot; repair and reoptimize
    # until the basis is clean.
    outcome = None
    for _ in range(6):
        verdict, cost, residual = sx.ensure_feasible(cost)
        if verdict == "infeasible":
            return LpSolution(
                status=LpStatus.INFEASIBLE,
                values=None,
                objective_value=float("nan"),
                iterations=sx.iters,
                infeasibility=residual,
            )
        outcome = sx.run_phase(cost)
        if outcome == "unbounded":
            break
        sx.refactorize()
        if sx.basic_violation() <= cfg.feasibility_tol:
            break
    else:
        raise SolverFailure("could not restore basic feasibility after repair rounds")

    x = sx.assemble()
    if outcome == "unbounded":
        return LpSolution(
            status=LpStatus.UNBOUNDED,
            values=x,
            objective_value=float("-inf"),
            iterations=sx.iters,
        )

    x = _polish(problem, sx, x)
    if _max_violation(problem, x) > 10 * cfg.feasibility_tol:
        raise SolverFailure(
            f"optimal basis failed feasibility verification "
            f"(violation {_max_violation(problem, x):.3e})"
        )
    duals = np.zeros(M)
    reduced = np.zeros(n)
    d_nb = cost[sx.nonbasic] - sx.T.T @ cost[sx.basis]
    for slot, var in enumerate(sx.nonbasic):
        if var < n:
            reduced[var] = d_nb[slot]
        elif var < n + M:
            duals[var - n] = d_nb[slot]
    return LpSolution(
        status=LpStatus.OPTIMAL,
        values=x,
        objective_value=float(problem.objective @ x),
        duals=duals,
        reduced_costs=reduced,
        iterations=sx.iters,
    )
