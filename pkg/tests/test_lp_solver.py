import numpy as np
import pytest
from scipy.optimize import linprog

from ratmin.lp_solver import (
    LpProblem,
    LpStatus,
    SimplexConfig,
    SolverFailure,
    solve,
)


class TestSpecExamples:
    def test_single_active_constraint(self):
        # minimize x subject to -x <= -1, x free
        sol = solve(LpProblem([1.0], [[-1.0]], [-1.0]))
        assert sol.status is LpStatus.OPTIMAL
        assert sol.values[0] == pytest.approx(1.0, abs=1e-12)
        assert sol.objective_value == pytest.approx(1.0, abs=1e-12)

    def test_box_corner(self):
        sol = solve(
            LpProblem(
                [-1.0, -1.0],
                [[1.0, 0.0], [0.0, 1.0]],
                [1.0, 1.0],
                bounds=[(0, None), (0, None)],
            )
        )
        assert sol.status is LpStatus.OPTIMAL
        np.testing.assert_allclose(sol.values, [1.0, 1.0], atol=1e-12)
        assert sol.objective_value == pytest.approx(-2.0, abs=1e-12)

    def test_empty_polytope(self):
        sol = solve(LpProblem([0.0], [[1.0], [-1.0]], [0.0, -1.0]))
        assert sol.status is LpStatus.INFEASIBLE
        assert sol.infeasibility > 1e-9


class TestConstruction:
    def test_ge_rows_normalized(self):
        # x >= 1 expressed directly
        sol = solve(LpProblem([1.0], [[1.0]], [1.0], relations=[">="]))
        assert sol.values[0] == pytest.approx(1.0, abs=1e-12)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            LpProblem([1.0, 2.0], [[1.0]], [1.0])

    def test_rhs_mismatch(self):
        with pytest.raises(ValueError):
            LpProblem([1.0], [[1.0]], [1.0, 2.0])

    def test_bad_relation(self):
        with pytest.raises(ValueError):
            LpProblem([1.0], [[1.0]], [1.0], relations=["=="])

    def test_nonfinite_rejected(self):
        with pytest.raises(ValueError):
            LpProblem([np.nan], [[1.0]], [1.0])

    def test_empty_bound_interval(self):
        with pytest.raises(ValueError):
            LpProblem([1.0], [[1.0]], [1.0], bounds=[(2.0, 1.0)])

    def test_dump_mentions_rows_and_bounds(self):
        text = LpProblem([1.0, -2.0], [[1.0, 1.0]], [3.0], bounds=[(0, 1), (None, None)]).dump()
        assert "minimize" in text
        assert "<=" in text
        assert "x0" in text


class TestStatuses:
    def test_unbounded_free_variable(self):
        sol = solve(LpProblem([-1.0], np.zeros((0, 1)), []))
        assert sol.status is LpStatus.UNBOUNDED
        assert sol.objective_value == -np.inf

    def test_unbounded_with_constraint(self):
        sol = solve(LpProblem([-1.0], [[-1.0]], [0.0], bounds=[(0, None)]))
        assert sol.status is LpStatus.UNBOUNDED

    def test_bounded_by_upper(self):
        sol = solve(LpProblem([-1.0], np.zeros((0, 1)), [], bounds=[(0, 5)]))
        assert sol.status is LpStatus.OPTIMAL
        assert sol.values[0] == pytest.approx(5.0)

    def test_zero_objective_returns_feasible_point(self):
        sol = solve(LpProblem([0.0, 0.0], [[1.0, 1.0]], [1.0], bounds=[(0, None), (0, None)]))
        assert sol.status is LpStatus.OPTIMAL
        assert sol.values.sum() <= 1.0 + 1e-9


def _random_problem(rng, tall=False):
    n = int(rng.integers(1, 8))
    m = int(rng.integers(0, 15)) if not tall else int(rng.integers(1600, 2400))
    lhs = rng.normal(size=(m, n)).round(3)
    rhs = rng.normal(size=m).round(3)
    cost = rng.normal(size=n).round(3)
    bounds = []
    for _ in range(n):
        kind = rng.integers(0, 4)
        lo = None if kind in (0, 2) else round(float(rng.normal(-1, 1)), 3)
        if kind in (0, 1):
            hi = None
        else:
            hi = round(float(rng.normal(2, 1)), 3) if lo is None else lo + 0.1 + abs(round(float(rng.normal(1, 1)), 3))
        bounds.append((lo, hi))
    return LpProblem(cost, lhs, rhs, bounds=bounds)


def _scipy_status(problem):
    bounds = [
        (lo if np.isfinite(lo) else None, hi if np.isfinite(hi) else None)
        for lo, hi in zip(problem.lower, problem.upper)
    ]
    m = problem.n_constraints
    return linprog(
        problem.objective,
        A_ub=problem.lhs if m else None,
        b_ub=problem.rhs if m else None,
        bounds=bounds,
        method="highs",
    )


@pytest.mark.parametrize("seed", range(8))
def test_agrees_with_reference_solver(seed):
    rng = np.random.default_rng(seed)
    for _ in range(12):
        problem = _random_problem(rng)
        ours = solve(problem)
        ref = _scipy_status(problem)
        expected = {0: LpStatus.OPTIMAL, 2: LpStatus.INFEASIBLE, 3: LpStatus.UNBOUNDED}[ref.status]
        assert ours.status is expected
        if ours.status is LpStatus.OPTIMAL:
            assert ours.objective_value == pytest.approx(ref.fun, abs=1e-7, rel=1e-7)
            if problem.n_constraints:
                assert np.max(problem.lhs @ ours.values - problem.rhs) <= 1e-9


def test_tall_problem_matches_reference():
    rng = np.random.default_rng(42)
    for _ in range(3):
        problem = _random_problem(rng, tall=True)
        ours = solve(problem)
        ref = _scipy_status(problem)
        expected = {0: LpStatus.OPTIMAL, 2: LpStatus.INFEASIBLE, 3: LpStatus.UNBOUNDED}[ref.status]
        assert ours.status is expected
        if ours.status is LpStatus.OPTIMAL:
            assert ours.objective_value == pytest.approx(ref.fun, abs=1e-7, rel=1e-7)
            assert np.max(problem.lhs @ ours.values - problem.rhs) <= 1e-9


def test_duality_gap_small_on_random_instances():
    rng = np.random.default_rng(7)
    checked = 0
    while checked < 25:
        problem = _random_problem(rng)
        sol = solve(problem)
        if sol.status is not LpStatus.OPTIMAL:
            continue
        checked += 1
        y = sol.duals
        d = sol.reduced_costs
        assert np.all(y >= -1e-9)
        # complementary slackness: positive multipliers only on tight rows
        if problem.n_constraints:
            slack = problem.rhs - problem.lhs @ sol.values
            assert np.max(np.abs(y * slack)) <= 1e-6
        # dual objective: -b.y plus bound contributions at the attained bounds
        dual_obj = -float(problem.rhs @ y) if problem.n_constraints else 0.0
        for j in range(problem.n_variables):
            if d[j] > 0 and np.isfinite(problem.lower[j]):
                dual_obj += problem.lower[j] * d[j]
            elif d[j] < 0 and np.isfinite(problem.upper[j]):
                dual_obj += problem.upper[j] * d[j]
        assert abs(sol.objective_value - dual_obj) <= 1e-7 * max(1.0, abs(sol.objective_value))


def test_never_infeasible_with_known_feasible_point():
    rng = np.random.default_rng(11)
    for _ in range(40):
        n = int(rng.integers(1, 7))
        m = int(rng.integers(1, 20))
        x0 = rng.normal(size=n)
        lhs = rng.normal(size=(m, n))
        rhs = lhs @ x0 + rng.uniform(0.0, 2.0, size=m)
        bounds = [(x - rng.uniform(0, 3), x + rng.uniform(0, 3)) for x in x0]
        problem = LpProblem(rng.normal(size=n), lhs, rhs, bounds=bounds)
        sol = solve(problem)
        assert sol.status is not LpStatus.INFEASIBLE


def test_bit_identical_reruns():
    rng = np.random.default_rng(3)
    problem = _random_problem(rng)
    first = solve(problem)
    second = solve(problem)
    assert first.status is second.status
    if first.status is LpStatus.OPTIMAL:
        assert np.array_equal(first.values, second.values)
        assert first.objective_value == second.objective_value
        assert np.array_equal(first.duals, second.duals)


def test_tiny_pivot_raises_instead_of_wrong_answer():
    # min -x s.t. 1e-15*x <= 1: the only blocking entry is below pivot
    # tolerance, so claiming unbounded would be wrong
    problem = LpProblem([-1.0], [[1e-15]], [1.0], bounds=[(0, None)])
    with pytest.raises(SolverFailure):
        solve(problem)


def test_iteration_limit_raises():
    problem = LpProblem(
        [-1.0, -1.0],
        [[1.0, 0.0], [0.0, 1.0], [1.0, 1.0]],
        [1.0, 1.0, 1.5],
        bounds=[(0, None), (0, None)],
    )
    with pytest.raises(SolverFailure, match="iteration limit"):
        solve(problem, SimplexConfig(max_iterations=1))
