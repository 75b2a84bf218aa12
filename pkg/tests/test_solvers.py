"""Implicit stage solvers: SPD structure, solver agreement, Newton behavior."""

import numpy as np
import pytest

from chns_imex.grid import GridSpec
from chns_imex.model import ModelParams, NonPositiveDensityError
from chns_imex.solvers import (HydroSolver, LinearSolverConfig, NewtonConfig,
                               SolveStats, SolverFailure, assemble_c_matrix,
                               solve_c_stage)

import oracles

PARAMS = ModelParams(cp=1e2)


# ---------------------------------------------------------------------------
# concentration system
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("dim,M", [(1, 8), (1, 16), (2, 8)])
def test_c_matrix_spd_and_matches_dense(dim, M, rng):
    grid = GridSpec(dim=dim, M=M)
    n = M if dim == 1 else M * M
    rho = 1.0 + 0.5 * rng.uniform(-1, 1, n)
    dta, eps = 0.02, 1e-4
    A = assemble_c_matrix(rho.reshape((M, M) if dim == 2 else (M,),
                                      order="F"), dta, eps, grid).toarray()
    dense = oracles.dense_c_matrix(rho, dta, eps, M, grid.h, dim)
    np.testing.assert_allclose(A, dense, rtol=1e-13,
                               atol=1e-13 * np.abs(dense).max())
    np.testing.assert_allclose(A, A.T, atol=1e-13 * np.abs(A).max())
    w = np.linalg.eigvalsh(A)
    assert w.min() > 0.0


def test_c_matrix_rejects_nonpositive_density():
    grid = GridSpec(dim=1, M=8)
    rho = np.ones(8)
    rho[3] = -0.1
    with pytest.raises(NonPositiveDensityError):
        assemble_c_matrix(rho, 0.01, 1e-4, grid)


@pytest.mark.parametrize("dim,M", [(1, 64), (2, 16)])
def test_linear_solvers_agree(dim, M, rng):
    grid = GridSpec(dim=dim, M=M)
    shape = (M,) if dim == 1 else (M, M)
    rho = 1.0 + 0.3 * rng.uniform(-1, 1, shape)
    rhs = rng.standard_normal(shape)
    dta, eps = 0.01, 1e-4
    sols = {}
    for method in ("direct", "cg", "multigrid"):
        cfg = LinearSolverConfig(method=method, tol=1e-12)
        sols[method] = solve_c_stage(rho, rhs, dta, eps, grid, cfg)
    ref = np.abs(sols["direct"]).max()
    np.testing.assert_allclose(sols["cg"], sols["direct"],
                               rtol=1e-9, atol=1e-9 * ref)
    np.testing.assert_allclose(sols["multigrid"], sols["direct"],
                               rtol=1e-9, atol=1e-9 * ref)


def test_solve_c_stage_zero_dta_is_pointwise():
    grid = GridSpec(dim=1, M=8)
    rho = np.linspace(1.0, 2.0, 8)
    rhs = np.linspace(-1.0, 1.0, 8)
    out = solve_c_stage(rho, rhs, 0.0, 1e-4, grid)
    np.testing.assert_allclose(out, rhs / rho, rtol=1e-15)


def test_solve_c_stage_residual_small(rng):
    grid = GridSpec(dim=2, M=16)
    rho = 1.0 + 0.3 * rng.uniform(-1, 1, (16, 16))
    rhs = rng.standard_normal((16, 16))
    dta, eps = 0.004, 1e-4
    A = assemble_c_matrix(rho, dta, eps, grid)
    x = solve_c_stage(rho, rhs, dta, eps, grid,
                      LinearSolverConfig(method="cg", tol=1e-12))
    res = A @ np.ravel(x, order="F") - np.ravel(rhs, order="F")
    assert np.linalg.norm(res) <= 1e-10 * np.linalg.norm(rhs)


def test_unknown_linear_solver_rejected():
    grid = GridSpec(dim=1, M=8)
    with pytest.raises(ValueError):
        solve_c_stage(np.ones(8), np.ones(8), 0.01, 1e-4, grid,
                      LinearSolverConfig(method="sor"))


# ---------------------------------------------------------------------------
# hydro Newton solver
# ---------------------------------------------------------------------------

def _random_stage_problem(hydro, grid, rng, dta, stiff=False):
    """Build r so that a known smooth state solves the stage system, then
    perturb the initial guess."""
    M = grid.M
    if grid.dim == 1:
        rho = 1.0 + 0.2 * rng.uniform(-1, 1, M)
        v1 = 0.2 * rng.standard_normal(M - 1)
        z_true = hydro.pack(rho, v1)
    else:
        rho = 1.0 + 0.2 * rng.uniform(-1, 1, (M, M))
        v1 = 0.2 * rng.standard_normal((M - 1, M))
        v2 = 0.2 * rng.standard_normal((M, M - 1))
        z_true = hydro.pack(rho, v1, v2)
    r = hydro.residual(z_true, np.zeros_like(z_true), dta)
    z0 = z_true.copy()
    z0[:hydro.nc] = 1.0            # flat-density initial guess
    z0[hydro.nc:] *= 0.5
    return z_true, z0, r


@pytest.mark.parametrize("dim", [1, 2])
def test_newton_recovers_manufactured_root(dim, rng):
    grid = GridSpec(dim=dim, M=8)
    hydro = HydroSolver(grid, PARAMS)
    z_true, z0, r = _random_stage_problem(hydro, grid, rng, dta=0.01)
    stats = SolveStats()
    z = hydro.solve(z0, r, 0.01, stats)
    assert np.abs(z - z_true).max() < 1e-8
    assert stats.newton_iters <= 20


def test_newton_monotone_on_random_problems():
    """Accepted iterates decrease the scaled residual norm monotonically
    across a population of random stage problems."""
    rng = np.random.default_rng(7)
    grid = GridSpec(dim=1, M=16)
    count = 0
    for k in range(100):
        cp = 10.0 ** rng.uniform(2, 6)
        params = ModelParams(cp=cp)
        hydro = HydroSolver(grid, params)
        dta = float(10.0 ** rng.uniform(-5, -2))
        z_true, z0, r = _random_stage_problem(hydro, grid, rng, dta)
        stats = SolveStats()
        z = hydro.solve(z0, r, dta, stats)
        hist = stats.history
        assert all(b < a for a, b in zip(hist, hist[1:])), \
            f"non-monotone history on problem {k}: {hist}"
        res = hydro.residual(z, r, dta)
        assert np.isfinite(res).all()
        count += 1
    assert count == 100


def test_newton_converges_at_stiff_pressure(rng):
    grid = GridSpec(dim=1, M=32)
    params = ModelParams(cp=1e8)
    hydro = HydroSolver(grid, params)
    dta = 1e-4
    z_true, z0, r = _random_stage_problem(hydro, grid, rng, dta)
    stats = SolveStats()
    z = hydro.solve(z0, r, dta, stats)
    # verify in the scaled norm the solver itself uses
    w = hydro._row_scaling(z, dta)
    assert np.linalg.norm(w * hydro.residual(z, r, dta)) < 1e-8


def test_newton_failure_reported():
    grid = GridSpec(dim=1, M=8)
    hydro = HydroSolver(grid, PARAMS,
                        NewtonConfig(maxit=1, tol_abs=0.0, tol_rel=0.0))
    rng = np.random.default_rng(3)
    z_true, z0, r = _random_stage_problem(hydro, grid, rng, dta=0.01)
    with pytest.raises(SolverFailure):
        hydro.solve(z0, r, 0.01)


def test_lu_reuse_across_solves(rng):
    """The chord factorization is reused for nearby stage systems."""
    grid = GridSpec(dim=1, M=16)
    hydro = HydroSolver(grid, PARAMS)
    dta = 0.01
    s1, s2 = SolveStats(), SolveStats()
    _, z0, r = _random_stage_problem(hydro, grid, rng, dta)
    hydro.solve(z0, r, dta, s1)
    _, z0b, rb = _random_stage_problem(hydro, grid, rng, dta)
    hydro.solve(z0b, rb, dta, s2)
    assert s1.factorizations >= 1
    assert s2.factorizations == 0
    # a very different dt*alpha invalidates the cache
    s3 = SolveStats()
    _, z0c, rc = _random_stage_problem(hydro, grid, rng, dta * 10)
    hydro.solve(z0c, rc, dta * 10, s3)
    assert s3.factorizations >= 1
