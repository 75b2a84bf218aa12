"""Manufactured (forced) solutions for the order-of-convergence studies.

The exact space-time fields are divergence-free at t=0 with density constant
in space to leading order in the squared Mach number delta.  The forcing that
makes them exact solutions of the continuous system was derived symbolically
offline (scripts/derive_forcing.py) and committed as _forcing.py; the test
suite certifies it against an independent high-order finite-difference
residual oracle.
"""

from __future__ import annotations

import numpy as np

from . import _forcing
from .grid import GridSpec
from .model import ModelParams
from .state import State, state_from_primitives


def exact_solution(dim: int, delta: float, x, t, y=None):
    """Pointwise exact fields; returns (rho, v1, c) in 1D and
    (rho, v1, v2, c) in 2D."""
    if dim == 1:
        rho = 1.0 + delta * np.cos(2 * np.pi * x) * (t + 1.0)
        v1 = np.zeros_like(np.asarray(x, dtype=float))
        c = 0.75 - 0.1 * (1.0 - delta) * np.cos(np.pi * x) * (t - 1.0)
        return rho, v1, c
    rho = 1.0 + delta * np.cos(2 * np.pi * x) * np.cos(np.pi * y) * (t + 1.0)
    v1 = (1.0 + delta) * (1.0 - np.cos(2 * np.pi * x)) \
        * np.sin(2 * np.pi * y) * (1.0 - 2.0 * t**2)
    v2 = (1.0 + delta) * (1.0 - np.cos(2 * np.pi * y)) \
        * np.sin(2 * np.pi * x) * (2.0 * t**2 - 1.0)
    c = 0.75 - 0.1 * (1.0 - delta) * np.cos(np.pi * x) * np.cos(np.pi * y) \
        * (t - 1.0)
    return rho, v1, v2, c


def exact_state(grid: GridSpec, params: ModelParams, t: float) -> State:
    """Exact solution sampled on the staggered grid as a conserved state."""
    xc = grid.cell_centers()
    xf = grid.interior_faces()
    d = params.delta
    if grid.dim == 1:
        rho, _, c = exact_solution(1, d, xc, t)
        _, v1f, _ = exact_solution(1, d, xf, t)
        return state_from_primitives(grid, rho, v1f, c)
    Xc, Yc = np.meshgrid(xc, xc, indexing="ij")
    rho, _, _, c = exact_solution(2, d, Xc, t, y=Yc)
    Xfx, Yfx = np.meshgrid(xf, xc, indexing="ij")
    _, v1, _, _ = exact_solution(2, d, Xfx, t, y=Yfx)
    Xfy, Yfy = np.meshgrid(xc, xf, indexing="ij")
    _, _, v2, _ = exact_solution(2, d, Xfy, t, y=Yfy)
    return state_from_primitives(grid, rho, v1, c, v2=v2)


def exact_momenta(grid: GridSpec, params: ModelParams, t: float):
    """Pointwise exact momenta rho* v* at the faces (for error norms)."""
    xc = grid.cell_centers()
    xf = grid.interior_faces()
    d = params.delta
    if grid.dim == 1:
        rho_f, v1f, _ = exact_solution(1, d, xf, t)
        return (rho_f * v1f,)
    Xfx, Yfx = np.meshgrid(xf, xc, indexing="ij")
    rho1, v1, _, _ = exact_solution(2, d, Xfx, t, y=Yfx)
    Xfy, Yfy = np.meshgrid(xc, xf, indexing="ij")
    rho2, _, v2, _ = exact_solution(2, d, Xfy, t, y=Yfy)
    return rho1 * v1, rho2 * v2


def forcing_state(grid: GridSpec, params: ModelParams, t: float) -> State:
    """Forcing sampled at the staggered locations, as a tendency."""
    p = params
    args = (p.delta, p.cp, p.gamma, p.nu, p.lam, p.eps, p.g)
    xc = grid.cell_centers()
    xf = grid.interior_faces()
    if grid.dim == 1:
        s_rho, _, s_q = _forcing.forcing_1d(xc, t, *args)
        _, s_m, _ = _forcing.forcing_1d(xf, t, *args)
        return State(rho=np.broadcast_to(s_rho, xc.shape).astype(float),
                     mx=np.asarray(s_m, dtype=float),
                     q=np.asarray(s_q, dtype=float))
    Xc, Yc = np.meshgrid(xc, xc, indexing="ij")
    s_rho, _, _, s_q = _forcing.forcing_2d(Xc, Yc, t, *args)
    Xfx, Yfx = np.meshgrid(xf, xc, indexing="ij")
    _, s_m1, _, _ = _forcing.forcing_2d(Xfx, Yfx, t, *args)
    Xfy, Yfy = np.meshgrid(xc, xf, indexing="ij")
    _, _, s_m2, _ = _forcing.forcing_2d(Xfy, Yfy, t, *args)
    shape = (grid.M, grid.M)
    return State(rho=np.broadcast_to(s_rho, shape).astype(float).copy(),
                 mx=np.broadcast_to(s_m1, (grid.M - 1, grid.M)).astype(float).copy(),
                 q=np.broadcast_to(s_q, shape).astype(float).copy(),
                 my=np.broadcast_to(s_m2, (grid.M, grid.M - 1)).astype(float).copy())


def make_forcing(grid: GridSpec, params: ModelParams):
    """Forcing callback t -> State for the time integrator."""
    return lambda t: forcing_state(grid, params, t)
