"""Diagnostics: conservation, low-Mach metrics, errors and convergence rates."""

from __future__ import annotations

import numpy as np

from . import model
from .grid import GridSpec, apply_fd_operator, dual_transpose
from .model import ModelParams
from .state import State


def conserved_totals(U: State, grid: GridSpec) -> dict:
    """Cell-volume-weighted totals of the conserved fields."""
    w = grid.h ** grid.dim
    out = {"mass": w * float(U.rho.sum()),
           "phase": w * float(U.q.sum()),
           "mom_x": w * float(U.mx.sum())}
    if U.my is not None:
        out["mom_y"] = w * float(U.my.sum())
    return out


def conservation_errors(U: State, U0: State, grid: GridSpec) -> dict:
    """Absolute drift of the conserved totals relative to the initial state."""
    a, b = conserved_totals(U, grid), conserved_totals(U0, grid)
    return {k: abs(a[k] - b[k]) for k in a}


def ap_metrics(U: State, grid: GridSpec, params: ModelParams) -> dict:
    """Low-Mach indicators: velocity divergence, density flatness, and the
    stiff pressure-gradient magnitude (full pressure)."""
    h = grid.h
    div = apply_fd_operator("dual", "x", U.v1(), h)
    if grid.dim == 2:
        div = div + apply_fd_operator("dual", "y", U.v2(), h)
    p_full = model.p1(U.rho, params) + model.p2(U.rho, params)
    gp = float(np.max(np.abs(dual_transpose(p_full, "x", h))))
    if grid.dim == 2:
        gp = max(gp, float(np.max(np.abs(dual_transpose(p_full, "y", h)))))
    return {"div_v_norm": float(np.max(np.abs(div))),
            "rho_flatness": float(np.max(np.abs(U.rho - U.rho.mean()))),
            "grad_p_stiff_norm": gp}


def c_extrema(U: State) -> tuple[float, float]:
    c = U.q / U.rho
    return float(c.min()), float(c.max())


def total_energy(U: State, grid: GridSpec, params: ModelParams) -> float:
    """Kinetic + internal + interfacial energy (quadrature at native points)."""
    w = grid.h ** grid.dim
    kin = 0.5 * float((U.mx * U.v1()).sum())
    if U.my is not None:
        kin += 0.5 * float((U.my * U.v2()).sum())
    c = U.q / U.rho
    internal = float((U.rho * model.free_energy_density(U.rho, params)).sum())
    mix = float((U.rho * model.psi(c)).sum())
    h = grid.h
    grad2 = (-dual_transpose(c, "x", h)) ** 2
    if grid.dim == 2:
        gy = (-dual_transpose(c, "y", h)) ** 2
        interf = 0.5 * params.eps * (float(grad2.sum()) + float(gy.sum()))
    else:
        interf = 0.5 * params.eps * float(grad2.sum())
    return w * (kin + internal + mix + interf)


def error_norm(U: State, exact_rho, exact_momenta, exact_q,
               grid: GridSpec) -> float:
    """Scaled l1 error summed over all conserved components.

    Momenta are compared against the pointwise product of the exact density
    and velocity at the faces.
    """
    w = grid.h ** grid.dim
    e = float(np.abs(U.rho - exact_rho).sum())
    e += float(np.abs(U.mx - exact_momenta[0]).sum())
    if U.my is not None:
        e += float(np.abs(U.my - exact_momenta[1]).sum())
    e += float(np.abs(U.q - exact_q).sum())
    return w * e


def compute_eoc(Ms, errors) -> list:
    """Observed orders between successive grids (None for the first row)."""
    out = [None]
    for k in range(1, len(Ms)):
        ratio = np.log(errors[k - 1] / errors[k]) / np.log(Ms[k] / Ms[k - 1])
        out.append(float(ratio))
    return out
