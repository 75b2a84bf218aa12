"""Independent slow reference implementations used as test oracles.

Everything here is written index-by-index from the flux definitions, with its
own ghost-value helpers, deliberately avoiding the vectorized machinery of
the package (only the scalar 5-point WENO kernel and the transfer weights are
shared, since those are certified separately against polynomial exactness).
"""

import numpy as np
import scipy.sparse as sp

from chns_imex import model
from chns_imex.grid import MU6
from chns_imex.operators import (laplacian_nd, mat_average, mat_dual,
                                 viscous_blocks)
from chns_imex.weno import weno5_point


# ---------------------------------------------------------------------------
# ghost-value accessors (single reflection is enough for 3 ghost layers)
# ---------------------------------------------------------------------------

def cell_val(f, i, sign):
    """Cell field value at arbitrary integer index (0-based)."""
    M = len(f)
    if i < 0:
        return sign * f[-1 - i]
    if i >= M:
        return sign * f[2 * M - 1 - i]
    return f[i]


def face_val(full, k, sign):
    """Full face field (walls included, len M+1) at arbitrary index."""
    M = len(full) - 1
    if k < 0:
        return sign * full[-k]
    if k > M:
        return sign * full[2 * M - k]
    return full[k]


def vel_full(v):
    """Interior-face velocities -> full face array with zero walls."""
    return np.concatenate([[0.0], v, [0.0]])


def c2f6(f, k, sign=1.0):
    """Sixth-order cell->face transfer at face k: cells k-3..k+2 (0-based)."""
    return sum(MU6[j] * cell_val(f, k - 3 + j, sign) for j in range(6))


def f2c6(full, i, sign=1.0):
    """Sixth-order face->cell transfer at cell i: faces i-2..i+3."""
    return sum(MU6[j] * face_val(full, i - 2 + j, sign) for j in range(6))


def weno_cells(f, k, sign):
    """(minus, plus) interface states at face k from a cell field."""
    minus = weno5_point([cell_val(f, k - 3 + j, sign) for j in range(5)])
    plus = weno5_point([cell_val(f, k + 2 - j, sign) for j in range(5)])
    return minus, plus


def weno_faces(full, i, sign):
    """(minus, plus) states at cell center i (0-based) from a face field."""
    minus = weno5_point([face_val(full, i - 2 + j, sign) for j in range(5)])
    plus = weno5_point([face_val(full, i + 3 - j, sign) for j in range(5)])
    return minus, plus


def sound(r, params):
    return model.sound_speed(r, params) if r > 0 else 0.0


def lam_max(vm, vp, rm, rp, params):
    return max(abs(vm) + sound(rm, params), abs(vp) + sound(rp, params))


# ---------------------------------------------------------------------------
# 1D convective tendency from the flux definitions
# ---------------------------------------------------------------------------

def convective_1d(Ut, U, h, params):
    M = len(Ut.rho)
    rho_t, q_t = Ut.rho, Ut.q
    V = vel_full(Ut.v1())          # explicit face velocities, walls zero
    MX = vel_full(U.mx)            # implicit centered mass flux rho_* v
    vc = np.array([f2c6(V, i, -1.0) for i in range(M)])
    rho_f = np.array([c2f6(rho_t, k, 1.0) for k in range(M + 1)])

    F_rho = np.empty(M + 1)
    F_q = np.empty(M + 1)
    for k in range(M + 1):
        rm, rp = weno_cells(rho_t, k, 1.0)
        vm, vp = weno_cells(vc, k, -1.0)
        lam = lam_max(vm, vp, rm, rp, params)
        F_rho[k] = face_val(MX, k, -1.0) - 0.5 * lam * (rp - rm)
        qm, qp = weno_cells(q_t, k, 1.0)
        rvm, rvp = weno_cells(q_t * vc, k, -1.0)
        F_q[k] = 0.5 * (rvp + rvm) - 0.5 * lam * (qp - qm)

    Phi = rho_f * V**2 + model.p1(rho_f, params)
    Mom = rho_f * V
    Fc = np.empty(M)
    for i in range(M):
        pm, pp = weno_faces(Phi, i, 1.0)
        mm, mp = weno_faces(Mom, i, -1.0)
        vm, vp = weno_faces(V, i, -1.0)
        rm, rp = weno_faces(rho_f, i, 1.0)
        lam = lam_max(vm, vp, rm, rp, params)
        Fc[i] = 0.5 * (pp + pm) - 0.5 * lam * (mp - mm)

    t_rho = -(F_rho[1:] - F_rho[:-1]) / h
    t_q = -(F_q[1:] - F_q[:-1]) / h
    t_mx = (Fc[:-1] - Fc[1:]) / h
    return t_rho, t_mx, t_q


# ---------------------------------------------------------------------------
# 2D convective tendency (scalar loops; slow, use only for small M)
# ---------------------------------------------------------------------------

def _line_mass_flux(rho_line, q_line, v_full, mx_full, h, params):
    """Rusanov mass and phase fluxes along one grid line (walls included)."""
    M = len(rho_line)
    vc = np.array([f2c6(v_full, i, -1.0) for i in range(M)])
    F_rho = np.empty(M + 1)
    F_q = np.empty(M + 1)
    for k in range(M + 1):
        rm, rp = weno_cells(rho_line, k, 1.0)
        vm, vp = weno_cells(vc, k, -1.0)
        lam = lam_max(vm, vp, rm, rp, params)
        F_rho[k] = face_val(mx_full, k, -1.0) - 0.5 * lam * (rp - rm)
        qm, qp = weno_cells(q_line, k, 1.0)
        rvm, rvp = weno_cells(q_line * vc, k, -1.0)
        F_q[k] = 0.5 * (rvp + rvm) - 0.5 * lam * (qp - qm)
    return F_rho, F_q


def _line_self_mom_flux(rho_f, v_full, h, params):
    """Normal momentum flux rho v^2 + p1 reconstructed at the M centers."""
    M = len(rho_f) - 1
    Phi = rho_f * v_full**2 + model.p1(rho_f, params)
    Mom = rho_f * v_full
    Fc = np.empty(M)
    for i in range(M):
        pm, pp = weno_faces(Phi, i, 1.0)
        mm, mp = weno_faces(Mom, i, -1.0)
        vm, vp = weno_faces(v_full, i, -1.0)
        rm, rp = weno_faces(rho_f, i, 1.0)
        lam = lam_max(vm, vp, rm, rp, params)
        Fc[i] = 0.5 * (pp + pm) - 0.5 * lam * (mp - mm)
    return Fc


def _line_corner_flux(rho_row, v_row, w_row, h, params):
    """Transverse momentum flux rho*v*w along a row of M samples.

    v is the momentum component carried (odd across the walls of this axis),
    w the transporting velocity (odd); rho even.  Returns fluxes at the M+1
    interfaces of the row.
    """
    M = len(rho_row)
    qty = rho_row * v_row * w_row
    mom = rho_row * v_row
    G = np.empty(M + 1)
    for k in range(M + 1):
        cm, cp = weno_cells(qty, k, 1.0)
        mm, mp = weno_cells(mom, k, -1.0)
        wm, wp = weno_cells(w_row, k, -1.0)
        rm, rp = weno_cells(rho_row, k, 1.0)
        lam = lam_max(wm, wp, rm, rp, params)
        G[k] = 0.5 * (cp + cm) - 0.5 * lam * (mp - mm)
    return G


def convective_2d(Ut, U, h, params):
    M = Ut.rho.shape[0]
    rho_t, q_t = Ut.rho, Ut.q
    v1, v2 = Ut.v1(), Ut.v2()
    t_rho = np.zeros((M, M))
    t_q = np.zeros((M, M))
    t_mx = np.zeros((M - 1, M))
    t_my = np.zeros((M, M - 1))

    # mass and phase: sweep x-lines then y-lines
    for j in range(M):
        F_rho, F_q = _line_mass_flux(rho_t[:, j], q_t[:, j],
                                     vel_full(v1[:, j]), vel_full(U.mx[:, j]),
                                     h, params)
        t_rho[:, j] += -(F_rho[1:] - F_rho[:-1]) / h
        t_q[:, j] += -(F_q[1:] - F_q[:-1]) / h
    for i in range(M):
        G_rho, G_q = _line_mass_flux(rho_t[i, :], q_t[i, :],
                                     vel_full(v2[i, :]), vel_full(U.my[i, :]),
                                     h, params)
        t_rho[i, :] += -(G_rho[1:] - G_rho[:-1]) / h
        t_q[i, :] += -(G_q[1:] - G_q[:-1]) / h

    # x-momentum: normal flux along x rows (j fixed)
    rho_xf = np.empty((M + 1, M))
    for j in range(M):
        for k in range(M + 1):
            rho_xf[k, j] = c2f6(rho_t[:, j], k, 1.0)
        Fc = _line_self_mom_flux(rho_xf[:, j], vel_full(v1[:, j]), h, params)
        t_mx[:, j] += (Fc[:-1] - Fc[1:]) / h
    # x-momentum: corner flux along y (i.e. at fixed interior x-face k)
    #   v2 at x-faces: corner average in x then 6th-order y-transfer
    corner_v2 = np.empty((M - 1, M - 1))   # at corners (xf k, yf l)
    for k in range(M - 1):
        corner_v2[k, :] = 0.5 * (v2[k, :] + v2[k + 1, :])
    for k in range(M - 1):
        v2_row = np.array([f2c6(vel_full(corner_v2[k, :]), j, -1.0)
                           for j in range(M)])
        G = _line_corner_flux(rho_xf[k + 1, :], v1[k, :], v2_row, h, params)
        t_mx[k, :] += -(G[1:] - G[:-1]) / h

    # y-momentum: mirrored
    rho_yf = np.empty((M, M + 1))
    for i in range(M):
        for k in range(M + 1):
            rho_yf[i, k] = c2f6(rho_t[i, :], k, 1.0)
        Gc = _line_self_mom_flux(rho_yf[i, :], vel_full(v2[i, :]), h, params)
        t_my[i, :] += (Gc[:-1] - Gc[1:]) / h
    corner_v1 = np.empty((M - 1, M - 1))
    for l in range(M - 1):
        corner_v1[:, l] = 0.5 * (v1[:, l] + v1[:, l + 1])
    for l in range(M - 1):
        v1_row = np.array([f2c6(vel_full(corner_v1[:, l]), i, -1.0)
                           for i in range(M)])
        F = _line_corner_flux(rho_yf[:, l + 1], v2[:, l], v1_row, h, params)
        t_my[:, l] += -(F[1:] - F[:-1]) / h
    return t_rho, t_mx, t_my, t_q


# ---------------------------------------------------------------------------
# capillary tendency via explicit stencils
# ---------------------------------------------------------------------------

def capillary_2d(Ut, h, params):
    """Capillary forces from central gradients of c, scalar loops."""
    eps = params.eps
    c = Ut.c()
    M = c.shape[0]

    def dcx(i, j):    # centered x-derivative at cell (one-sided at walls)
        return (cell_val(c[:, j], i + 1, 1.0)
                - cell_val(c[:, j], i - 1, 1.0)) / (2 * h)

    def dcy(i, j):
        return (cell_val(c[i, :], j + 1, 1.0)
                - cell_val(c[i, :], j - 1, 1.0)) / (2 * h)

    cx2 = np.array([[dcx(i, j) ** 2 for j in range(M)] for i in range(M)])
    cy2 = np.array([[dcy(i, j) ** 2 for j in range(M)] for i in range(M)])

    # corner gradients at (k+1/2, l+1/2): two-point differences + averages
    gx = (c[1:, :] - c[:-1, :]) / h            # (M-1, M) at x-faces
    gy = (c[:, 1:] - c[:, :-1]) / h            # (M, M-1) at y-faces
    corner_cx = 0.5 * (gx[:, :-1] + gx[:, 1:])   # (M-1, M-1)
    corner_cy = 0.5 * (gy[:-1, :] + gy[1:, :])
    prod = corner_cx * corner_cy

    t_mx = np.zeros((M - 1, M))
    t_my = np.zeros((M, M - 1))
    for k in range(M - 1):
        for j in range(M):
            d = (cy2[k + 1, j] - cx2[k + 1, j]
                 - cy2[k, j] + cx2[k, j]) / h
            row = prod[k, :]
            pr = row[j] if j < M - 1 else 0.0
            pl = row[j - 1] if j >= 1 else 0.0
            t_mx[k, j] = eps * (0.5 * d - (pr - pl) / h)
    for i in range(M):
        for l in range(M - 1):
            d = (cx2[i, l + 1] - cy2[i, l + 1]
                 - cx2[i, l] + cy2[i, l]) / h
            col = prod[:, l]
            pr = col[i] if i < M - 1 else 0.0
            pl = col[i - 1] if i >= 1 else 0.0
            t_my[i, l] = eps * (0.5 * d - (pr - pl) / h)
    return t_mx, t_my


# ---------------------------------------------------------------------------
# dense matrices for the linear/implicit parts
# ---------------------------------------------------------------------------

def dense_implicit_ops(M, h, params, dim):
    """Dense Kronecker assemblies of the implicit operators."""
    D = mat_dual(M, h).toarray()
    A = mat_average(M).toarray()
    G = D.T
    L = laplacian_nd(dim, M, h).toarray()
    if dim == 1:
        (B,) = viscous_blocks(1, M, h, params.nu, params.lam)
        return {"Dx": D, "Ax": A, "Gx": G, "L": L, "B11": B.toarray()}
    I = np.eye(M)
    out = {
        "Dx": np.kron(I, D), "Dy": np.kron(D, I),
        "Ax": np.kron(I, A), "Ay": np.kron(A, I),
        "Gx": np.kron(I, G), "Gy": np.kron(G, I),
        "L": L,
    }
    B11, B12, B21, B22 = viscous_blocks(2, M, h, params.nu, params.lam)
    out.update(B11=B11.toarray(), B12=B12.toarray(),
               B21=B21.toarray(), B22=B22.toarray())
    return out


def dense_c_matrix(rho_flat, dta, eps, M, h, dim):
    L = laplacian_nd(dim, M, h).toarray()
    return (np.diag(rho_flat) - 2.0 * dta * L
            + dta * eps * L @ np.diag(1.0 / rho_flat) @ L)
