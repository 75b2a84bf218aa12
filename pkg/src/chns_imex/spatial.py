"""Semi-discrete tendency operators on the staggered grid.

The right-hand side is split for IMEX integration into terms evaluated at an
explicit ("tilde") state and terms evaluated at the implicit state:

* convective:  mass transport div(rho_* v) from the implicit state plus its
  Rusanov diffusion from the explicit state; momentum and phase-momentum
  fluxes fully explicit (WENO5-reconstructed Rusanov fluxes);
* pressure/gravity:  stiff pressure gradient -grad p2 implicit, gravity on
  the explicit density;
* capillary:  explicit, from the explicit concentration;
* Cahn-Hilliard:  convex part (2 Laplacian and the fourth-order term)
  implicit, concave flux-form part explicit;
* viscous:  implicit.

All operators are matrix-free; sparse assemblies of the same operators live
in the operators module and in the test-suite oracles.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from . import model
from .grid import (GHOST, GridSpec, apply_fd_operator, cells_to_faces6,
                   dual_transpose, extend_cell, extend_face_full,
                   extend_face_interior, face_average, faces_to_cells6,
                   laplacian_neumann)
from .model import ModelParams
from .state import State
from .weno import reconstruct_lr_cells, reconstruct_lr_faces

log = logging.getLogger(__name__)


def _grad_to_faces(f: np.ndarray, axis, h: float) -> np.ndarray:
    """Two-point gradient of a cell field at interior faces: (f_{i+1}-f_i)/h."""
    return -dual_transpose(f, axis, h)


@dataclass
class SpatialDiscretization:
    grid: GridSpec
    params: ModelParams
    #: 'reconstructed' uses WENO states in the mass Rusanov diffusion,
    #: 'cell' uses raw neighbouring cell values
    mass_diffusion_mode: str = "reconstructed"
    _warned_sound: bool = field(default=False, repr=False)

    # -- small helpers ----------------------------------------------------

    def _sound(self, rho: np.ndarray) -> np.ndarray:
        """Non-stiff sound speed; nonpositive reconstructed densities fall
        back to zero sound speed (advective bound only), logged once."""
        bad = rho <= 0.0
        if np.any(bad):
            if not self._warned_sound:
                log.warning("nonpositive reconstructed density; "
                            "using |v| bound for the numerical viscosity")
                self._warned_sound = True
            safe = np.where(bad, 1.0, rho)
            s = model.sound_speed(safe, self.params)
            return np.where(bad, 0.0, s)
        return model.sound_speed(rho, self.params)

    def _lam(self, vm, vp, rm, rp) -> np.ndarray:
        return np.maximum(np.abs(vm) + self._sound(rm),
                          np.abs(vp) + self._sound(rp))

    def _dual(self, f, axis):
        return apply_fd_operator("dual", axis, f, self.grid.h)

    # -- convection --------------------------------------------------------

    def convective(self, Ut: State, U: State) -> State:
        if self.grid.dim == 1:
            return self._convective_1d(Ut, U)
        return self._convective_2d(Ut, U)

    def _mass_diffusion(self, rho: np.ndarray, lam: np.ndarray, axis,
                        rho_m: np.ndarray, rho_p: np.ndarray) -> np.ndarray:
        """Rusanov diffusion contribution to the mass tendency along an axis.

        lam, rho_m, rho_p live at all faces 0..M; wall entries cancel by the
        mirror symmetry of the density.
        """
        if self.mass_diffusion_mode == "reconstructed":
            jump = rho_p - rho_m
        elif self.mass_diffusion_mode == "cell":
            jump = np.zeros_like(lam)
            sl_lo = [slice(None)] * rho.ndim
            sl_hi = [slice(None)] * rho.ndim
            ax = 0 if axis in (0, "x") else 1
            sl_lo[ax] = slice(None, -1)
            sl_hi[ax] = slice(1, None)
            interior = [slice(None)] * rho.ndim
            interior[ax] = slice(1, -1)
            jump[tuple(interior)] = rho[tuple(sl_hi)] - rho[tuple(sl_lo)]
        else:
            raise ValueError(self.mass_diffusion_mode)
        d = 0.5 * lam * jump
        ax = 0 if axis in (0, "x") else 1
        interior = [slice(None)] * d.ndim
        interior[ax] = slice(1, -1)
        return self._dual(d[tuple(interior)], axis)

    def _convective_1d(self, Ut: State, U: State) -> State:
        g, h, p = GHOST, self.grid.h, self.params
        out = U.zeros_like()

        # explicit primitive data
        rho_t = Ut.rho
        v1_ext = extend_face_interior(Ut.v1(), "x")
        v1c = faces_to_cells6(v1_ext, "x")
        ext_rho = extend_cell(rho_t, "x", "sym")

        # mass: implicit centered transport + explicit Rusanov diffusion
        out.rho = -self._dual(U.mx, "x")
        rho_m, rho_p = reconstruct_lr_cells(ext_rho, "x")
        vc_m, vc_p = reconstruct_lr_cells(extend_cell(v1c, "x", "odd"), "x")
        lam_rho = self._lam(vc_m, vc_p, rho_m, rho_p)
        out.rho += self._mass_diffusion(rho_t, lam_rho, "x", rho_m, rho_p)

        # momentum: dual-grid reconstruction of rho v^2 + p1 and rho v
        rho_f = cells_to_faces6(ext_rho, "x")
        v1_full = v1_ext[g:-g]
        flux = rho_f * v1_full**2 + model.p1(rho_f, p)
        F_m, F_p = reconstruct_lr_faces(extend_face_full(flux, "x", 1.0), "x")
        mom = rho_f * v1_full
        m_m, m_p = reconstruct_lr_faces(extend_face_full(mom, "x", -1.0), "x")
        vf_m, vf_p = reconstruct_lr_faces(
            extend_face_full(v1_full, "x", -1.0), "x")
        rf_m, rf_p = reconstruct_lr_faces(
            extend_face_full(rho_f, "x", 1.0), "x")
        lam_m = self._lam(vf_m, vf_p, rf_m, rf_p)
        Fhat = 0.5 * (F_p + F_m) - 0.5 * lam_m * (m_p - m_m)
        out.mx = dual_transpose(Fhat, "x", h)

        # phase momentum: primal reconstruction of rho c v
        r = Ut.q * v1c
        r_m, r_p = reconstruct_lr_cells(extend_cell(r, "x", "odd"), "x")
        q_m, q_p = reconstruct_lr_cells(extend_cell(Ut.q, "x", "sym"), "x")
        Fc = 0.5 * (r_p + r_m) - 0.5 * lam_rho * (q_p - q_m)
        out.q = -(Fc[1:] - Fc[:-1]) / h
        return out

    def _convective_2d(self, Ut: State, U: State) -> State:
        g, h, p = GHOST, self.grid.h, self.params
        out = U.zeros_like()
        rho_t = Ut.rho
        v1, v2 = Ut.v1(), Ut.v2()
        v1_ext = extend_face_interior(v1, "x")
        v2_ext = extend_face_interior(v2, "y")
        v1c = faces_to_cells6(v1_ext, "x")          # v1 at centers
        v2c = faces_to_cells6(v2_ext, "y")
        ext_rho_x = extend_cell(rho_t, "x", "sym")
        ext_rho_y = extend_cell(rho_t, "y", "sym")

        # ---- mass ----
        out.rho = -self._dual(U.mx, "x") - self._dual(U.my, "y")
        rxm, rxp = reconstruct_lr_cells(ext_rho_x, "x")
        vxm, vxp = reconstruct_lr_cells(extend_cell(v1c, "x", "odd"), "x")
        lam_rho_x = self._lam(vxm, vxp, rxm, rxp)
        out.rho += self._mass_diffusion(rho_t, lam_rho_x, "x", rxm, rxp)
        rym, ryp = reconstruct_lr_cells(ext_rho_y, "y")
        vym, vyp = reconstruct_lr_cells(extend_cell(v2c, "y", "odd"), "y")
        lam_rho_y = self._lam(vym, vyp, rym, ryp)
        out.rho += self._mass_diffusion(rho_t, lam_rho_y, "y", rym, ryp)

        # ---- x-momentum ----
        rho_xf = cells_to_faces6(ext_rho_x, "x")    # (M+1, M), walls included
        v1_full = v1_ext[g:-g, :]
        flux = rho_xf * v1_full**2 + model.p1(rho_xf, p)
        F_m, F_p = reconstruct_lr_faces(extend_face_full(flux, "x", 1.0), "x")
        mom = rho_xf * v1_full
        m_m, m_p = reconstruct_lr_faces(extend_face_full(mom, "x", -1.0), "x")
        vf_m, vf_p = reconstruct_lr_faces(
            extend_face_full(v1_full, "x", -1.0), "x")
        rf_m, rf_p = reconstruct_lr_faces(
            extend_face_full(rho_xf, "x", 1.0), "x")
        lam = self._lam(vf_m, vf_p, rf_m, rf_p)
        Fhat = 0.5 * (F_p + F_m) - 0.5 * lam * (m_p - m_m)
        out.mx = dual_transpose(Fhat, "x", h)

        # corner flux rho v1 v2 at (i+1/2, j+1/2): v2 brought to x-faces by
        # corner averaging in x and a sixth-order transfer in y
        v2_xf = faces_to_cells6(
            extend_face_interior(face_average(v2, "x"), "y"), "y")
        rho_xfi = rho_xf[1:-1, :]
        # parities across a y-wall: both velocity components are odd, so the
        # transported flux rho*v1*v2 is even and the momentum rho*v1 is odd
        qty = rho_xfi * v1 * v2_xf
        c_m, c_p = reconstruct_lr_cells(extend_cell(qty, "y", "sym"), "y")
        mx_s = rho_xfi * v1
        mxm, mxp = reconstruct_lr_cells(extend_cell(mx_s, "y", "odd"), "y")
        w_m, w_p = reconstruct_lr_cells(extend_cell(v2_xf, "y", "odd"), "y")
        rr_m, rr_p = reconstruct_lr_cells(extend_cell(rho_xfi, "y", "sym"), "y")
        lam_c = self._lam(w_m, w_p, rr_m, rr_p)
        Ghat = 0.5 * (c_p + c_m) - 0.5 * lam_c * (mxp - mxm)
        out.mx += -(Ghat[:, 1:] - Ghat[:, :-1]) / h

        # ---- y-momentum ----
        rho_yf = cells_to_faces6(ext_rho_y, "y")    # (M, M+1)
        v2_full = v2_ext[:, g:-g]
        flux = rho_yf * v2_full**2 + model.p1(rho_yf, p)
        G_m, G_p = reconstruct_lr_faces(extend_face_full(flux, "y", 1.0), "y")
        mom = rho_yf * v2_full
        m_m, m_p = reconstruct_lr_faces(extend_face_full(mom, "y", -1.0), "y")
        vf_m, vf_p = reconstruct_lr_faces(
            extend_face_full(v2_full, "y", -1.0), "y")
        rf_m, rf_p = reconstruct_lr_faces(
            extend_face_full(rho_yf, "y", 1.0), "y")
        lam = self._lam(vf_m, vf_p, rf_m, rf_p)
        Ghat_c = 0.5 * (G_p + G_m) - 0.5 * lam * (m_p - m_m)
        out.my = dual_transpose(Ghat_c, "y", h)

        v1_yf = faces_to_cells6(
            extend_face_interior(face_average(v1, "y"), "x"), "x")
        rho_yfi = rho_yf[:, 1:-1]
        qty = rho_yfi * v1_yf * v2
        c_m, c_p = reconstruct_lr_cells(extend_cell(qty, "x", "sym"), "x")
        my_s = rho_yfi * v2
        mym, myp = reconstruct_lr_cells(extend_cell(my_s, "x", "odd"), "x")
        w_m, w_p = reconstruct_lr_cells(extend_cell(v1_yf, "x", "odd"), "x")
        rr_m, rr_p = reconstruct_lr_cells(extend_cell(rho_yfi, "x", "sym"), "x")
        lam_c = self._lam(w_m, w_p, rr_m, rr_p)
        Fhat_c = 0.5 * (c_p + c_m) - 0.5 * lam_c * (myp - mym)
        out.my += -(Fhat_c[1:, :] - Fhat_c[:-1, :]) / h

        # ---- phase momentum ----
        r = Ut.q * v1c
        r_m, r_p = reconstruct_lr_cells(extend_cell(r, "x", "odd"), "x")
        q_m, q_p = reconstruct_lr_cells(extend_cell(Ut.q, "x", "sym"), "x")
        Fc = 0.5 * (r_p + r_m) - 0.5 * lam_rho_x * (q_p - q_m)
        out.q = -(Fc[1:, :] - Fc[:-1, :]) / h
        r = Ut.q * v2c
        r_m, r_p = reconstruct_lr_cells(extend_cell(r, "y", "odd"), "y")
        q_m, q_p = reconstruct_lr_cells(extend_cell(Ut.q, "y", "sym"), "y")
        Gc = 0.5 * (r_p + r_m) - 0.5 * lam_rho_y * (q_p - q_m)
        out.q += -(Gc[:, 1:] - Gc[:, :-1]) / h
        return out

    # -- pressure and gravity ----------------------------------------------

    def pressure(self, U: State) -> State:
        """Implicit stiff pressure gradient -grad p2."""
        h = self.grid.h
        out = U.zeros_like()
        p2 = model.p2_centered(U.rho, self.params, float(U.rho.mean()))
        out.mx = dual_transpose(p2, "x", h)
        if self.grid.dim == 2:
            out.my = dual_transpose(p2, "y", h)
        return out

    def gravity(self, Ut: State) -> State:
        """Explicit buoyancy source on the vertical momentum."""
        out = Ut.zeros_like()
        if self.grid.dim == 1:
            out.mx = self.params.g * face_average(Ut.rho, "x")
        else:
            out.my = self.params.g * face_average(Ut.rho, "y")
        return out

    def pressure_gravity(self, Ut: State, U: State) -> State:
        return self.pressure(U).axpy(1.0, self.gravity(Ut))

    # -- capillary forces ---------------------------------------------------

    def capillary(self, Ut: State) -> State:
        h, eps = self.grid.h, self.params.eps
        out = Ut.zeros_like()
        c = Ut.c()
        if self.grid.dim == 1:
            cx2 = apply_fd_operator("center", "x", c, h) ** 2
            out.mx = -0.5 * eps * _grad_to_faces(cx2, "x", h)
            return out
        cx2 = apply_fd_operator("center", "x", c, h) ** 2
        cy2 = apply_fd_operator("center", "y", c, h) ** 2
        corner_cx = face_average(_grad_to_faces(c, "x", h), "y")
        corner_cy = face_average(_grad_to_faces(c, "y", h), "x")
        cxcy = corner_cx * corner_cy
        out.mx = eps * (0.5 * _grad_to_faces(cy2 - cx2, "x", h)
                        - self._dual(cxcy, "y"))
        out.my = eps * (0.5 * _grad_to_faces(cx2 - cy2, "y", h)
                        - self._dual(cxcy, "x"))
        return out

    # -- Cahn-Hilliard -------------------------------------------------------

    def ch_convex(self, U: State) -> State:
        """Implicit (convex) phase-field tendency."""
        h, eps = self.grid.h, self.params.eps
        out = U.zeros_like()
        lap = laplacian_neumann(U.q / U.rho, h)
        out.q = 2.0 * lap - eps * laplacian_neumann(lap / U.rho, h)
        return out

    def ch_concave(self, Ut: State) -> State:
        """Explicit (concave) phase-field tendency in flux form."""
        h = self.grid.h
        out = Ut.zeros_like()
        ct = Ut.q / Ut.rho
        psi2 = model.ddpsi2(ct)
        axes = ("x",) if self.grid.dim == 1 else ("x", "y")
        for ax in axes:
            a = 0 if ax == "x" else 1
            hi = [slice(None)] * ct.ndim
            lo = [slice(None)] * ct.ndim
            hi[a], lo[a] = slice(1, None), slice(None, -1)
            hi, lo = tuple(hi), tuple(lo)
            flux = 0.5 * (psi2[hi] + psi2[lo]) * (ct[hi] - ct[lo]) / h
            out.q += self._dual(flux, ax)
        return out

    def cahn_hilliard(self, Ut: State, U: State) -> State:
        return self.ch_convex(U).axpy(1.0, self.ch_concave(Ut))

    # -- viscosity -----------------------------------------------------------

    def _dtd(self, v: np.ndarray, axis) -> np.ndarray:
        """D^T D along an axis: wall-anchored negated second difference."""
        return dual_transpose(self._dual(v, axis), axis, self.grid.h)

    def _rop(self, v: np.ndarray, axis) -> np.ndarray:
        """Negated second difference transverse to a face field, with the
        stronger (-3v) no-slip wall rows."""
        a = 0 if axis in (0, "x") else 1
        h2 = self.grid.h ** 2
        out = np.empty_like(v, dtype=float)
        mid = [slice(None)] * v.ndim
        hi = [slice(None)] * v.ndim
        lo = [slice(None)] * v.ndim
        mid[a], hi[a], lo[a] = slice(1, -1), slice(2, None), slice(None, -2)
        out[tuple(mid)] = (2 * v[tuple(mid)] - v[tuple(hi)]
                           - v[tuple(lo)]) / h2
        first = [slice(None)] * v.ndim
        second = [slice(None)] * v.ndim
        first[a], second[a] = slice(0, 1), slice(1, 2)
        out[tuple(first)] = (3 * v[tuple(first)] - v[tuple(second)]) / h2
        last = [slice(None)] * v.ndim
        penult = [slice(None)] * v.ndim
        last[a], penult[a] = slice(-1, None), slice(-2, -1)
        out[tuple(last)] = (3 * v[tuple(last)] - v[tuple(penult)]) / h2
        return out

    def viscous_apply(self, v1: np.ndarray, v2: np.ndarray | None = None):
        """Apply the symmetric viscous blocks to face velocities.

        Returns (A11 v1 + A12 v2, A21 v1 + A22 v2) in 2D, (A v,) in 1D.
        """
        nu, lam = self.params.nu, self.params.lam
        if self.grid.dim == 1:
            return ((2 * nu + lam) * self._dtd(v1, "x"),)
        a1 = (2 * nu + lam) * self._dtd(v1, "x") + nu * self._rop(v1, "y") \
            + (nu + lam) * dual_transpose(self._dual(v2, "y"), "x",
                                          self.grid.h)
        a2 = (2 * nu + lam) * self._dtd(v2, "y") + nu * self._rop(v2, "x") \
            + (nu + lam) * dual_transpose(self._dual(v1, "x"), "y",
                                          self.grid.h)
        return a1, a2

    def viscous(self, U: State) -> State:
        out = U.zeros_like()
        if self.grid.dim == 1:
            (a,) = self.viscous_apply(U.v1())
            out.mx = -a
            return out
        a1, a2 = self.viscous_apply(U.v1(), U.v2())
        out.mx, out.my = -a1, -a2
        return out

    # -- IMEX split and full right-hand side ----------------------------------

    def mass_divergence(self, U: State) -> State:
        """Implicit centered mass transport -div(rho_* v)."""
        out = U.zeros_like()
        out.rho = -self._dual(U.mx, "x")
        if self.grid.dim == 2:
            out.rho -= self._dual(U.my, "y")
        return out

    def explicit_tendency(self, Ut: State,
                          forcing: State | None = None) -> State:
        """All terms evaluated at the explicitly-known stage state."""
        out = self.convective(Ut, Ut.zeros_like())
        for t in (self.gravity(Ut), self.capillary(Ut), self.ch_concave(Ut)):
            out.axpy(1.0, t)
        if forcing is not None:
            out.axpy(1.0, forcing)
        return out

    def implicit_tendency(self, U: State) -> State:
        """All terms evaluated at the implicitly-solved stage state."""
        out = self.mass_divergence(U)
        for t in (self.pressure(U), self.ch_convex(U), self.viscous(U)):
            out.axpy(1.0, t)
        return out

    def total_rhs(self, Ut: State, U: State,
                  forcing: State | None = None) -> State:
        return self.explicit_tendency(Ut, forcing).axpy(
            1.0, self.implicit_tendency(U))
