"""IMEX partitioned Runge-Kutta time integration.

Each stage first assembles the explicit "hat" data, then solves the implicit
subsystems in sequence: a Newton iteration for density and velocities,
followed by a linear SPD solve for the concentration.  The stage tendency is
reconstructed algebraically from the solved stage state, so the final update
of a stiffly accurate scheme reproduces the last stage exactly.

The time step is chosen from a CFL condition on the *non-stiff* part of the
characteristic speed (advection plus the non-stiff pressure sound speed),
evaluated at the previous step's stage states, so the step size stays uniform
as the stiff pressure coefficient grows.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from . import model
from .grid import GridSpec
from .model import ModelParams, NonPositiveDensityError
from .solvers import (HydroSolver, LinearSolverConfig, NewtonConfig,
                      SolveStats, SolverFailure, solve_c_stage)
from .spatial import SpatialDiscretization
from .state import State

log = logging.getLogger(__name__)

DEFAULT_CFL = 0.4
MAX_RETRIES = 5


@dataclass
class ButcherPair:
    """An explicit tableau (at, bt) paired with a DIRK tableau (a, b)."""
    name: str
    at: np.ndarray
    bt: np.ndarray
    a: np.ndarray
    b: np.ndarray

    @property
    def stages(self) -> int:
        return len(self.bt)

    @property
    def ct(self) -> np.ndarray:
        return self.at.sum(axis=1)

    @property
    def stiffly_accurate(self) -> bool:
        return bool(np.allclose(self.a[-1], self.b))


def make_tableau(name: str) -> ButcherPair:
    if name in ("ee_ie", "ee-ie"):
        return ButcherPair("ee_ie",
                           at=np.array([[0.0]]), bt=np.array([1.0]),
                           a=np.array([[1.0]]), b=np.array([1.0]))
    if name in ("star_dirksa", "*-dirksa", "dirksa"):
        s = 1.0 / np.sqrt(2.0)
        return ButcherPair("star_dirksa",
                           at=np.array([[0.0, 0.0], [1.0 + s, 0.0]]),
                           bt=np.array([s, 1.0 - s]),
                           a=np.array([[1.0 - s, 0.0], [s, 1.0 - s]]),
                           b=np.array([s, 1.0 - s]))
    raise ValueError(f"unknown scheme {name!r}")


@dataclass
class StepRecord:
    t: float
    dt: float
    newton_iters: int
    lin_iters: int
    factorizations: int
    retries: int


@dataclass
class RunResult:
    state: State
    t: float
    steps: list = field(default_factory=list)
    dumps: dict = field(default_factory=dict)

    @property
    def n_steps(self) -> int:
        return len(self.steps)


class Integrator:
    def __init__(self, grid: GridSpec, params: ModelParams,
                 scheme: str = "star_dirksa", cfl: float = DEFAULT_CFL,
                 forcing=None, mass_diffusion_mode: str = "reconstructed",
                 newton_cfg: NewtonConfig | None = None,
                 linear_cfg: LinearSolverConfig | None = None):
        self.grid = grid
        self.params = params
        self.tab = make_tableau(scheme)
        self.cfl = cfl
        self.forcing = forcing
        self.sp = SpatialDiscretization(grid, params,
                                        mass_diffusion_mode=mass_diffusion_mode)
        self.hydro = HydroSolver(grid, params, newton_cfg)
        self.linear_cfg = linear_cfg or LinearSolverConfig()
        self._speed = None    # lagged non-stiff characteristic speed

    # -- time-step selection -------------------------------------------------

    def _state_speed(self, U: State) -> float:
        v = float(np.max(np.abs(U.v1()))) if U.mx.size else 0.0
        if self.grid.dim == 2:
            v = max(v, float(np.max(np.abs(U.v2()))))
        s = float(np.max(model.sound_speed(U.rho, self.params)))
        return v + s

    def select_dt(self, U: State) -> float:
        speed = self._speed if self._speed is not None else self._state_speed(U)
        if speed <= 0.0:
            return self.cfl * self.grid.h
        return self.cfl * self.grid.h / speed

    # -- one stage ------------------------------------------------------------

    def _solve_stage(self, hat: State, tilde: State, dta: float,
                     stats: SolveStats) -> State:
        z0 = self.hydro.pack(tilde.rho, tilde.v1(),
                             None if self.grid.dim == 1 else tilde.v2())
        r = self.hydro.pack(hat.rho, hat.mx,
                            None if self.grid.dim == 1 else hat.my)
        z = self.hydro.solve(z0, r, dta, stats)
        rho_v, v1_v, v2_v = self.hydro.unpack(z)
        M = self.grid.M
        if self.grid.dim == 1:
            rho = rho_v.copy()
            v1 = v1_v.copy()
            v2 = None
        else:
            rho = rho_v.reshape((M, M), order="F")
            v1 = v1_v.reshape((M - 1, M), order="F")
            v2 = v2_v.reshape((M, M - 1), order="F")
        C = solve_c_stage(rho, hat.q, dta, self.params.eps, self.grid,
                          self.linear_cfg, stats)
        U = State(rho=rho, mx=None, q=rho * C, my=None)
        U.mx = U.rho_star_x() * v1
        if self.grid.dim == 2:
            U.my = U.rho_star_y() * v2
        return U

    # -- one step ------------------------------------------------------------

    def attempt_step(self, Un: State, t: float, dt: float,
                     stats: SolveStats) -> State:
        tab = self.tab
        s = tab.stages
        K: list[State] = []
        speeds = [self._state_speed(Un)]
        U_last = Un
        for i in range(s):
            tilde = Un.copy()
            for j in range(i):
                tilde.axpy(dt * tab.at[i, j], K[j])
            tilde.check_valid()
            frc = self.forcing(t + tab.ct[i] * dt) if self.forcing else None
            E = self.sp.explicit_tendency(tilde, frc)
            hat_pre = Un.copy()
            for j in range(i):
                hat_pre.axpy(dt * tab.a[i, j], K[j])
            dta = dt * tab.a[i, i]
            hat = hat_pre.copy().axpy(dta, E)
            U_i = self._solve_stage(hat, tilde, dta, stats)
            U_i.check_valid()
            K.append((U_i - hat_pre) * (1.0 / dta))
            speeds.append(self._state_speed(U_i))
            U_last = U_i
        self._last_K = K
        if tab.stiffly_accurate:
            U_new = U_last
        else:
            U_new = Un.copy()
            for j in range(s):
                U_new.axpy(dt * tab.b[j], K[j])
            U_new.check_valid()
        self._speed = max(speeds)
        return U_new

    def step(self, Un: State, t: float, dt: float):
        """Advance one step with up to MAX_RETRIES halvings on failure."""
        retries = 0
        while True:
            stats = SolveStats()
            try:
                U_new = self.attempt_step(Un, t, dt, stats)
                rec = StepRecord(t=t + dt, dt=dt,
                                 newton_iters=stats.newton_iters,
                                 lin_iters=stats.lin_iters,
                                 factorizations=stats.factorizations,
                                 retries=retries)
                return U_new, rec
            except (SolverFailure, NonPositiveDensityError,
                    FloatingPointError) as exc:
                self.hydro.invalidate()
                retries += 1
                if retries > MAX_RETRIES:
                    raise SolverFailure(
                        f"step at t={t:.6g} failed after {MAX_RETRIES} "
                        f"halvings: {exc}") from exc
                dt *= 0.5
                log.warning("retrying step at t=%.6g with dt=%.3e (%s)",
                            t, dt, exc)

    # -- run loop ------------------------------------------------------------

    def run_to_time(self, U0: State, T: float,
                    dump_times=None, t0: float = 0.0,
                    on_step=None) -> RunResult:
        """Integrate from t0 to T, recording snapshots at the dump times.

        `on_step(state, record)` is invoked after every accepted step.
        """
        tiny = 1e-12
        dumps_left = sorted(dt_ for dt_ in (dump_times or [])
                            if dt_ > t0 + tiny)
        result = RunResult(state=U0.copy(), t=t0)
        if dump_times and any(abs(d - t0) <= tiny for d in dump_times):
            result.dumps[t0] = U0.copy()
        U, t = U0.copy(), t0
        self._speed = None
        while t < T - tiny:
            dt = self.select_dt(U)
            target = dumps_left[0] if dumps_left else T
            dt = min(dt, min(target, T) - t)
            U, rec = self.step(U, t, dt)
            t = rec.t
            result.steps.append(rec)
            if on_step is not None:
                on_step(U, rec)
            if dumps_left and t >= dumps_left[0] - tiny:
                result.dumps[dumps_left.pop(0)] = U.copy()
        result.state, result.t = U, t
        return result
