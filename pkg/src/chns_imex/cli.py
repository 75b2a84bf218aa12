"""Command-line harness.

Subcommands:
  mms    manufactured-solution order study (single M or an M-list -> eoc.csv)
  run    physical test problems 1-3 with field dumps and diagnostics
  sweep  stiffness sweep: repeat a test over a list of C_p values

Option precedence: command-line flags > environment variables > config file >
defaults.  Environment variables mirror the flags with the prefix CHNS_ and
upper-case names (e.g. CHNS_CP=1e4, CHNS_LINEAR_SOLVER=multigrid).  The
config file (--config) holds plain "key = value" lines with the same keys as
the flags.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import pathlib
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from . import __version__
from .cases import DUMP_TIMES, initial_state
from .diagnostics import (ap_metrics, c_extrema, compute_eoc,
                          conservation_errors, error_norm, total_energy)
from .grid import GridSpec, extend_face_interior, faces_to_cells6
from .imex import DEFAULT_CFL, Integrator
from .mms import exact_momenta, exact_state, make_forcing
from .model import ModelParams
from .solvers import LinearSolverConfig

ENV_PREFIX = "CHNS_"


@dataclass
class RunConfig:
    command: str = "run"
    dim: int = 2
    test: int | None = None
    scheme: str = "star_dirksa"
    M: tuple = (64,)
    cp: float = 1e2
    cp1: float | None = None
    T: float = 0.1
    cfl: float = DEFAULT_CFL
    nu: float = 1.0
    lam: float = 0.1
    eps: float = 1e-4
    g: float = -10.0
    gamma: float = 5.0 / 3.0
    seed: int = 0
    out: str = "out"
    dump_times: tuple = ()
    linear_solver: str = "cg"

    def model_params(self) -> ModelParams:
        return ModelParams(cp=self.cp, cp1=self.cp1, gamma=self.gamma,
                           nu=self.nu, lam=self.lam, eps=self.eps, g=self.g)


_FIELD_TYPES = {
    "dim": int, "test": int, "scheme": str, "cp": float, "cp1": float,
    "T": float, "cfl": float, "nu": float, "lam": float, "eps": float,
    "g": float, "gamma": float, "seed": int, "out": str,
    "linear_solver": str,
}


def _parse_list(text, conv):
    return tuple(conv(tok) for tok in str(text).split(",") if tok.strip())


def _read_config_file(path: str) -> dict:
    values = {}
    for raw in pathlib.Path(path).read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"malformed config line: {raw!r}")
        key, val = (s.strip() for s in line.split("=", 1))
        values[key.replace("-", "_")] = val
    return values


def resolve_config(args: argparse.Namespace) -> RunConfig:
    """Merge flags, CHNS_* environment variables, and the config file."""
    file_vals = _read_config_file(args.config) if args.config else {}
    cfg = RunConfig(command=args.command)

    def lookup(name):
        flag = getattr(args, name, None)
        if flag is not None:
            return flag
        env = os.environ.get(ENV_PREFIX + name.upper())
        if env is not None:
            return env
        return file_vals.get(name)

    for name, conv in _FIELD_TYPES.items():
        if name == "cp" and args.command == "sweep":
            continue
        val = lookup(name)
        if val is not None:
            setattr(cfg, name, conv(val))
    for name, conv in (("M", int), ("dump_times", float)):
        val = lookup(name)
        if val is not None:
            setattr(cfg, name, _parse_list(val, conv))
    if args.command == "sweep":
        val = lookup("cp")
        cfg.cp_list = _parse_list(val, float) if val is not None else (1e2,)
    if args.command == "mms" and lookup("T") is None:
        cfg.T = 0.01
    return cfg


# ---------------------------------------------------------------------------
# CSV / manifest output
# ---------------------------------------------------------------------------

def _fmt(v):
    return repr(float(v)) if isinstance(v, (float, np.floating)) else v


def write_csv(path, header, rows):
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        for row in rows:
            w.writerow([_fmt(v) for v in row])


def write_manifest(outdir: pathlib.Path, cfg: RunConfig, extra=None):
    outdir.mkdir(parents=True, exist_ok=True)
    data = {"config": asdict(cfg), "version": __version__}
    if hasattr(cfg, "cp_list"):
        data["config"]["cp_list"] = list(cfg.cp_list)
    if extra:
        data.update(extra)
    (outdir / "manifest.json").write_text(json.dumps(data, indent=2,
                                                     sort_keys=True) + "\n")


def _centered_fields(U, grid):
    """Cell-centered primitive fields (velocities by sixth-order transfer)."""
    v1c = faces_to_cells6(extend_face_interior(U.v1(), "x"), "x")
    out = {"rho": U.rho, "v1": v1c, "c": U.q / U.rho}
    if grid.dim == 2:
        out["v2"] = faces_to_cells6(extend_face_interior(U.v2(), "y"), "y")
    return out


def write_fields(outdir, U, grid, t):
    f = _centered_fields(U, grid)
    x = grid.cell_centers()
    path = outdir / f"fields_t{t:g}.csv"
    if grid.dim == 1:
        rows = [(x[i], f["rho"][i], f["v1"][i], f["c"][i])
                for i in range(grid.M)]
        write_csv(path, ["x", "rho", "v1", "c"], rows)
    else:
        rows = [(x[i], x[j], f["rho"][i, j], f["v1"][i, j],
                 f["v2"][i, j], f["c"][i, j])
                for i in range(grid.M) for j in range(grid.M)]
        write_csv(path, ["x", "y", "rho", "v1", "v2", "c"], rows)


DIAG_HEADER = ["t", "steps", "mass_err", "phase_err", "div_v_norm",
               "rho_flatness", "grad_p_stiff_norm", "c_min", "c_max",
               "energy"]


def diag_row(t, steps, U, U0, grid, params):
    cons = conservation_errors(U, U0, grid)
    ap = ap_metrics(U, grid, params)
    cmin, cmax = c_extrema(U)
    return [t, steps, cons["mass"], cons["phase"], ap["div_v_norm"],
            ap["rho_flatness"], ap["grad_p_stiff_norm"], cmin, cmax,
            total_energy(U, grid, params)]


# ---------------------------------------------------------------------------
# subcommand drivers
# ---------------------------------------------------------------------------

def _integrator(grid, params, cfg, forcing=None):
    return Integrator(grid, params, scheme=cfg.scheme, cfl=cfg.cfl,
                      forcing=forcing,
                      linear_cfg=LinearSolverConfig(method=cfg.linear_solver))


def _mms_case(cfg: RunConfig, M: int, outdir: pathlib.Path):
    """One grid of the order study; fully independent of the other cases."""
    grid = GridSpec(dim=cfg.dim, M=M)
    params = cfg.model_params()
    integ = _integrator(grid, params, cfg,
                        forcing=make_forcing(grid, params))
    U0 = exact_state(grid, params, 0.0)
    t0 = time.perf_counter()
    res = integ.run_to_time(U0, cfg.T, dump_times=cfg.dump_times)
    wall = time.perf_counter() - t0
    ref = exact_state(grid, params, res.t)
    mom = exact_momenta(grid, params, res.t)
    err = error_norm(res.state, ref.rho, mom, ref.q, grid)
    case_dir = outdir / f"M{M}"
    write_fields(case_dir, res.state, grid, res.t)
    rows = [diag_row(res.t, res.n_steps, res.state, U0, grid, params)]
    write_csv(case_dir / "diagnostics.csv", DIAG_HEADER, rows)
    return err, wall


def run_mms(cfg: RunConfig) -> int:
    outdir = pathlib.Path(cfg.out)
    # one thread per grid; cases share no mutable state
    with ThreadPoolExecutor(max_workers=len(cfg.M)) as pool:
        results = list(pool.map(lambda M: _mms_case(cfg, M, outdir), cfg.M))
    errors = [r[0] for r in results]
    times = [r[1] for r in results]
    eoc = compute_eoc(cfg.M, errors)
    rows = [(M, e, "" if r is None else r, nst)
            for M, e, r, nst in zip(cfg.M, errors, eoc, times)]
    write_csv(outdir / "eoc.csv", ["M", "error", "eoc", "walltime_s"], rows)
    write_manifest(outdir, cfg)
    return 0


def run_test(cfg: RunConfig) -> int:
    if cfg.test is None:
        raise SystemExit("run: --test is required")
    outdir = pathlib.Path(cfg.out)
    grid = GridSpec(dim=cfg.dim, M=cfg.M[0])
    params = cfg.model_params()
    dumps = cfg.dump_times or tuple(t for t in DUMP_TIMES if t <= cfg.T + 1e-12)
    U0 = initial_state(cfg.test, grid, params, seed=cfg.seed)
    integ = _integrator(grid, params, cfg)
    res = integ.run_to_time(U0, cfg.T, dump_times=dumps)
    rows = []
    steps_at = lambda t: sum(1 for r in res.steps if r.t <= t + 1e-12)
    for t in sorted(res.dumps):
        U = res.dumps[t]
        write_fields(outdir, U, grid, t)
        rows.append(diag_row(t, steps_at(t), U, U0, grid, params))
    if res.t not in res.dumps:
        write_fields(outdir, res.state, grid, res.t)
        rows.append(diag_row(res.t, res.n_steps, res.state, U0, grid, params))
    write_csv(outdir / "diagnostics.csv", DIAG_HEADER, rows)
    write_manifest(outdir, cfg, extra={"n_steps": res.n_steps})
    return 0


def _sweep_case(cfg: RunConfig, cp: float):
    grid = GridSpec(dim=cfg.dim, M=cfg.M[0])
    params = ModelParams(cp=cp, cp1=cfg.cp1, gamma=cfg.gamma, nu=cfg.nu,
                         lam=cfg.lam, eps=cfg.eps, g=cfg.g)
    U0 = initial_state(cfg.test, grid, params, seed=cfg.seed)
    integ = _integrator(grid, params, cfg)
    t0 = time.perf_counter()
    res = integ.run_to_time(U0, cfg.T)
    wall = time.perf_counter() - t0
    cons = conservation_errors(res.state, U0, grid)
    return [cp, res.n_steps, cons["mass"], cons["phase"], wall]


def run_sweep(cfg: RunConfig) -> int:
    if cfg.test is None:
        raise SystemExit("sweep: --test is required")
    outdir = pathlib.Path(cfg.out)
    # one thread per stiffness value; cases share no mutable state
    with ThreadPoolExecutor(max_workers=len(cfg.cp_list)) as pool:
        rows = list(pool.map(lambda cp: _sweep_case(cfg, cp), cfg.cp_list))
    write_csv(outdir / "sweep.csv",
              ["cp", "steps", "mass_err", "phase_err", "walltime_s"], rows)
    write_manifest(outdir, cfg)
    return 0


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="chns",
        description="Staggered-grid IMEX solver for isentropic two-phase "
                    "flow (compressible Cahn-Hilliard-Navier-Stokes)")
    sub = p.add_subparsers(dest="command", required=True)
    for name, help_ in (("mms", "manufactured-solution order study"),
                        ("run", "physical test problem"),
                        ("sweep", "stiffness sweep over C_p")):
        q = sub.add_parser(name, help=help_)
        q.add_argument("--dim", type=int, choices=(1, 2))
        q.add_argument("--test", type=int, choices=(1, 2, 3))
        q.add_argument("--scheme", choices=("ee_ie", "star_dirksa"))
        q.add_argument("--M", help="grid size, or comma-separated list")
        q.add_argument("--cp", help="total pressure coefficient C_p "
                       "(comma list for sweep)")
        q.add_argument("--cp1", type=float, help="non-stiff coefficient "
                       "C_p1 (default sqrt(C_p))")
        q.add_argument("--T", type=float, help="final time")
        q.add_argument("--cfl", type=float)
        q.add_argument("--nu", type=float)
        q.add_argument("--lam", type=float)
        q.add_argument("--eps", type=float)
        q.add_argument("--g", type=float)
        q.add_argument("--gamma", type=float)
        q.add_argument("--seed", type=int)
        q.add_argument("--out", help="output directory")
        q.add_argument("--dump-times", dest="dump_times",
                       help="comma-separated snapshot times")
        q.add_argument("--linear-solver", dest="linear_solver",
                       choices=("direct", "cg", "multigrid"))
        q.add_argument("--config", help="key=value config file")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = resolve_config(args)
    if args.command == "mms":
        return run_mms(cfg)
    if args.command == "run":
        return run_test(cfg)
    return run_sweep(cfg)


if __name__ == "__main__":
    sys.exit(main())
