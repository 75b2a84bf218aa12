"""Derive the manufactured-solution forcing terms symbolically.

Plugs the prescribed exact solutions into the continuous equations and emits
the residual (the forcing that makes them exact) as a generated module,
src/chns_imex/_forcing.py.  Run from the repository root:

    python scripts/derive_forcing.py
"""

from __future__ import annotations

import pathlib

import sympy as sp
from sympy.printing.numpy import NumPyPrinter

x, y, t = sp.symbols("x y t", real=True)
delta, cp, gamma, nu, lam, eps, g = sp.symbols(
    "delta cp gamma nu lam eps g", positive=True, real=True)
# gravity is signed; re-declare without positivity
g = sp.Symbol("g", real=True)


def exact_1d():
    rho = 1 + delta * sp.cos(2 * sp.pi * x) * (t + 1)
    v = sp.Integer(0)
    c = sp.Rational(3, 4) - sp.Rational(1, 10) * (1 - delta) \
        * sp.cos(sp.pi * x) * (t - 1)
    return rho, v, c


def exact_2d():
    rho = 1 + delta * sp.cos(2 * sp.pi * x) * sp.cos(sp.pi * y) * (t + 1)
    v1 = (1 + delta) * (1 - sp.cos(2 * sp.pi * x)) * sp.sin(2 * sp.pi * y) \
        * (1 - 2 * t**2)
    v2 = (1 + delta) * (1 - sp.cos(2 * sp.pi * y)) * sp.sin(2 * sp.pi * x) \
        * (2 * t**2 - 1)
    c = sp.Rational(3, 4) - sp.Rational(1, 10) * (1 - delta) \
        * sp.cos(sp.pi * x) * sp.cos(sp.pi * y) * (t - 1)
    return rho, v1, v2, c


def pressure(rho):
    return cp * rho**gamma


def dpsi(c):
    return c**3 - c


def forcing_1d():
    rho, v, c = exact_1d()
    p = pressure(rho)
    mu = dpsi(c) - (eps / rho) * sp.diff(c, x, 2)
    s_rho = sp.diff(rho, t) + sp.diff(rho * v, x)
    s_m = sp.diff(rho * v, t) + sp.diff(rho * v**2 + p, x) \
        - rho * g \
        - sp.diff((2 * nu + lam) * sp.diff(v, x)
                  - (eps / 2) * sp.diff(c, x) ** 2, x)
    s_q = sp.diff(rho * c, t) + sp.diff(rho * c * v, x) - sp.diff(mu, x, 2)
    return [sp.expand_mul(e.doit()) for e in (s_rho, s_m, s_q)]


def forcing_2d():
    rho, v1, v2, c = exact_2d()
    p = pressure(rho)
    cx, cy = sp.diff(c, x), sp.diff(c, y)
    lap_c = sp.diff(c, x, 2) + sp.diff(c, y, 2)
    mu = dpsi(c) - (eps / rho) * lap_c
    lap = lambda f: sp.diff(f, x, 2) + sp.diff(f, y, 2)

    s_rho = sp.diff(rho, t) + sp.diff(rho * v1, x) + sp.diff(rho * v2, y)
    s_m1 = sp.diff(rho * v1, t) \
        + sp.diff(rho * v1**2 + p, x) + sp.diff(rho * v1 * v2, y) \
        - (eps / 2) * sp.diff(cy**2 - cx**2, x) + eps * sp.diff(cx * cy, y) \
        - nu * lap(v1) - (nu + lam) * (sp.diff(v1, x, 2)
                                       + sp.diff(v2, x, y))
    s_m2 = sp.diff(rho * v2, t) \
        + sp.diff(rho * v2**2 + p, y) + sp.diff(rho * v1 * v2, x) \
        - rho * g \
        - (eps / 2) * sp.diff(cx**2 - cy**2, y) + eps * sp.diff(cx * cy, x) \
        - nu * lap(v2) - (nu + lam) * (sp.diff(v1, x, y)
                                       + sp.diff(v2, y, 2))
    s_q = sp.diff(rho * c, t) + sp.diff(rho * c * v1, x) \
        + sp.diff(rho * c * v2, y) - lap(mu)
    return [sp.expand_mul(e.doit()) for e in (s_rho, s_m1, s_m2, s_q)]


def emit_function(name, args, exprs, printer):
    reps, reduced = sp.cse(exprs, optimizations="basic")
    lines = [f"def {name}({', '.join(args)}):"]
    for sym, e in reps:
        lines.append(f"    {sym} = {printer.doprint(e)}")
    out = ", ".join(printer.doprint(e) for e in reduced)
    lines.append(f"    return ({out})")
    return "\n".join(lines)


HEADER = '''"""Closed-form manufactured-solution forcing terms.

GENERATED by scripts/derive_forcing.py -- do not edit by hand.
Each function returns the source terms that, added to the right-hand side,
make the prescribed space-time fields an exact solution of the continuous
equations.  Arguments are coordinate arrays plus scalar parameters.
"""

import numpy
from numpy import pi

'''


def main():
    printer = NumPyPrinter()
    parts = [HEADER]
    parts.append(emit_function(
        "forcing_1d", ["x", "t", "delta", "cp", "gamma", "nu", "lam",
                       "eps", "g"], forcing_1d(), printer))
    parts.append("\n\n")
    parts.append(emit_function(
        "forcing_2d", ["x", "y", "t", "delta", "cp", "gamma", "nu", "lam",
                       "eps", "g"], forcing_2d(), printer))
    parts.append("\n")
    dest = pathlib.Path(__file__).resolve().parents[1] / "src" / \
        "chns_imex" / "_forcing.py"
    dest.write_text("".join(parts))
    print(f"wrote {dest}")


if __name__ == "__main__":
    main()
