"""Equation of state, pressure splitting, potential splitting."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from chns_imex import model
from chns_imex.model import ModelParams, NonPositiveDensityError


def test_defaults():
    p = ModelParams()
    assert p.cp == 1e2
    assert p.cp1 == pytest.approx(10.0)
    assert p.cp2 == pytest.approx(90.0)
    assert p.delta == pytest.approx(1e-2)
    assert p.gamma == pytest.approx(5.0 / 3.0)
    assert (p.nu, p.lam, p.eps, p.g) == (1.0, 0.1, 1e-4, -10.0)


@given(st.floats(1.0, 1e8))
def test_pressure_split_consistent(cp):
    p = ModelParams(cp=cp)
    rho = np.linspace(0.5, 1.5, 7)
    total = model.p1(rho, p) + model.p2(rho, p)
    np.testing.assert_allclose(total, cp * rho ** p.gamma, rtol=1e-12)


def test_validation_errors():
    with pytest.raises(ValueError):
        ModelParams(cp=1.0, cp1=2.0)     # cp2 < 0
    with pytest.raises(ValueError):
        ModelParams(gamma=1.0)
    with pytest.raises(ValueError):
        ModelParams(nu=-1.0)


def test_nonpositive_density_raises():
    p = ModelParams()
    with pytest.raises(NonPositiveDensityError):
        model.p1(np.array([1.0, -0.5]), p)
    with pytest.raises(NonPositiveDensityError):
        model.sound_speed(0.0, p)


def test_sound_speed_definition():
    p = ModelParams(cp=1e4)
    rho = np.array([0.7, 1.0, 1.3])
    np.testing.assert_allclose(model.sound_speed(rho, p) ** 2,
                               p.gamma * p.cp1 * rho ** (p.gamma - 1.0),
                               rtol=1e-13)


def test_derivatives_finite_difference():
    p = ModelParams(cp=37.0, cp1=4.0)
    rho, d = 1.13, 1e-6
    fd1 = (model.p1(rho + d, p) - model.p1(rho - d, p)) / (2 * d)
    fd2 = (model.p2(rho + d, p) - model.p2(rho - d, p)) / (2 * d)
    assert model.dp1(rho, p) == pytest.approx(fd1, rel=1e-8)
    assert model.dp2(rho, p) == pytest.approx(fd2, rel=1e-8)


def test_p2_centered_matches_difference():
    p = ModelParams(cp=1e2)
    rho = np.linspace(0.6, 1.4, 9)
    ref = 1.05
    np.testing.assert_allclose(model.p2_centered(rho, p, ref),
                               model.p2(rho, p) - model.p2(ref, p),
                               rtol=1e-10, atol=1e-10)


def test_p2_centered_accurate_at_stiff_cp():
    """At cp=1e8 the centered form retains relative accuracy where the
    naive difference has only ~1e-8 absolute accuracy."""
    p = ModelParams(cp=1e8)
    u = 2.0 ** -25                     # exactly representable in 1 + u
    got = float(model.p2_centered(np.array([1.0 + u]), p, 1.0)[0])
    exact = p.cp2 * p.gamma * u * (1 + (p.gamma - 1) / 2 * u)  # series
    assert got == pytest.approx(exact, rel=1e-9)


def test_potential_split():
    c = np.linspace(-1.5, 1.5, 11)
    # psi'(c) = c^3 - c splits into 2c (convex) + c^3 - 3c (concave)
    np.testing.assert_allclose(model.dpsi1(c) + model.dpsi2(c), c**3 - c,
                               rtol=0, atol=1e-14)
    d = 1e-6
    fd = (model.dpsi2(c + d) - model.dpsi2(c - d)) / (2 * d)
    np.testing.assert_allclose(model.ddpsi2(c), fd, rtol=1e-7, atol=1e-7)
    np.testing.assert_allclose(model.psi(np.array([1.0, -1.0, 0.0])),
                               [0.0, 0.0, 0.25], atol=1e-15)


def test_eval_helpers():
    p = ModelParams()
    out = model.eos_eval(np.array([1.0]), p)
    assert set(out) == {"p1", "p2", "dp1", "dp2", "sound"}
    pot = model.potential_eval(0.5)
    assert set(pot) == {"psi", "dpsi1", "dpsi2", "ddpsi2"}


def test_free_energy_density():
    p = ModelParams(cp=10.0, cp1=5.0, gamma=2.0)
    assert model.free_energy_density(2.0, p) == pytest.approx(20.0)
