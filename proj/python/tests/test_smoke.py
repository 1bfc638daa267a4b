import math

import numpy as np
import pytest

import cheb2d


def test_first_block():
    op = cheb2d.jacobi_operator(cheb2d.Family.one_param(0.6), 1)
    assert np.allclose(op.A(1), np.diag([0.4, 0.5]), atol=1e-15)
    assert op.tail_index == 2


def test_orthonormality():
    fam = cheb2d.Family.two_param(0.3, 1.0)
    op = cheb2d.jacobi_operator(fam, 2)
    mu = cheb2d.measure(fam)
    assert mu.lines == pytest.approx([1.25])
    assert cheb2d.orthonormality_defect(op, mu, 4) < 1e-10
    assert cheb2d.orthonormality_defect(op, mu, 4, include_lines=False) > 1e-2


def test_moments_and_density():
    mu = cheb2d.measure(cheb2d.Family.one_param(0.6))
    h = cheb2d.moments(mu, 2, 2)
    assert h.shape == (3, 3)
    assert h[1, 1] == pytest.approx(0.15)
    assert mu.ac_density(0.0, 0.0) == pytest.approx(4 / (math.pi**2 * 0.64))


def test_darboux_and_link():
    op = cheb2d.jacobi_operator(cheb2d.Family.one_param(0.6), 2)
    cfg = cheb2d.DarbouxConfig.from_z0(0.5)
    d = cheb2d.factorization_defects(op, cfg)
    assert max(d.values()) < 1e-11
    mass, ok = cheb2d.hat_mass(op, cfg)
    assert ok and np.allclose(mass, mass.T)
    assert max(cheb2d.two_param_link(0.6, 1.0, 2).values()) < 1e-9


def test_verify_report():
    rep = cheb2d.verify(cheb2d.Family.chebyshev(), n=2, m=2)
    assert rep["pass"]
    assert rep["checks"]["orthonormality"]["residual"] < 1e-12


def test_errors():
    with pytest.raises(cheb2d.InvalidFamily):
        cheb2d.jacobi_operator(cheb2d.Family.one_param(1.5), 1)
    op = cheb2d.jacobi_operator(cheb2d.Family.two_param(0.3, 1.0), 2)
    with pytest.raises(cheb2d.Cheb2dError):
        cheb2d.hat_operator(op, cheb2d.DarbouxConfig.from_z0(0.4))
