import math

import numpy as np
import pytest

import qcyamabe as q


def test_quaternions_and_group():
    assert q.quat_mul((0, 1, 0, 0), (0, 0, 1, 0)) == pytest.approx((0, 0, 0, 1))
    assert q.quat_inv((0, 0, 0, 2)) == pytest.approx((0, 0, 0, -0.5))
    with pytest.raises(ValueError):
        q.quat_inv((0, 0, 0, 0))
    g = (0.5, -1.0, 2.0, 0.25, 1.0, -3.0, 0.5)
    assert q.group_mul(g, q.group_inv(g)) == pytest.approx([0] * 7, abs=1e-14)
    assert q.group_mul((0, 1, 0, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0, 0)) == pytest.approx((0, 1, 1, 0, 0, 0, -2))
    assert q.dilation(2.0, (0, 1, 0, 0, 0, 0, 1)) == pytest.approx((0, 2, 0, 0, 0, 0, 4))


def test_extremal():
    u = q.ubar()
    origin = (0,) * 7
    assert u(origin) == 1024.0
    value, grad, hess = u.jet(origin)
    assert value == 1024.0
    assert np.allclose(grad, 0.0)
    assert hess.shape == (7, 7)
    assert q.sub_laplacian(u, origin) == pytest.approx(-32768.0)
    assert np.allclose(q.horizontal_hessian(u, origin), -8192.0 * np.eye(4))
    rng = np.random.default_rng(0)
    for p in rng.uniform(-3, 3, size=(20, 7)):
        assert abs(q.pde_residual(u, tuple(p))) <= 1e-9 * u(tuple(p)) ** 1.5


def test_conformal():
    h = q.h_family(2.0, 3.0, (0.1, 0.2, 0, 0, 0.3, 0, 0))
    p = (0.3, -0.2, 0.5, 0.1, 0.4, -0.6, 0.2)
    assert np.linalg.norm(q.torsion_T0_deformed(h, p)) < 1e-8
    assert np.linalg.norm(q.U_deformed(h, p)) < 1e-12
    sphere = q.scale(q.bubble_denominator(), 1 / 64)
    assert q.scal_deformed(sphere, p) == pytest.approx(6.0, rel=1e-8)
    with pytest.raises(ValueError):
        q.scal_deformed(q.constant(-1.0), p)
    I1, I2, I3 = q.complex_structures()
    assert np.allclose(I1 @ I2, I3)


def test_transforms():
    assert q.cayley_forward((0, 0, 0, 0), (1, 0, 0, 0)) == pytest.approx([0] * 7)
    assert q.sigma((1, 0, 0, 0, 0, 0, 0)) == pytest.approx((-1, 0, 0, 0, 0, 0, 0))
    g = (0.3, -0.2, 0.5, 0.1, 0.4, -0.6, 0.2)
    assert q.sigma(q.sigma(g)) == pytest.approx(g, abs=1e-12)
    k = q.kelvin(q.ubar())
    assert k(g) == pytest.approx(q.ubar()(g), rel=1e-12)


def test_quadrature_and_quotient():
    value, _ = q.integrate_biradial(lambda r, rho: ((1 + r * r) ** 2 + rho * rho) ** -5, 20.0, 1e-10)
    assert value == pytest.approx(math.pi**4 / 384, rel=1e-8)
    rep = q.fs_quotient(q.ubar())
    assert rep["method"] == "biradial"
    assert rep["quotient"] == pytest.approx((2**18 * math.pi**4 / 3) ** 0.2, rel=1e-8)


def test_qmatrix_and_suites():
    ev = q.q_spectrum()
    assert ev == pytest.approx([0, 0, 2 * (2 - math.sqrt(2)), 2 * (2 + math.sqrt(2)), 10, 10], abs=1e-12)
    blocks = [np.zeros(4) for _ in range(6)]
    blocks[0][0] = 1.0
    assert q.quadratic_form_audit(blocks) < 1e-12
    res = q.run_suite("qmatrix")
    assert [r["pass"] for r in res["reports"]] == [True, True]
    assert "all" in q.suite_names()
    with pytest.raises(ValueError):
        q.run_suite("nonsense")
