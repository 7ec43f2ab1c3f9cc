"""Tests for the numerical kernels."""

import math

import numpy as np
import pytest

from cosbound.common.exceptions import DomainError, MaxDepthExceeded, NotConverged
from cosbound.extremal.kkt_solver import ActiveSet, ReducedProblem, penalty_objective
from cosbound.extremal.lowdegree import V2_ALPHA_LO, V3_ALPHA_LO, v2_objective, v3_objective
from cosbound.numerics.diff import finite_diff_gradient, finite_diff_hessian, finite_diff_jacobian
from cosbound.numerics.golden import golden_section_min
from cosbound.numerics.newton import NewtonConfig, newton_minimize
from cosbound.numerics.quadrature import quadrature


class TestGoldenSection:
    def test_quadratic_vertex(self):
        res = golden_section_min(lambda x: (x - 2.0) ** 2, 0.0, 5.0, 1e-9)
        assert res.x_star == pytest.approx(2.0, abs=1e-8)
        assert res.bracket_width <= 1e-9

    def test_v2_objective(self):
        res = golden_section_min(v2_objective, V2_ALPHA_LO + 1e-12, 1.0 - 1e-12, 1e-9)
        assert res.x_star == pytest.approx(0.7415574, abs=1e-6)

    def test_v3_objective(self):
        res = golden_section_min(v3_objective, V3_ALPHA_LO + 1e-12, 1.0, 1e-9)
        assert res.x_star == pytest.approx(0.4384345, abs=1e-6)

    def test_flat_objective_goes_left(self):
        res = golden_section_min(lambda x: 0.0, 0.0, 1.0, 1e-6)
        assert res.x_star < 1e-5

    def test_bad_bracket(self):
        with pytest.raises(DomainError):
            golden_section_min(lambda x: x, 1.0, 1.0)


class TestQuadrature:
    def test_antisymmetric(self):
        assert quadrature(math.cos, 0.0, math.pi) == pytest.approx(0.0, abs=1e-12)

    def test_exact_on_low_degree_polynomials(self, rng):
        for _ in range(20):
            c = rng.normal(size=6)
            lo, hi = sorted(rng.uniform(-2, 2, 2))
            exact = sum(c[k] * (hi ** (k + 1) - lo ** (k + 1)) / (k + 1) for k in range(6))
            got = quadrature(lambda t: float(np.polyval(c[::-1], t)), lo, hi)
            assert got == pytest.approx(exact, abs=1e-12)

    def test_reversed_limits(self):
        assert quadrature(math.exp, 1.0, 0.0) == pytest.approx(-(math.e - 1.0), abs=1e-12)

    def test_depth_limit(self):
        with pytest.raises(MaxDepthExceeded):
            quadrature(lambda t: 1.0 if t > 1 / 3 else 0.0, 0.0, 1.0, tol=1e-300)


def _rosenbrock(x):
    a, b = x
    value = (1 - a) ** 2 + 100 * (b - a * a) ** 2
    grad = np.array([-2 * (1 - a) - 400 * a * (b - a * a), 200 * (b - a * a)])
    hess = np.array([[2 - 400 * (b - 3 * a * a), -400 * a], [-400 * a, 200.0]])
    return value, grad, hess


class TestNewton:
    def test_rosenbrock(self):
        res = newton_minimize(_rosenbrock, np.array([-1.2, 1.0]), NewtonConfig(grad_tol=1e-14))
        assert res.converged
        assert res.x == pytest.approx([1.0, 1.0], abs=1e-8)

    def test_values_never_increase(self):
        values = []

        def tracked(x):
            out = _rosenbrock(x)
            values.append(out[0])
            return out

        x = np.array([-1.2, 1.0])
        accepted = [tracked(x)[0]]
        for _ in range(40):
            try:
                res = newton_minimize(tracked, x, NewtonConfig(max_iters=1))
            except NotConverged as e:
                res = e.best
            accepted.append(res.value)
            x = res.x
        assert all(b <= a for a, b in zip(accepted, accepted[1:]))

    def test_not_converged_carries_best(self):
        with pytest.raises(NotConverged) as info:
            newton_minimize(_rosenbrock, np.array([-1.2, 1.0]), NewtonConfig(max_iters=2))
        assert info.value.best is not None
        assert info.value.best.value < _rosenbrock(np.array([-1.2, 1.0]))[0]

    def test_penalized_v4_witness(self, v4_factor, rng):
        problem = ReducedProblem.for_degree(4, 1.7051159)
        active = ActiveSet()
        x0 = v4_factor + 1e-3 * rng.normal(size=5)
        x = x0
        for mu in (1e4, 1e6, 1e8):
            x = newton_minimize(lambda y, mu=mu: penalty_objective(problem, active, mu, y), x).x
        if x[0] * v4_factor[0] < 0:
            x = -x
        # the witness is palindromic, so reversal is the identity
        assert x == pytest.approx(v4_factor, abs=1e-6)


class TestFiniteDifferences:
    def test_sum_of_squares(self, rng):
        x = rng.normal(size=7)
        assert finite_diff_gradient(lambda y: float(y @ y), x) == pytest.approx(2 * x, abs=1e-7)

    def test_hessian_of_quadratic(self, rng):
        m = rng.normal(size=(4, 4))
        m = m + m.T
        x = rng.normal(size=4)
        assert np.allclose(finite_diff_hessian(lambda y: float(y @ m @ y), x), 2 * m, atol=1e-5)

    def test_jacobian_of_gradient(self, rng):
        m = rng.normal(size=(3, 3))
        m = m + m.T
        x = rng.normal(size=3)
        assert np.allclose(finite_diff_jacobian(lambda y: 2 * m @ y, x), 2 * m, atol=1e-7)

    def test_invalid_step(self):
        with pytest.raises(DomainError):
            finite_diff_gradient(lambda y: 0.0, np.zeros(2), h=0.0)
