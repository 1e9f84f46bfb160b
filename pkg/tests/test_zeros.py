"""Root extraction, the first-zero formula, zero-location bounds and the
fixed-point certification of zero sets."""

import math
from fractions import Fraction

import numpy as np
import pytest

from optapprox import (ExactComplex, FunctionSpec, Series, first_zero,
                       first_zero_with_tail, fixed_point_residual, optimal,
                       poly_mul, poly_roots, realize, zero_bound_check)
from optapprox.errors import DegenerateError
from optapprox.zeros import NO_FINITE_ZERO

from conftest import random_poly

ONE_MINUS_Z = Series.exact([1, -1])
CUBE = Series.exact([1, 3, 3, 1])


class TestPolyRoots:
    def test_linear(self):
        zs = poly_roots(Series.exact([Fraction(2, 3), Fraction(1, 3)]))
        assert zs.effective_degree == 1
        assert zs.roots[0] == pytest.approx(-2.0, abs=1e-12)

    def test_quadratic(self):
        zs = poly_roots(Series.exact([-1, 0, 1]))
        assert sorted(z.real for z in zs.roots) == pytest.approx([-1.0, 1.0])

    def test_binomial_cube_p1_root(self):
        zs = poly_roots(Series.exact([Fraction(741, 1694), Fraction(-775, 1694)]))
        assert zs.roots[0] == pytest.approx(741 / 775, abs=1e-12)

    def test_triple_root_multiplicity(self):
        p = poly_mul(poly_mul(Series.exact([1, 1]), Series.exact([1, 1])),
                     Series.exact([1, 1]))
        zs = poly_roots(p)
        assert len(zs.roots) == 3
        # a triple root is only computable to ~eps^(1/3) in doubles
        assert all(z == pytest.approx(-1.0, abs=1e-4) for z in zs.roots)

    def test_constant_has_no_roots(self):
        zs = poly_roots(Series.exact([7]))
        assert zs.roots == () and zs.effective_degree == 0

    def test_zero_polynomial_degenerate(self):
        with pytest.raises(DegenerateError):
            poly_roots(Series.exact([0, 0]))

    def test_residual_bound_random(self, rng):
        for _ in range(10):
            deg = int(rng.integers(1, 31))
            c = rng.normal(size=deg + 1) + 1j * rng.normal(size=deg + 1)
            p = Series.from_complex(c)
            zs = poly_roots(p)
            scale = float(np.max(np.abs(c)))
            assert all(r <= 1e-8 * scale for r in zs.residuals)


class TestFirstZero:
    def test_one_minus_z(self):
        assert first_zero(ONE_MINUS_Z, 0) == ExactComplex(-2)

    def test_binomial_cube_exact(self):
        assert first_zero(CUBE, -2) == ExactComplex(Fraction(741, 775))

    def test_eta_one_euler_value(self):
        f = realize(FunctionSpec("eta_family", {"eta": 1, "truncation": 10 ** 5},
                                 "float"))
        target = (8 * math.pi ** 2 - 57) / (8 * math.pi ** 2 - 54)
        assert complex(first_zero(f, -2)).real == pytest.approx(target, abs=1e-4)

    def test_no_finite_zero(self):
        # <f, zf> = 0 for f = 1 + z^2
        f = Series.exact([1, 0, 1])
        assert first_zero(f, 0) == NO_FINITE_ZERO

    def test_agrees_with_p1_root(self, rng):
        for _ in range(10):
            f = random_poly(rng, 6)
            for alpha in (-1, 0, 0.5):
                p1 = optimal(f, 1, alpha).p
                if p1.to_float().degree < 1:
                    continue
                root = poly_roots(p1).roots[0]
                assert complex(first_zero(f, alpha)) == \
                    pytest.approx(root, rel=1e-10)

    def test_tail_estimate(self):
        f = realize(FunctionSpec("eta_family", {"eta": 0.8, "truncation": 10 ** 5},
                                 "float"))
        value, tail = first_zero_with_tail(f, -1)
        assert tail > 0
        # the tail estimate brackets the known limit 119/121
        assert abs(complex(value).real - 119 / 121) <= tail

    def test_tail_zero_for_exact_polynomials(self):
        value, tail = first_zero_with_tail(CUBE, -2)
        assert tail == 0.0
        assert value == ExactComplex(Fraction(741, 775))


class TestZeroBoundCheck:
    def test_one_minus_z_hardy(self):
        for n in (1, 3, 7):
            chk = zero_bound_check(ONE_MINUS_Z, n, 0)
            assert chk.passed and chk.bound == 1.0 and chk.min_modulus > 1.0

    def test_extraneous_zero_inside_disk(self):
        chk = zero_bound_check(CUBE, 1, -2)
        assert chk.bound == pytest.approx(2 ** -1.0)
        assert chk.min_modulus == pytest.approx(741 / 775, abs=1e-10)
        assert chk.min_modulus < 1.0  # inside the unit disk, yet...
        assert chk.passed              # ...outside radius 2^(alpha/2)

    def test_constant_vacuous(self):
        chk = zero_bound_check(Series.exact([1]), 5, 0)
        assert chk.passed and chk.roots.roots == ()


class TestFixedPointResidual:
    def test_single_zero_reduces_to_first_zero(self):
        res = fixed_point_residual(ONE_MINUS_Z, 0, [-2.0])
        assert res[0] <= 1e-12

    def test_binomial_cube_p2_zeros_certified(self):
        p2 = optimal(CUBE, 2, -2).p
        zs = poly_roots(p2).roots
        res = fixed_point_residual(CUBE, -2, zs)
        assert all(r <= 1e-9 for r in res)

    def test_perturbed_zero_detected(self):
        res = fixed_point_residual(ONE_MINUS_Z, 0, [-2.0 + 0.1])
        assert res[0] > 1e-3

    def test_empty_input_rejected(self):
        with pytest.raises(DegenerateError):
            fixed_point_residual(ONE_MINUS_Z, 0, [])


def test_cesaro_root_identity(rng):
    # every root zeta of the 1/(1-z) approximant satisfies
    # sum_{k=0}^{n+1} zeta^k / w(k) = sum_{k=0}^{n+1} 1 / w(k)
    from optapprox import cesaro_closed_form

    for alpha in (-2, -1, 0, 1, 2):
        for n in (3, 6):
            p = cesaro_closed_form(n, alpha)
            w = [(k + 1) ** alpha for k in range(n + 2)]
            s1 = sum(1.0 / wk for wk in w)
            scale = max(abs(s1), 1.0)
            for zeta in poly_roots(p).roots:
                sz = sum(zeta ** k / wk for k, wk in enumerate(w))
                assert abs(sz - s1) <= 1e-8 * scale * max(1.0, abs(zeta)) ** (n + 1)


def test_zero_bound_sweep_small(rng):
    for _ in range(10):
        f = random_poly(rng, 6)
        for alpha in (-2, -0.5, 0, 1):
            for n in range(4):
                assert zero_bound_check(f, n, alpha).passed
