"""Inner products, norms, shifted inner products and Gram assembly."""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from optapprox import (ExactComplex, Series, gram, inner, norm_sq, shift,
                       shifted_inner, weighted_inner)
from optapprox.errors import BackendMismatchError, ZeroAtOriginError

from conftest import random_poly


class TestInner:
    def test_one_minus_z_norm(self):
        assert inner(Series.exact([1, -1]), Series.exact([1, -1]), 0) == \
            ExactComplex(2)

    def test_overlap_only(self):
        assert inner(Series.exact([1, -1]), Series.exact([0, 1, -1]), 0) == \
            ExactComplex(-1)

    def test_zero_function(self):
        assert inner(Series.exact([1, 2]), Series.exact([0, 0]), 3) == \
            ExactComplex(0)

    def test_exact_non_integer_alpha_rejected(self):
        with pytest.raises(BackendMismatchError):
            inner(Series.exact([1]), Series.exact([1]), 0.5)


class TestNormSq:
    def test_dirichlet_weight(self):
        assert norm_sq(Series.exact([1, -1]), 1) == Fraction(3)

    def test_negative_alpha_exact(self):
        f = Series.exact([0, 1, 3, 3, 1])
        assert norm_sq(f, -2) == \
            Fraction(1, 4) + Fraction(9, 9) + Fraction(9, 16) + Fraction(1, 25)
        assert norm_sq(f, -2) == Fraction(741, 400)

    def test_constant(self):
        for alpha in (-2, 0, 3):
            assert norm_sq(Series.exact([1]), alpha) == Fraction(1)

    def test_float_matches_exact(self):
        f_exact = Series.exact([1, 3, 3, 1])
        f_float = f_exact.to_float()
        for alpha in (-2, -0.5, 0, 0.5, 2):
            if float(alpha) == int(alpha):
                ref = float(norm_sq(f_exact, int(alpha)))
            else:
                ref = sum((k + 1) ** alpha * abs(c) ** 2
                          for k, c in enumerate([1, 3, 3, 1]))
            assert norm_sq(f_float, alpha) == pytest.approx(ref, rel=1e-14)


class TestShiftedInner:
    def test_diagonal_is_norm(self):
        f = Series.exact([1, 2, 3])
        for alpha in (-1, 0, 2):
            assert shifted_inner(f, 0, 0, alpha) == \
                ExactComplex(norm_sq(f, alpha))

    def test_one_minus_z_offdiagonal(self):
        assert shifted_inner(Series.exact([1, -1]), 0, 1, 0) == ExactComplex(-1)

    def test_binomial_cube_bergman2(self):
        assert shifted_inner(Series.exact([1, 3, 3, 1]), 0, 1, -2) == \
            ExactComplex(Fraction(31, 16))

    def test_agrees_with_materialized_shifts(self, rng):
        for _ in range(10):
            f = random_poly(rng, 6)
            for (j, l) in ((0, 0), (1, 0), (2, 3), (4, 1)):
                for alpha in (-2, -0.5, 0, 1):
                    direct = shifted_inner(f, j, l, alpha)
                    ref = inner(shift(f, j), shift(f, l), alpha)
                    assert direct == pytest.approx(ref, rel=1e-13, abs=1e-13)


class TestGram:
    def test_one_minus_z(self):
        sys = gram(Series.exact([1, -1]), 1, 0)
        assert sys.matrix == ((ExactComplex(2), ExactComplex(-1)),
                              (ExactComplex(-1), ExactComplex(2)))
        assert sys.rhs == (ExactComplex(1), ExactComplex(0))
        assert sys.tail_error_bound == 0.0

    def test_monomial_weights_diagonal(self):
        for alpha in (-1, 0, 2):
            sys = gram(Series.exact([1]), 2, alpha)
            expected = tuple(
                tuple(ExactComplex(Fraction(k + 1) ** alpha) if k == l
                      else ExactComplex(0) for l in range(3))
                for k in range(3))
            assert sys.matrix == expected

    def test_binomial_cube_bergman2(self):
        sys = gram(Series.exact([1, 3, 3, 1]), 1, -2)
        assert sys.matrix == (
            (ExactComplex(Fraction(69, 16)), ExactComplex(Fraction(31, 16))),
            (ExactComplex(Fraction(31, 16)), ExactComplex(Fraction(741, 400))))
        assert sys.rhs == (ExactComplex(1), ExactComplex(0))

    def test_zero_at_origin_rejected(self):
        with pytest.raises(ZeroAtOriginError):
            gram(Series.exact([0, 1]), 1, 0)

    def test_rhs_is_conjugate_of_f0(self):
        sys = gram(Series.exact([(2, -3), 1]), 2, 0)
        assert sys.rhs[0] == ExactComplex(2, 3)
        assert all(x == ExactComplex(0) for x in sys.rhs[1:])

    def test_tail_bound_positive_for_truncated_series(self):
        coeffs = 0.9 ** np.arange(200)
        f = Series.from_complex(coeffs, is_exact_polynomial=False)
        sys = gram(f, 2, 0)
        assert sys.tail_error_bound > 0.0
        # the bound dominates the actual truncation error of each entry
        full = Series.from_complex(0.9 ** np.arange(2000),
                                   is_exact_polynomial=False)
        err = max(abs(shifted_inner(f, k, l, 0) - shifted_inner(full, k, l, 0))
                  for k in range(3) for l in range(3))
        assert err <= 10 * sys.tail_error_bound


class TestWeightedInner:
    def test_reduces_to_norm(self):
        assert weighted_inner(Series.exact([1]), Series.exact([1]),
                              Series.exact([1, -1]), 0) == ExactComplex(2)

    def test_monomial_pair(self):
        assert weighted_inner(Series.exact([1]), Series.exact([0, 1]),
                              Series.exact([1, -1]), 0) == ExactComplex(-1)

    def test_consistency_with_shifted_inner(self, rng):
        z = Series.from_complex([0.0, 1.0])
        for _ in range(5):
            f = random_poly(rng, 5)
            for alpha in (-1, 0, 0.5):
                assert weighted_inner(z, z, f, alpha) == \
                    pytest.approx(shifted_inner(f, 1, 1, alpha), rel=1e-13)


# -- properties ----------------------------------------------------------

def test_hermitian_symmetry_and_cauchy_schwarz(rng):
    for _ in range(30):
        f = random_poly(rng, 8)
        g = random_poly(rng, 8)
        for alpha in (-2, -0.5, 0, 1.5):
            fg = inner(f, g, alpha)
            gf = inner(g, f, alpha)
            assert fg == pytest.approx(np.conj(gf), abs=1e-14 * (1 + abs(fg)))
            assert abs(fg) ** 2 <= norm_sq(f, alpha) * norm_sq(g, alpha) * (1 + 1e-12)


coeff_pairs = st.tuples(st.integers(-5, 5), st.integers(-5, 5))


@settings(max_examples=40)
@given(st.lists(coeff_pairs, min_size=1, max_size=6),
       st.lists(coeff_pairs, min_size=1, max_size=6),
       st.sampled_from([-2, -1, 0, 1, 2]))
def test_hermitian_symmetry_exact(fc, gc, alpha):
    f, g = Series.exact(fc), Series.exact(gc)
    assert inner(f, g, alpha) == inner(g, f, alpha).conjugate()


def test_gram_positive_definite(rng):
    from optapprox.linsolve import det_exact

    for _ in range(10):
        coeffs = [(int(a), int(b)) for a, b in
                  zip(rng.integers(-4, 5, 5), rng.integers(-4, 5, 5))]
        coeffs[0] = (int(rng.integers(1, 5)), 0)
        f = Series.exact(coeffs)
        for alpha in (-2, 0, 1):
            M = gram(f, 3, alpha).matrix
            # all leading principal minors positive
            for m in range(1, 5):
                sub = tuple(row[:m] for row in M[:m])
                d = det_exact(sub)
                assert d.im == 0 and d.re > 0
        fl = f.to_float()
        for alpha in (-0.5, 0.5):
            Mf = np.asarray(gram(fl, 3, alpha).matrix)
            assert np.linalg.eigvalsh(Mf).min() > 0


def test_norm_shift_bounds(rng):
    for _ in range(20):
        F = random_poly(rng, 8, min_f0=0.0)
        for alpha in (0, 0.5, 1, 2):
            assert norm_sq(shift(F, 1), alpha) >= norm_sq(F, alpha) * (1 - 1e-12)
        for alpha in (-2, -1, -0.5):
            assert norm_sq(shift(F, 1), alpha) >= \
                2.0 ** alpha * norm_sq(F, alpha) * (1 - 1e-12)
