"""Shared helpers for the test suite."""

from fractions import Fraction

import numpy as np
import pytest

from optapprox import ExactComplex, Series


def exact_gauss_solve(matrix, rhs):
    """Independent oracle: naive Gaussian elimination over ExactComplex.

    Deliberately distinct from the library's fraction-free (Bareiss)
    solver so the two can cross-check each other.
    """
    n = len(rhs)
    a = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next(r for r in range(col, n) if not a[r][col].is_zero)
        a[col], a[piv] = a[piv], a[col]
        inv = ExactComplex(1) / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and not a[r][col].is_zero:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


def random_poly(rng, max_deg, min_f0=0.2, complex_coeffs=True):
    """Random float-backend polynomial with f(0) bounded away from zero."""
    deg = int(rng.integers(1, max_deg + 1))
    c = rng.uniform(0.0, 1.0, deg + 1).astype(np.complex128)
    if complex_coeffs:
        c += 1j * rng.uniform(0.0, 1.0, deg + 1)
    c[0] = rng.uniform(min_f0, 1.0)
    return Series.from_complex(c)


def frac(s):
    return Fraction(s)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
