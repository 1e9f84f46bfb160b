"""Dirichlet-type inner products and Gram-matrix assembly.

The space D_alpha carries the norm ||f||^2 = sum_k (k+1)^alpha |a_k|^2,
with alpha = 0 the Hardy space, alpha = -1 the Bergman space and
alpha = 1 the Dirichlet space.  The exact backend only admits integer
alpha, so that every weight (k+1)^alpha stays rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import BackendMismatchError, ZeroAtOriginError
from .exact import ExactComplex
from .series import DEGREE_EPSILON, Series, poly_mul, shift


def _check_alpha(backend: str, alpha) -> None:
    alpha = float(alpha)
    if not np.isfinite(alpha):
        raise ValueError("alpha must be finite")
    if backend == "exact" and alpha != int(alpha):
        raise BackendMismatchError(
            f"exact backend requires integer alpha, got {alpha}")


def _weight_exact(k: int, alpha) -> Fraction:
    return Fraction(k + 1) ** int(alpha)


def _weights_float(lo: int, hi: int, alpha: float) -> np.ndarray:
    # weights (k+1)^alpha for k = lo..hi-1
    return np.arange(lo + 1, hi + 1, dtype=np.float64) ** float(alpha)


def inner(f: Series, g: Series, alpha):
    """<f, g>_alpha = sum_k (k+1)^alpha f_k conj(g_k) over the overlap of
    the stored coefficient ranges."""
    if f.backend != g.backend:
        raise BackendMismatchError("inner() operands must share a backend")
    _check_alpha(f.backend, alpha)
    n = min(len(f), len(g))
    if f.backend == "float":
        w = _weights_float(0, n, alpha)
        return complex(np.sum(w * np.asarray(f.coeffs[:n]) * np.conj(g.coeffs[:n])))
    acc = ExactComplex(0)
    for k in range(n):
        if f.coeffs[k].is_zero or g.coeffs[k].is_zero:
            continue
        acc = acc + f.coeffs[k] * g.coeffs[k].conjugate() * _weight_exact(k, alpha)
    return acc


def norm_sq(f: Series, alpha):
    """||f||^2_alpha; a nonnegative real (Fraction in the exact backend)."""
    _check_alpha(f.backend, alpha)
    if f.backend == "float":
        w = _weights_float(0, len(f), alpha)
        return float(np.sum(w * np.abs(np.asarray(f.coeffs)) ** 2))
    acc = Fraction(0)
    for k, c in enumerate(f.coeffs):
        if not c.is_zero:
            acc += c.abs_sq * _weight_exact(k, alpha)
    return acc


def shifted_inner(f: Series, j: int, l: int, alpha):
    """<z^j f, z^l f>_alpha without materializing the shifts:
    sum over m >= max(j, l) of (m+1)^alpha f_{m-j} conj(f_{m-l})."""
    _check_alpha(f.backend, alpha)
    M = len(f) - 1
    lo = max(j, l)
    hi = min(M + j, M + l)  # largest m with both indices in range
    if f.backend == "float":
        if hi < lo:
            return 0j
        w = _weights_float(lo, hi + 1, alpha)
        a = np.asarray(f.coeffs[lo - j: hi - j + 1])
        b = np.asarray(f.coeffs[lo - l: hi - l + 1])
        return complex(np.sum(w * a * np.conj(b)))
    acc = ExactComplex(0)
    for m in range(lo, hi + 1):
        a, b = f.coeffs[m - j], f.coeffs[m - l]
        if a.is_zero or b.is_zero:
            continue
        acc = acc + a * b.conjugate() * _weight_exact(m, alpha)
    return acc


def weighted_inner(p: Series, q: Series, f: Series, alpha):
    """Inner product of the weighted space D_{alpha,f}: <pf, qf>_alpha."""
    return inner(poly_mul(p, f), poly_mul(q, f), alpha)


@dataclass(frozen=True)
class GramSystem:
    """Hermitian positive-definite system M c = conj(f(0)) e_0 whose
    solution is the optimal approximant's coefficient vector."""

    matrix: object          # tuple-of-tuples (exact) or np.ndarray (float)
    rhs: object             # tuple (exact) or np.ndarray (float)
    alpha: float
    tail_error_bound: float  # 0 for exact polynomials

    @property
    def backend(self) -> str:
        return "exact" if isinstance(self.matrix, tuple) else "float"

    @property
    def size(self) -> int:
        return len(self.rhs)


def gram_matrix(f: Series, n: int, alpha):
    """(n+1)x(n+1) matrix of shifted inner products <z^k f, z^l f>_alpha.

    Only the upper triangle is computed; the rest follows by Hermitian
    symmetry.
    """
    _check_alpha(f.backend, alpha)
    if f.backend == "float":
        M = np.zeros((n + 1, n + 1), dtype=np.complex128)
        for k in range(n + 1):
            for l in range(k, n + 1):
                M[k, l] = shifted_inner(f, k, l, alpha)
                if l != k:
                    M[l, k] = np.conj(M[k, l])
        M.setflags(write=False)
        return M
    rows = [[None] * (n + 1) for _ in range(n + 1)]
    for k in range(n + 1):
        for l in range(k, n + 1):
            v = shifted_inner(f, k, l, alpha)
            rows[k][l] = v
            if l != k:
                rows[l][k] = v.conjugate()
    return tuple(tuple(r) for r in rows)


def _f0_nonzero(f: Series) -> None:
    f0 = f.at0()
    if f.backend == "exact":
        if f0.is_zero:
            raise ZeroAtOriginError("f(0) = 0: optimal approximants need f(0) != 0")
    elif abs(f0) <= DEGREE_EPSILON:
        raise ZeroAtOriginError("f(0) = 0: optimal approximants need f(0) != 0")


def _truncate(f: Series, m: int) -> Series:
    if f.backend == "float":
        return Series.from_complex(f.coeffs[: m + 1], f.is_exact_polynomial)
    return Series(f.coeffs[: m + 1], f.is_exact_polynomial)


def gram(f: Series, n: int, alpha) -> GramSystem:
    """Assemble the Gram system of the degree-n approximant problem.

    For truncated infinite families the tail honesty policy applies: the
    entries are recomputed at half the stored truncation degree and the
    max-entry difference is reported as ``tail_error_bound``.
    """
    _f0_nonzero(f)
    M = gram_matrix(f, n, alpha)
    tail = 0.0
    if not f.is_exact_polynomial:
        half = _truncate(f, max(n + 1, (len(f) - 1) // 2))
        Mh = gram_matrix(half, n, alpha)
        if f.backend == "float":
            tail = float(np.max(np.abs(M - Mh)))
        else:
            tail = max(
                float(abs(complex(M[k][l] - Mh[k][l])))
                for k in range(n + 1) for l in range(n + 1))
    f0c = f.at0().conjugate() if f.backend == "exact" else np.conj(f.at0())
    if f.backend == "float":
        rhs = np.zeros(n + 1, dtype=np.complex128)
        rhs[0] = f0c
        rhs.setflags(write=False)
    else:
        rhs = (f0c,) + (ExactComplex(0),) * n
    return GramSystem(M, rhs, float(alpha), tail)
