"""Coefficient-vector arithmetic for polynomials and truncated power series.

A :class:`Series` stores coefficients a_0..a_M of a polynomial or a
truncated analytic germ.  Two backends coexist:

* ``exact`` -- a tuple of :class:`~optapprox.exact.ExactComplex`;
* ``float`` -- a ``numpy`` array of ``complex128``.

All values are immutable after construction and every operation here is
pure, so Series may be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import BackendMismatchError, InvalidReflectionDegreeError
from .exact import ExactComplex

#: Float-backend coefficients with modulus at or below this are treated as
#: zero when computing the effective degree, so root extraction never
#: divides by noise.
DEGREE_EPSILON = 1e-11


@dataclass(frozen=True, eq=False)
class Series:
    coeffs: object  # tuple[ExactComplex] | np.ndarray
    is_exact_polynomial: bool = True

    def __post_init__(self):
        if len(self.coeffs) == 0:
            raise ValueError("a Series needs at least one coefficient")

    # -- construction ---------------------------------------------------

    @staticmethod
    def exact(values, is_exact_polynomial: bool = True) -> "Series":
        """Build an exact-backend series from ints, Fractions, ``p/q``
        strings, (re, im) pairs, or ExactComplex values."""
        coeffs = []
        for v in values:
            if isinstance(v, tuple):
                coeffs.append(ExactComplex(v[0], v[1]))
            else:
                coeffs.append(ExactComplex.coerce(v))
        return Series(tuple(coeffs), is_exact_polynomial)

    @staticmethod
    def from_complex(values, is_exact_polynomial: bool = True) -> "Series":
        arr = np.asarray(values, dtype=np.complex128)
        arr.setflags(write=False)
        return Series(arr, is_exact_polynomial)

    # -- structure ------------------------------------------------------

    @property
    def backend(self) -> str:
        return "exact" if isinstance(self.coeffs, tuple) else "float"

    @property
    def truncation_degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def degree(self) -> int:
        """Effective degree: largest index with a nonzero coefficient.

        Returns -1 for the zero series.
        """
        if self.backend == "exact":
            for k in range(len(self.coeffs) - 1, -1, -1):
                if not self.coeffs[k].is_zero:
                    return k
            return -1
        nz = np.nonzero(np.abs(self.coeffs) > DEGREE_EPSILON)[0]
        return int(nz[-1]) if len(nz) else -1

    @property
    def is_zero(self) -> bool:
        return self.degree < 0

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        """Coefficient of z^k; indices beyond the stored range read as 0."""
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return ExactComplex(0) if self.backend == "exact" else 0j

    def at0(self):
        return self.coeffs[0]

    def to_float(self) -> "Series":
        if self.backend == "float":
            return self
        return Series.from_complex([complex(c) for c in self.coeffs],
                                   self.is_exact_polynomial)

    def __repr__(self):
        return f"Series({list(self.coeffs)!r}, backend={self.backend})"


def _check_same_backend(p: Series, q: Series) -> str:
    if p.backend != q.backend:
        raise BackendMismatchError(
            f"mixed backends: {p.backend} vs {q.backend}; convert explicitly "
            "with Series.to_float()")
    return p.backend


def poly_eval(p: Series, z):
    """Evaluate sum_k p_k z^k by Horner's rule over the stored coefficients."""
    if p.backend == "exact":
        z = ExactComplex.coerce(z)
        acc = ExactComplex(0)
        for c in reversed(p.coeffs):
            acc = acc * z + c
        return acc
    z = complex(z)
    acc = 0j
    for c in reversed(p.coeffs):
        acc = acc * z + c
    return acc


def poly_mul(p: Series, q: Series) -> Series:
    """Coefficient convolution; exact in the exact backend."""
    backend = _check_same_backend(p, q)
    exact_poly = p.is_exact_polynomial and q.is_exact_polynomial
    if backend == "float":
        return Series.from_complex(np.convolve(p.coeffs, q.coeffs), exact_poly)
    out = [ExactComplex(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p.coeffs):
        if a.is_zero:
            continue
        for j, b in enumerate(q.coeffs):
            out[i + j] = out[i + j] + a * b
    return Series(tuple(out), exact_poly)


def poly_add(p: Series, q: Series) -> Series:
    """Coefficientwise sum; the shorter operand is zero-padded."""
    backend = _check_same_backend(p, q)
    n = max(len(p), len(q))
    exact_poly = p.is_exact_polynomial and q.is_exact_polynomial
    if backend == "float":
        out = np.zeros(n, dtype=np.complex128)
        out[: len(p)] += p.coeffs
        out[: len(q)] += q.coeffs
        return Series.from_complex(out, exact_poly)
    return Series(tuple(p[k] + q[k] for k in range(n)), exact_poly)


def poly_sub(p: Series, q: Series) -> Series:
    return poly_add(p, scale(q, -1))


def scale(p: Series, c) -> Series:
    if p.backend == "float":
        return Series.from_complex(np.asarray(p.coeffs) * complex(c),
                                   p.is_exact_polynomial)
    c = ExactComplex.coerce(c)
    return Series(tuple(a * c for a in p.coeffs), p.is_exact_polynomial)


def shift(p: Series, k: int) -> Series:
    """Multiply by z^k: prepend k zero coefficients."""
    if k < 0:
        raise ValueError("shift amount must be nonnegative")
    if k == 0:
        return p
    if p.backend == "float":
        return Series.from_complex(
            np.concatenate([np.zeros(k, dtype=np.complex128), p.coeffs]),
            p.is_exact_polynomial)
    return Series((ExactComplex(0),) * k + p.coeffs, p.is_exact_polynomial)


def reflect(p: Series, n: int) -> Series:
    """Reflected polynomial p*(z) = z^n conj(p)(1/z): coefficient j is
    conj(p_{n-j}).  Involution: reflect(reflect(p, n), n) == p."""
    d = p.degree
    if n < d:
        raise InvalidReflectionDegreeError(
            f"reflection degree {n} is below the effective degree {d}")
    if p.backend == "float":
        padded = np.zeros(n + 1, dtype=np.complex128)
        m = min(len(p), n + 1)
        padded[:m] = p.coeffs[:m]
        return Series.from_complex(np.conj(padded[::-1]), p.is_exact_polynomial)
    return Series(tuple(p[n - j].conjugate() for j in range(n + 1)),
                  p.is_exact_polynomial)
