"""Reproducing kernels of the subspaces f * P_n and cyclicity diagnostics.

K_n(z, w) = sum_{k<=n} conj(phi_k(w) f(w)) phi_k(z) f(z) reproduces point
evaluation on f * P_n, and K_n(z, 0) = p_n(z) f(z) ties the kernel to the
optimal approximant.  The cyclicity report tabulates the quantities whose
limits characterize cyclicity: p_n(0) -> 1/f(0) and
sum_k |phi_k(0)|^2 -> 1/|f(0)|^2.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .approximant import optimal
from .errors import DegenerateError, UnsupportedAlphaError
from .exact import ExactComplex
from .orthopoly import OrthonormalBasis, basis
from .series import Series, poly_eval, poly_mul


@dataclass(frozen=True)
class KernelEvaluation:
    z: object
    w: object
    value: object  # K_n(z, w); Hermitian: K_n(z,w) = conj(K_n(w,z))


def kernel_eval(f: Series, n: int, alpha, z, w) -> KernelEvaluation:
    """Evaluate K_n(z, w) from the orthonormal basis.

    Uses the monic form: sum_k conj(psi_k(w)) psi_k(z) / s_k, times
    f(z) conj(f(w)), so exact inputs give exact values.
    """
    bas = basis(f, n, alpha)
    return kernel_eval_from_basis(bas, z, w)


def kernel_eval_from_basis(bas: OrthonormalBasis, z, w) -> KernelEvaluation:
    f = bas.f
    if bas.backend == "exact":
        z = ExactComplex.coerce(z)
        w = ExactComplex.coerce(w)
        acc = ExactComplex(0)
        for psi, s in zip(bas.monic, bas.norms_sq):
            acc = acc + poly_eval(psi, z) * poly_eval(psi, w).conjugate() / ExactComplex(s)
        value = acc * poly_eval(f, z) * poly_eval(f, w).conjugate()
    else:
        z, w = complex(z), complex(w)
        acc = 0j
        for psi, s in zip(bas.monic, bas.norms_sq):
            acc += poly_eval(psi, z) * np.conj(poly_eval(psi, w)) / float(s)
        value = acc * poly_eval(f, z) * np.conj(poly_eval(f, w))
    return KernelEvaluation(z, w, value)


def kernel_at_zero(f: Series, n: int, alpha) -> Series:
    """The polynomial K_n(z, 0) = p_n(z) f(z)."""
    return poly_mul(optimal(f, n, alpha).p, f)


def extremal_value(f: Series, n: int, alpha) -> float:
    """sqrt(K_n(0,0)): the largest |g(0)| over g in f * P_n with norm <= 1,
    attained by g = K_n(., 0)/sqrt(K_n(0,0))."""
    zero = ExactComplex(0) if f.backend == "exact" else 0j
    k00 = kernel_eval(f, n, alpha, zero, zero).value
    if f.backend == "exact":
        return math.sqrt(float(k00.re))
    return math.sqrt(max(k00.real, 0.0))


def mccarthy_reference(f: Series, alpha, z, w):
    """Closed-form limit kernel of the weighted polynomial closure for
    alpha < 0: (1 - conj(w) z)^(alpha - 1) / (conj(f(w)) f(z)).

    Diagnostic target only; finite-n kernels converge to it for cyclic f
    that are nice up to the boundary.  Principal branch of the power,
    well-defined since Re(1 - conj(w) z) > 0 on the open bidisk.
    """
    if float(alpha) >= 0:
        raise UnsupportedAlphaError("the reference kernel formula requires alpha < 0")
    z, w = complex(z), complex(w)
    if abs(z) >= 1 or abs(w) >= 1:
        raise ValueError("the reference kernel is defined for |z| < 1, |w| < 1")
    fz = complex(poly_eval(f.to_float(), z))
    fw = complex(poly_eval(f.to_float(), w))
    if fz == 0 or fw == 0:
        raise DegenerateError("f vanishes at the evaluation point")
    base = 1.0 - np.conj(w) * z
    return complex(cmath.exp((float(alpha) - 1.0) * cmath.log(base)) / (np.conj(fw) * fz))


@dataclass(frozen=True)
class CyclicityReport:
    max_n: int
    pn_at_zero: tuple      # p_n(0) for n = 0..max_n
    partial_sums: tuple    # sum_{k<=n} |phi_k(0)|^2, nondecreasing
    target: object         # 1/|f(0)|^2
    distances: tuple       # d_n^2, nonincreasing
    verdict_trend: str     # approaching-target | plateaued | inconclusive


def _verdict(distances) -> str:
    """Heuristic label only; finite data cannot decide cyclicity."""
    d = [float(x) for x in distances]
    if d[-1] < 1e-12:
        return "approaching-target"
    if len(d) >= 5 and d[-1] > 1e-6 and max(d[-5:]) - min(d[-5:]) < 1e-12:
        return "plateaued"
    if len(d) >= 3:
        tail = d[-3:]
        ns = list(range(len(d) - 2, len(d) + 1))
        if tail[0] > tail[1] > tail[2] > 0:
            # log-log slope of d_n^2 against n; negative slope extrapolates to 0
            xs = [math.log(n + 1) for n in ns]
            ys = [math.log(v) for v in tail]
            slope = (ys[-1] - ys[0]) / (xs[-1] - xs[0])
            if slope < -1e-3:
                return "approaching-target"
    return "inconclusive"


def cyclicity_report(f: Series, alpha, max_n: int) -> CyclicityReport:
    """Tabulate p_n(0), the |phi_k(0)|^2 partial sums and d_n^2 for
    n <= max_n from a single basis built at max_n."""
    from .spaces import _f0_nonzero

    _f0_nonzero(f)
    bas = basis(f, max_n, alpha)
    f0 = f.at0()
    sums = bas.phi_zero_sq_partial_sums()
    if f.backend == "exact":
        f0c = f0.conjugate()
        pn0 = tuple(f0c * ExactComplex(s) for s in sums)
        dists = tuple(Fraction(1) - (p0 * f0).re for p0 in pn0)
        target = Fraction(1) / f0.abs_sq
    else:
        f0 = complex(f0)
        f0c = np.conj(f0)
        pn0 = tuple(complex(f0c * s) for s in sums)
        dists = tuple(1.0 - (p0 * f0).real for p0 in pn0)
        target = 1.0 / abs(f0) ** 2
    return CyclicityReport(max_n, pn0, tuple(sums), target, dists,
                           _verdict(dists))
