"""Linear solvers for the Hermitian positive-definite Gram systems.

Float backend: Cholesky factorization with a spectral condition estimate.
Exact backend: fraction-free (Bareiss-style) elimination over complex
rationals, which also yields exact determinants for Gram's Lemma.
"""

from __future__ import annotations

import numpy as np
import scipy.linalg

from .errors import ConditioningError, DegenerateError
from .exact import ExactComplex

#: Condition estimate beyond which the float solver refuses and advises
#: the exact backend.
CONDITION_LIMIT = 1e14


def solve_hpd_float(M: np.ndarray, b: np.ndarray) -> np.ndarray:
    M = np.asarray(M, dtype=np.complex128)
    ev = np.linalg.eigvalsh(M)
    if ev[0] <= 0 or ev[-1] / ev[0] > CONDITION_LIMIT:
        raise ConditioningError(
            f"Gram matrix condition estimate {ev[-1] / max(ev[0], 0.0):.3e} "
            "exceeds 1e14; use the exact backend")
    c, low = scipy.linalg.cho_factor(M)
    return scipy.linalg.cho_solve((c, low), np.asarray(b, dtype=np.complex128))


def _bareiss_forward(rows):
    """Fraction-free forward elimination; mutates and returns ``rows``
    together with the determinant of the leading square block.

    Works on augmented matrices: only the first len(rows) columns take
    part in pivoting.  Pivots are the leading principal minors, nonzero
    for positive-definite input.
    """
    n = len(rows)
    prev = ExactComplex(1)
    for k in range(n - 1):
        pivot = rows[k][k]
        if pivot.is_zero:
            raise DegenerateError("zero pivot in exact elimination; matrix is singular")
        for i in range(k + 1, n):
            for j in range(k + 1, len(rows[i])):
                rows[i][j] = (rows[i][j] * pivot - rows[i][k] * rows[k][j]) / prev
            rows[i][k] = ExactComplex(0)
        prev = pivot
    return rows, rows[n - 1][n - 1]


def solve_exact(M, b):
    """Exact solution of M x = b over complex rationals."""
    n = len(b)
    rows = [list(M[i]) + [b[i]] for i in range(n)]
    rows, _ = _bareiss_forward(rows)
    x = [ExactComplex(0)] * n
    for i in range(n - 1, -1, -1):
        acc = rows[i][n]
        for j in range(i + 1, n):
            acc = acc - rows[i][j] * x[j]
        if rows[i][i].is_zero:
            raise DegenerateError("zero pivot in exact back substitution")
        x[i] = acc / rows[i][i]
    return tuple(x)


def det_exact(M):
    """Exact determinant via Bareiss elimination (last pivot)."""
    n = len(M)
    if n == 0:
        return ExactComplex(1)
    if n == 1:
        return M[0][0]
    rows = [list(M[i]) for i in range(n)]
    _, d = _bareiss_forward(rows)
    return d
