"""Constructors for the function families under study and the closed-form
reference approximants used as oracles.

Families: (1-z)^N and (1+z)^N (exact binomials), single Blaschke factors
(lambda - z)/(1 - conj(lambda) z), the slowly decaying family
(1+z)/(1-z)^eta realized as a truncated power series, and explicit
coefficient lists.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import SpecValidationError
from .exact import ExactComplex, parse_rational
from .series import Series

FAMILIES = ("one_minus_z_pow", "one_plus_z_pow", "blaschke", "eta_family", "explicit")

#: Default truncation degree for the eta family; its coefficients decay
#: like k^(eta-1), so tails must be long to be honest.
ETA_DEFAULT_TRUNCATION = 10 ** 6
BLASCHKE_DEFAULT_TRUNCATION = 10 ** 4


@dataclass(frozen=True)
class FunctionSpec:
    family: str
    params: dict = field(default_factory=dict)
    backend: str = "exact"

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise SpecValidationError(f"unknown family {self.family!r}")
        if self.backend not in ("exact", "float"):
            raise SpecValidationError(f"unknown backend {self.backend!r}")
        p = self.params
        if self.family in ("one_minus_z_pow", "one_plus_z_pow"):
            N = p.get("N")
            if not isinstance(N, int) or N < 1:
                raise SpecValidationError("power families need an integer N >= 1")
        elif self.family == "blaschke":
            lam = complex(p.get("lambda", 0))
            if lam == 0 or abs(lam) >= 1:
                raise SpecValidationError("blaschke needs 0 < |lambda| < 1")
            if self.backend == "exact":
                raise SpecValidationError("blaschke is a truncated family; float only")
        elif self.family == "eta_family":
            eta = p.get("eta")
            if eta is None or not float(eta) > 0:
                raise SpecValidationError("eta_family needs eta > 0")
            trunc = p.get("truncation", ETA_DEFAULT_TRUNCATION)
            if trunc < 64:
                raise SpecValidationError("eta_family truncation must be >= 64")
            if self.backend == "exact":
                raise SpecValidationError("eta_family is a truncated family; float only")
        elif self.family == "explicit":
            coeffs = p.get("coefficients")
            if not coeffs:
                raise SpecValidationError("explicit family needs nonempty coefficients")


def realize(spec: FunctionSpec) -> Series:
    """Materialize a FunctionSpec as a Series in its backend."""
    p = spec.params
    if spec.family in ("one_minus_z_pow", "one_plus_z_pow"):
        N = p["N"]
        sign = -1 if spec.family == "one_minus_z_pow" else 1
        coeffs = [sign ** k * math.comb(N, k) for k in range(N + 1)]
        if spec.backend == "exact":
            return Series.exact(coeffs)
        return Series.from_complex(coeffs)
    if spec.family == "blaschke":
        lam = complex(p["lambda"])
        M = int(p.get("truncation", BLASCHKE_DEFAULT_TRUNCATION))
        coeffs = np.empty(M + 1, dtype=np.complex128)
        coeffs[0] = lam
        # (lambda - z)/(1 - conj(lambda) z) = lambda + (|lambda|^2 - 1) sum_{k>=1} conj(lambda)^(k-1) z^k
        coeffs[1:] = (abs(lam) ** 2 - 1.0) * np.conj(lam) ** np.arange(M)
        return Series.from_complex(coeffs, is_exact_polynomial=False)
    if spec.family == "eta_family":
        eta = float(p["eta"])
        M = int(p.get("truncation", ETA_DEFAULT_TRUNCATION))
        # g_k: coefficients of (1-z)^(-eta); g_0 = 1, g_k = g_{k-1} (eta+k-1)/k
        k = np.arange(1, M + 1, dtype=np.float64)
        g = np.concatenate([[1.0], np.cumprod((eta + k - 1.0) / k)])
        a = np.empty(M + 1, dtype=np.float64)
        a[0] = 1.0
        a[1:] = g[1:] + g[:-1]
        return Series.from_complex(a, is_exact_polynomial=False)
    coeffs = p["coefficients"]
    if spec.backend == "exact":
        s = Series.exact(coeffs)
    else:
        s = Series.from_complex([complex(c) for c in coeffs])
    if s.at0() == (ExactComplex(0) if spec.backend == "exact" else 0j):
        raise SpecValidationError("explicit coefficients must have coeffs[0] != 0")
    return s


def spec_from_json(obj, backend: str = "exact") -> FunctionSpec:
    """Build a FunctionSpec from its JSON form:
    {"family": str, "params": {...}} or {"coefficients": [...]}."""
    if not isinstance(obj, dict):
        raise SpecValidationError("function spec must be a JSON object")
    if "coefficients" in obj:
        raw = obj["coefficients"]
        if backend == "exact":
            coeffs = []
            for c in raw:
                if isinstance(c, dict):
                    coeffs.append((Fraction(str(c.get("re", 0))), Fraction(str(c.get("im", 0)))))
                elif isinstance(c, str):
                    coeffs.append(parse_rational(c))
                elif isinstance(c, int):
                    coeffs.append(c)
                elif isinstance(c, float):
                    raise SpecValidationError(
                        "float coefficients are not allowed in the exact backend")
                else:
                    raise SpecValidationError(f"bad coefficient {c!r}")
        else:
            coeffs = []
            for c in raw:
                if isinstance(c, dict):
                    coeffs.append(complex(float(c.get("re", 0)), float(c.get("im", 0))))
                elif isinstance(c, str):
                    coeffs.append(float(parse_rational(c)))
                else:
                    coeffs.append(complex(c))
        return FunctionSpec("explicit", {"coefficients": coeffs}, backend)
    family = obj.get("family")
    params = dict(obj.get("params", {}))
    if family == "blaschke" and isinstance(params.get("lambda"), dict):
        lam = params["lambda"]
        params["lambda"] = complex(float(lam.get("re", 0)), float(lam.get("im", 0)))
    if family in ("blaschke", "eta_family"):
        backend = "float"
    return FunctionSpec(family, params, backend)


# -- closed-form reference approximants --------------------------------

def _weight_inv_exact(j: int, alpha: int) -> Fraction:
    return Fraction(1) / Fraction(j + 1) ** alpha


def cesaro_closed_form(n: int, alpha) -> Series:
    """Closed-form optimal approximant to 1/(1-z) in D_alpha:
    c_k = (sum_{j=k+1}^{n+1} 1/w(j)) / (sum_{j=0}^{n+1} 1/w(j)),
    w(j) = (j+1)^alpha; exact for integer alpha, float otherwise.

    For alpha = 0 this reduces to the Cesaro form c_k = 1 - (k+1)/(n+2).
    """
    a = float(alpha)
    if a == int(a):
        alpha = int(a)
        inv = [_weight_inv_exact(j, alpha) for j in range(n + 2)]
        total = sum(inv)
        coeffs = []
        tail = total
        for k in range(n + 1):
            tail -= inv[k]          # sum_{j=k+1}^{n+1}
            coeffs.append(tail / total)
        return Series.exact(coeffs)
    inv = np.arange(1, n + 3, dtype=np.float64) ** (-a)
    total = inv.sum()
    tails = total - np.cumsum(inv)
    return Series.from_complex(tails[: n + 1] / total)


def one_minus_z_reference(n: int, alpha, z, method: str = "auto"):
    """Evaluate the 1/(1-z) approximant p_n at z via its quotient
    representations:

    * 'quotient': p_n(z) = (1 - S_z / S_1) / (1 - z) with
      S_z = sum_{k=0}^{n+1} z^k / w(k) (any alpha, z != 1);
    * 'hardy': p_n(z) = (z^{n+2} - (n+2) z + n + 1) / ((n+2)(1-z)^2)
      (alpha = 0 only, z != 1).

    z = 1 is a removable singularity of both quotients; the coefficient
    form is used there instead.
    """
    from .series import poly_eval
    from .errors import UnsupportedAlphaError

    zc = complex(z)
    if abs(zc - 1.0) < 1e-12:
        return poly_eval(cesaro_closed_form(n, alpha).to_float(), zc)
    if method == "hardy" or (method == "auto" and float(alpha) == 0.0):
        if float(alpha) != 0.0:
            raise UnsupportedAlphaError("the cubic-quotient form holds for alpha = 0")
        return (zc ** (n + 2) - (n + 2) * zc + n + 1) / ((n + 2) * (1.0 - zc) ** 2)
    w = np.arange(1, n + 3, dtype=np.float64) ** float(alpha)
    powers = zc ** np.arange(n + 2)
    s_z = np.sum(powers / w)
    s_1 = np.sum(1.0 / w)
    return (1.0 - s_z / s_1) / (1.0 - zc)


def hardy_power_closed_form(N: int, n: int) -> Series:
    """Exact Hardy-space approximant to 1/(1-z)^N via Beta-function
    ratios: c_k = C(k+N-1, k) B(n+N+1, N) / B(n-k+1, N)."""
    if N < 1:
        raise SpecValidationError("N must be >= 1")

    def beta_int(a: int, b: int) -> Fraction:
        return Fraction(math.factorial(a - 1) * math.factorial(b - 1),
                        math.factorial(a + b - 1))

    top = beta_int(n + N + 1, N)
    coeffs = [Fraction(math.comb(k + N - 1, k)) * top / beta_int(n - k + 1, N)
              for k in range(n + 1)]
    return Series.exact(coeffs)
