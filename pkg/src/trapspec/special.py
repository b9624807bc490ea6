"""Generalized Laguerre / Hermite polynomials and radial normalization constants.

The three-term recurrences are the production evaluation path; the test suite
checks them against explicit series summation and quadrature.  Orders may be
non-integer (the quantum-defect towers need Laguerre orders like L* + 1/2 with
non-integer L*), so everything is written for real ``alpha > -1``.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DomainError

__all__ = ["laguerre_gen", "hermite", "radial_norm_3d", "radial_norm_2d"]


def laguerre_gen(n: int, alpha: float, x):
    """Generalized Laguerre polynomial ``L_n^alpha(x)``.

    Parameters
    ----------
    n : int
        Degree, ``n >= 0``.
    alpha : float
        Order, ``alpha > -1``; non-integer values allowed.
    x : float or array_like
        Argument(s), ``x >= 0``.

    Returns
    -------
    float or ndarray
        Polynomial value(s); scalar in, scalar out.
    """
    if int(n) != n or n < 0:
        raise DomainError(f"Laguerre degree must be a nonnegative integer, got {n!r}")
    if not alpha > -1.0:
        raise DomainError(f"Laguerre order must exceed -1, got {alpha!r}")
    n = int(n)
    arr = np.asarray(x, dtype=float)
    if np.any(arr < 0.0):
        raise DomainError("Laguerre argument must be nonnegative")
    prev = np.ones_like(arr)
    if n == 0:
        return prev if arr.ndim else float(prev)
    cur = 1.0 + alpha - arr
    for k in range(1, n):
        cur, prev = ((2.0 * k + 1.0 + alpha - arr) * cur - (k + alpha) * prev) / (k + 1.0), cur
    return cur if arr.ndim else float(cur)


def laguerre_gen_derivative(n: int, alpha: float, x):
    """d/dx of ``L_n^alpha(x)``, via ``-L_{n-1}^{alpha+1}(x)``."""
    if n == 0:
        arr = np.asarray(x, dtype=float)
        zero = np.zeros_like(arr)
        return zero if arr.ndim else 0.0
    out = laguerre_gen(n - 1, alpha + 1.0, x)
    return -out


def hermite(k: int, x):
    """Physicists' Hermite polynomial ``H_k(x)`` by recurrence.

    ``H_0 = 1``, ``H_1 = 2x``, ``H_{k+1} = 2 x H_k - 2 k H_{k-1}``.
    """
    if int(k) != k or k < 0:
        raise DomainError(f"Hermite index must be a nonnegative integer, got {k!r}")
    k = int(k)
    arr = np.asarray(x, dtype=float)
    prev = np.ones_like(arr)
    if k == 0:
        return prev if arr.ndim else float(prev)
    cur = 2.0 * arr
    for j in range(1, k):
        cur, prev = 2.0 * arr * cur - 2.0 * j * prev, cur
    return cur if arr.ndim else float(cur)


def _even_gap(n_principal: float, l_angular: float) -> int:
    """Check that ``n - l`` is a nonnegative even integer and return ``(n-l)/2``."""
    diff = n_principal - l_angular
    deg = int(round(diff / 2.0))
    if deg < 0 or abs(diff - 2.0 * deg) > 1e-9:
        raise DomainError(
            f"principal/angular pair must differ by a nonnegative even integer, "
            f"got N={n_principal!r}, L={l_angular!r}"
        )
    return deg


def radial_norm_3d(n_principal: float, l_angular: float, r0: float) -> float:
    """Normalization constant for the 3D radial profile.

    The profile ``W(r) = C (r/r0)^{L+1} exp(-r^2/2 r0^2) L_n^{L+1/2}(r^2/r0^2)``
    with degree ``n = (N - L)/2`` satisfies ``int_0^inf W^2 dr = 1`` when

        ``C = sqrt(2 n! / (r0 Gamma(n + L + 3/2)))``

    which follows from Laguerre orthogonality under the weight
    ``x^{L+1/2} e^{-x}``.  ``L`` may be non-integer (``L > -3/2``); ``N - L``
    must be a nonnegative even integer.
    """
    if r0 <= 0.0 or not math.isfinite(r0):
        raise DomainError(f"r0 must be positive and finite, got {r0!r}")
    if not l_angular > -1.5:
        raise DomainError(f"angular parameter must exceed -3/2, got {l_angular!r}")
    deg = _even_gap(n_principal, l_angular)
    log_c2 = (
        math.log(2.0)
        + math.lgamma(deg + 1.0)
        - math.lgamma(deg + l_angular + 1.5)
        - math.log(r0)
    )
    return math.exp(0.5 * log_c2)


def radial_norm_2d(n_principal: float, abs_m: float, rho_scale: float) -> float:
    """Normalization constant for the planar radial profile.

    ``X(rho) = C (rho/s)^{|M|+1/2} exp(-rho^2/2 s^2) L_n^{|M|}(rho^2/s^2)`` with
    ``n = (N - |M|)/2`` satisfies ``int_0^inf X^2 drho = 1`` when

        ``C = sqrt(2 n! / (s Gamma(n + |M| + 1)))``.
    """
    if rho_scale <= 0.0 or not math.isfinite(rho_scale):
        raise DomainError(f"radial scale must be positive and finite, got {rho_scale!r}")
    if not abs_m > -1.0:
        raise DomainError(f"|M| parameter must exceed -1, got {abs_m!r}")
    deg = _even_gap(n_principal, abs_m)
    log_c2 = (
        math.log(2.0)
        + math.lgamma(deg + 1.0)
        - math.lgamma(deg + abs_m + 1.0)
        - math.log(rho_scale)
    )
    return math.exp(0.5 * log_c2)
