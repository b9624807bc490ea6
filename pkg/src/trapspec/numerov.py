"""Independent radial eigen-solver plus quadrature and derivative checks.

This module is the numerical cross-check for every analytic spectrum in the
package, so it deliberately avoids the analytic results: eigenvalues come
from node-counted shooting (Numerov propagation from both ends, matched at
the outermost classical turning point), overlaps from adaptive quadrature,
and derivative claims from Richardson-extrapolated central differences.

The radial problem solved is

    [-hbar^2/2m d^2/dr^2 + hbar^2 c /(2 m r^2) + V(r)] W = E W

on ``r in [r_min, r_max]`` with ``W ~ r^s`` near the origin and ``W = 0`` at
the outer wall.  The centrifugal strength ``c`` is a free real parameter so
the same solver covers 3D towers (``c = L(L+1)``, possibly non-integer
``L``) and planar ones (``c = M^2 - 1/4``).

Notes
-----
Propagation runs on a logarithmic mesh: with ``x = ln r`` and
``W = sqrt(r) Phi(x)`` the equation becomes

    Phi'' = [ (c + 1/4) + r^2 (2m/hbar^2) (V(r) - E) ] Phi ,

which has no singular coefficient, so ``Phi`` is smooth down to the origin
even for non-integer power behavior ``W ~ r^s`` (then ``Phi ~ e^{(s-1/2)x}``).
A uniform mesh in ``r`` loses several orders of accuracy for attractive
centrifugal terms (``c < 0``); the log mesh keeps the full Numerov order for
every tower handled here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np
from scipy.integrate import quad, simpson
from scipy.optimize import brentq

from .errors import AccuracyError, BracketError, ConvergenceError, DomainError

__all__ = ["RadialProblem", "EigenResult", "solve_eigen", "count_nodes", "overlap", "fd_check"]

_RENORM = 1e200
_BLOWUP = 1e150


@dataclass(frozen=True)
class RadialProblem:
    """Radial Schroedinger problem description.

    ``potential`` is the regular (non-centrifugal) part of the potential and
    must be finite as ``r -> 0``; the ``centrifugal`` coefficient supplies the
    ``hbar^2 c / (2 m r^2)`` term.  ``origin_exponent`` optionally overrides
    the near-origin behavior ``W ~ r^s`` (default: principal indicial root
    ``s = 1/2 + sqrt(1/4 + c)``); towers with attractive non-integer
    centrifugal terms pass the exponent of the regular member explicitly.
    """

    potential: Callable[[np.ndarray], np.ndarray]
    centrifugal: float
    mass: float
    r_min: float
    r_max: float
    n_points: int = 8000
    hbar: float = 1.0
    origin_exponent: Optional[float] = None

    def __post_init__(self):
        if self.mass <= 0.0 or self.hbar <= 0.0:
            raise DomainError("mass and hbar must be positive")
        if not 0.0 < self.r_min < self.r_max:
            raise DomainError("need 0 < r_min < r_max")
        if self.n_points < 2000:
            raise DomainError(f"grid must keep at least 2000 points, got {self.n_points}")
        if self.origin_exponent is None and 0.25 + self.centrifugal < 0.0:
            raise DomainError(
                "centrifugal coefficient below -1/4 has no regular power solution; "
                "pass origin_exponent explicitly"
            )

    def grid(self) -> np.ndarray:
        """Logarithmically spaced radial mesh from ``r_min`` to ``r_max``."""
        return np.exp(np.linspace(math.log(self.r_min), math.log(self.r_max), self.n_points))

    def exponent(self) -> float:
        if self.origin_exponent is not None:
            return float(self.origin_exponent)
        return 0.5 + math.sqrt(0.25 + self.centrifugal)


@dataclass
class EigenResult:
    """Converged eigenvalue with the sampled, unit-normalized eigenfunction."""

    energy: float
    radii: np.ndarray
    samples: np.ndarray
    node_count: int
    residual: float
    diagnostics: dict = field(default_factory=dict)


def _sample_potential(potential, r: np.ndarray) -> np.ndarray:
    try:
        values = np.asarray(potential(r), dtype=float)
        if values.shape == r.shape:
            return values
    except (TypeError, ValueError):
        pass
    return np.array([float(potential(x)) for x in r])


def _opposite(a: float, b: float) -> bool:
    return a != 0.0 and b != 0.0 and (a < 0.0) != (b < 0.0)


def _count_outward(f: Sequence[float], w0: float, w1: float) -> int:
    """Sturm node count of the outward solution.

    Propagation stops once the solution has blown up inside a classically
    forbidden stretch: past that point the growing exponential dominates and
    produces no further sign changes (discrete steps there can alias into
    spurious ones).
    """
    nodes = 0
    prev, cur = w0, w1
    n = len(f)
    for i in range(1, n - 1):
        nxt = ((12.0 - 10.0 * f[i]) * cur - f[i - 1] * prev) / f[i + 1]
        if cur != 0.0:
            if _opposite(nxt, cur):
                nodes += 1
        elif _opposite(nxt, prev):
            nodes += 1
        prev, cur = cur, nxt
        if abs(cur) > _BLOWUP:
            if f[i] < 0.95:
                break
            prev /= _RENORM
            cur /= _RENORM
    return nodes


def _propagate_out(f: Sequence[float], w0: float, w1: float, stop: int) -> list[float]:
    """Outward Numerov solution stored on indices 0..stop (inclusive)."""
    w = [0.0] * (stop + 1)
    w[0], w[1] = w0, w1
    for i in range(1, stop):
        nxt = ((12.0 - 10.0 * f[i]) * w[i] - f[i - 1] * w[i - 1]) / f[i + 1]
        w[i + 1] = nxt
        if abs(nxt) > _RENORM:
            inv = 1.0 / _RENORM
            for j in range(i + 2):
                w[j] *= inv
    return w


def _propagate_in(f: Sequence[float], stop: int) -> list[float]:
    """Inward Numerov solution stored on indices stop..n-1, Dirichlet at the wall."""
    n = len(f)
    w = [0.0] * (n - stop)
    w[n - 1 - stop] = 0.0
    w[n - 2 - stop] = 1e-30
    for i in range(n - 2, stop, -1):
        k = i - stop
        nxt = ((12.0 - 10.0 * f[i]) * w[k] - f[i + 1] * w[k + 1]) / f[i - 1]
        w[k - 1] = nxt
        if abs(nxt) > _RENORM:
            inv = 1.0 / _RENORM
            for j in range(k - 1, len(w)):
                w[j] *= inv
    return w


def solve_eigen(
    problem: RadialProblem,
    node_target: int,
    energy_window: Optional[tuple[float, float]] = None,
) -> EigenResult:
    """Find the eigenvalue whose eigenfunction has ``node_target`` interior nodes.

    Node-count bisection isolates the level, then the Numerov matching
    residual at the outermost classical turning point is driven to zero with
    Brent's method (relative tolerance 1e-12).  ``energy_window`` is only a
    hint: it is widened (doubled, up to five times) whenever it fails to
    bracket the requested node count.

    Raises
    ------
    BracketError
        If no valid search window can be established.
    ConvergenceError
        If bisection or the final node verification fails.
    """
    if int(node_target) != node_target or node_target < 0:
        raise DomainError(f"node_target must be a nonnegative integer, got {node_target!r}")
    node_target = int(node_target)

    r = problem.grid()
    x = np.log(r)
    h = x[1] - x[0]
    v_reg = _sample_potential(problem.potential, r)
    pref = 2.0 * problem.mass / problem.hbar**2
    langer = problem.centrifugal + 0.25
    # effective potential whose turning points bound the oscillatory region in x
    veff = v_reg + langer / (pref * r * r)
    s = problem.exponent()
    h2_12 = h * h / 12.0
    r2pref = pref * r * r

    def f_list(energy: float) -> list[float]:
        g = r2pref * (energy - v_reg) - langer
        return (1.0 + h2_12 * g).tolist()

    def outward_start(energy: float) -> tuple[float, float]:
        # Two-term Frobenius start W = r^s (1 + beta r^2), i.e.
        # Phi = r^(s-1/2) (1 + beta r^2), at the first two mesh points.
        beta = pref * (v_reg[0] - energy) / (4.0 * s + 2.0)
        w0 = r[0] ** (s - 0.5) * (1.0 + beta * r[0] ** 2)
        w1 = r[1] ** (s - 0.5) * (1.0 + beta * r[1] ** 2)
        return w0, w1

    evaluations = {"count": 0, "mismatch": 0}

    def count(energy: float) -> int:
        evaluations["count"] += 1
        w0, w1 = outward_start(energy)
        return _count_outward(f_list(energy), w0, w1)

    # --- establish a window bracketing the node-count jump -----------------
    if energy_window is not None:
        lo, hi = float(energy_window[0]), float(energy_window[1])
    else:
        lo, hi = float(veff.min()), float(veff[-1])
    if not hi > lo:
        lo = float(veff.min())
        hi = lo + abs(lo) + 1.0
    span0 = hi - lo
    widenings = 0
    for attempt in range(6):
        if count(lo) <= node_target and count(hi) >= node_target + 1:
            break
        widenings = attempt + 1
        center = 0.5 * (lo + hi)
        span = span0 * 2.0 ** (attempt + 1)
        lo, hi = center - 0.5 * span, center + 0.5 * span
    else:
        raise BracketError(
            f"no window with a node-count jump through {node_target} "
            f"(last window [{lo:.6g}, {hi:.6g}], counts {count(lo)}..{count(hi)})"
        )

    # --- node-count bisection ----------------------------------------------
    c_lo, c_hi = count(lo), count(hi)
    history = []
    for _ in range(200):
        if c_lo == node_target and c_hi == node_target + 1:
            break
        mid = 0.5 * (lo + hi)
        c_mid = count(mid)
        if c_mid <= node_target:
            lo, c_lo = mid, c_mid
        else:
            hi, c_hi = mid, c_mid
        history.append((float(lo), float(hi), c_lo, c_hi))
    else:
        raise ConvergenceError(
            f"node bisection failed to isolate target {node_target}: window "
            f"[{lo:.6g}, {hi:.6g}] counts ({c_lo}, {c_hi})"
        )

    # --- matching residual at the outermost classical turning point --------
    def turning_index(energy: float) -> int:
        inside = np.nonzero(veff <= energy)[0]
        if inside.size == 0:
            raise BracketError("trial energy lies below the whole effective potential")
        return min(max(int(inside[-1]), 2), problem.n_points - 3)

    m = turning_index(0.5 * (lo + hi))

    def mismatch(energy: float) -> float:
        evaluations["mismatch"] += 1
        f = f_list(energy)
        w0, w1 = outward_start(energy)
        out = _propagate_out(f, w0, w1, m + 1)
        inner = _propagate_in(f, m - 1)
        w_out_m = out[m]
        w_in_m = inner[1]
        if w_out_m == 0.0 or w_in_m == 0.0:
            return 0.0
        sigma = w_out_m / w_in_m
        t_in = f[m + 1] * inner[2] * sigma
        t_out = f[m - 1] * out[m - 1]
        t_mid = (12.0 - 10.0 * f[m]) * w_out_m
        scale = abs(t_in) + abs(t_out) + abs(t_mid)
        return (t_in + t_out - t_mid) / scale if scale else 0.0

    d_lo, d_hi = mismatch(lo), mismatch(hi)
    for _ in range(200):
        if d_lo == 0.0:
            hi = lo
            break
        if d_hi == 0.0:
            lo = hi
            break
        if _opposite(d_lo, d_hi):
            break
        mid = 0.5 * (lo + hi)
        if count(mid) <= node_target:
            lo, d_lo = mid, mismatch(mid)
        else:
            hi, d_hi = mid, mismatch(mid)
        if hi - lo <= 1e-13 * (abs(lo) + abs(hi) + 1e-300):
            break
    scale = abs(lo) + abs(hi) + 1e-300
    if hi > lo and _opposite(d_lo, d_hi):
        energy = brentq(mismatch, lo, hi, xtol=1e-14 * scale + 5e-324, rtol=1e-12, maxiter=200)
    else:
        energy = 0.5 * (lo + hi)

    # --- assemble, normalize, verify ----------------------------------------
    f = f_list(energy)
    w0, w1 = outward_start(energy)
    out = _propagate_out(f, w0, w1, m + 1)
    inner = _propagate_in(f, m - 1)
    if inner[1] == 0.0:
        raise ConvergenceError("matching point fell on a node; re-run with a different grid")
    sigma = out[m] / inner[1]
    phi = np.empty_like(r)
    phi[: m + 1] = out[: m + 1]
    phi[m + 1 :] = sigma * np.asarray(inner[2:])
    w = np.sqrt(r) * phi
    norm = math.sqrt(simpson(w * w, x=r))
    if not (norm > 0.0 and math.isfinite(norm)):
        raise ConvergenceError("assembled eigenfunction could not be normalized")
    w /= norm
    nodes_found = count_nodes(w)
    residual = abs(mismatch(energy))
    diagnostics = {
        "node_target": node_target,
        "nodes_found": int(nodes_found),
        "matching_index": m,
        "turning_radius": float(r[m]),
        "widenings": widenings,
        "count_evaluations": evaluations["count"],
        "mismatch_evaluations": evaluations["mismatch"],
        "final_window": [float(lo), float(hi)],
        "residual": float(residual),
        "boundary_samples": [float(w[0]), float(w[-1])],
        "bracket_history_tail": history[-3:],
    }
    if nodes_found != node_target:
        raise ConvergenceError(
            f"converged state has {nodes_found} nodes, wanted {node_target}: {diagnostics}"
        )
    return EigenResult(
        energy=float(energy),
        radii=r,
        samples=w,
        node_count=int(nodes_found),
        residual=float(residual),
        diagnostics=diagnostics,
    )


def count_nodes(samples: np.ndarray, tail_fraction: float = 1e-8) -> int:
    """Count strict sign changes, ignoring samples in the decaying tails.

    Samples with ``|W| <= tail_fraction * max|W|`` are treated as zero so that
    round-off wiggle in the classically forbidden regions does not register.
    """
    w = np.asarray(samples, dtype=float)
    if w.size < 2:
        return 0
    amax = float(np.max(np.abs(w)))
    if amax == 0.0:
        return 0
    kept = w[np.abs(w) > tail_fraction * amax]
    if kept.size < 2:
        return 0
    signs = np.sign(kept)
    return int(np.sum(signs[1:] * signs[:-1] < 0.0))


def overlap(
    f: Callable[[float], float],
    g: Callable[[float], float],
    lo: float,
    hi: float,
    weight: Optional[Callable[[float], float]] = None,
    tol: float = 1e-12,
) -> float:
    """Adaptive-quadrature inner product ``int f g (weight) dr``.

    Raises :class:`AccuracyError` when the quadrature error estimate stays
    above ``1e-8`` (non-convergent refinement).
    """
    if weight is None:
        integrand = lambda x: f(x) * g(x)
    else:
        integrand = lambda x: f(x) * g(x) * weight(x)
    value, err = quad(integrand, lo, hi, epsabs=tol, epsrel=1e-10, limit=400)
    if err > 1e-8:
        raise AccuracyError(f"overlap quadrature error estimate {err:.3g} exceeds 1e-8")
    return value


def fd_check(
    func: Callable[[float], float],
    first: Callable[[float], float],
    second: Callable[[float], float],
    points: Sequence[float],
    step_fraction: float = 1e-3,
) -> float:
    """Maximum relative error of claimed derivatives against Richardson FD.

    Central differences at steps ``h`` and ``h/2`` are Richardson-combined to
    fourth order and compared with the claimed first and second derivatives.
    """
    points = list(points)
    if not points:
        raise DomainError("fd_check needs at least one probe point")
    floor = max(1e-30, max(abs(first(x)) for x in points) * 1e-12,
                max(abs(second(x)) for x in points) * 1e-12)
    worst = 0.0
    for x in points:
        h = step_fraction * max(abs(x), 1e-6)
        d_h = (func(x + h) - func(x - h)) / (2.0 * h)
        d_h2 = (func(x + h / 2) - func(x - h / 2)) / h
        d_rich = (4.0 * d_h2 - d_h) / 3.0
        s_h = (func(x + h) - 2.0 * func(x) + func(x - h)) / (h * h)
        s_h2 = (func(x + h / 2) - 2.0 * func(x) + func(x - h / 2)) / (h * h / 4.0)
        s_rich = (4.0 * s_h2 - s_h) / 3.0
        worst = max(worst, abs(d_rich - first(x)) / max(abs(first(x)), floor))
        worst = max(worst, abs(s_rich - second(x)) / max(abs(second(x)), floor))
    return worst
