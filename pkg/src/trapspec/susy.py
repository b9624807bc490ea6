"""Supersymmetric partner construction for the isotropic-trap radial problem.

For a fixed angular momentum ``L`` the radial hamiltonian, referenced to its
ground level, factorizes through a superpotential ``U``:

    H+ = A† A ,   H- = A A† ,   A = d/dr + U'(r) ,

    V± = (hbar^2/2m) (U'^2 ∓ U'') ,   U = r^2/2r0^2 - (L+1) ln(r/r0) .

The two hamiltonians share their spectrum except for the ground state of
``H+``, which ``A`` annihilates and which is absent from ``H-``.  For the
oscillator tower this pairing is exact and closed-form: ``H-`` is again a
centrifugal-plus-harmonic problem with ``L + 1``, the spectra are
``E+ = hbar w0 (N - L)`` over ``N = L, L+2, ...`` and the same values for
``H-`` starting at ``N_s = L + 2``, and the partner eigenfunctions are index
maps of the conventional ones, ``W-_{N_s,L} = W_{N_s-1,L+1}``.

Removing the lowest tower level models a closed shell plus one valence
particle; iterating the construction steps through the magic filling
sequence.  Iterated partners are produced in closed form through the
quantum-defect recovery path (:func:`trapspec.defect.recover_partner` with
``delta = 0``) rather than by re-factorizing each rung.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError, ExcludedLevelError
from .oscillator3d import OscillatorScales, RadialEigenstate, radial_wavefunction_3d, shell_capacity

__all__ = [
    "Superpotential",
    "PartnerPair",
    "superpotential",
    "input_potential",
    "partner_pair",
    "partner_spectrum",
    "partner_wavefunction",
    "related_systems_3d",
]


def _positive_radii(r) -> np.ndarray:
    arr = np.asarray(r, dtype=float)
    if np.any(arr <= 0.0):
        raise DomainError("superpotential evaluators need r > 0")
    return arr


@dataclass(frozen=True)
class Superpotential:
    """Generating function ``U(r) = r^2/2r0^2 - (L+1) ln(r/r0)``.

    Its derivative vanishes only at ``r = r0 sqrt(L+1)`` (the ground-state
    probability peak), and ``exp(-U)`` is the unnormalized nodeless ground
    profile of the ``L`` tower.
    """

    l_angular: int
    r0: float

    def value(self, r):
        arr = _positive_radii(r)
        u = arr / self.r0
        out = 0.5 * u * u - (self.l_angular + 1.0) * np.log(u)
        return float(out) if out.ndim == 0 else out

    __call__ = value

    def derivative(self, r):
        arr = _positive_radii(r)
        out = arr / self.r0**2 - (self.l_angular + 1.0) / arr
        return float(out) if out.ndim == 0 else out

    def second_derivative(self, r):
        arr = _positive_radii(r)
        out = 1.0 / self.r0**2 + (self.l_angular + 1.0) / (arr * arr)
        return float(out) if out.ndim == 0 else out


def superpotential(l_angular: int, r0: float) -> Superpotential:
    """Superpotential of the fixed-``L`` tower with oscillator length ``r0``."""
    if int(l_angular) != l_angular or l_angular < 0:
        raise DomainError(f"L must be a nonnegative integer, got {l_angular!r}")
    if not (r0 > 0.0 and math.isfinite(r0)):
        raise DomainError(f"r0 must be positive and finite, got {r0!r}")
    return Superpotential(l_angular=int(l_angular), r0=r0)


def input_potential(l_angular: int, scales: OscillatorScales) -> Callable[[float], float]:
    """Ground-referenced radial potential of the ``L`` tower.

    ``V+(r) = (hbar^2/2m) L(L+1)/r^2 + (1/2) m w0^2 r^2 - hbar w0 (L + 3/2)``,
    whose lowest eigenvalue is exactly zero.
    """
    if int(l_angular) != l_angular or l_angular < 0:
        raise DomainError(f"L must be a nonnegative integer, got {l_angular!r}")
    pref = scales.hbar**2 / (2.0 * scales.mass)
    spring = 0.5 * scales.mass * scales.omega0**2
    shift = scales.quantum * (l_angular + 1.5)
    ll = float(l_angular * (l_angular + 1))

    def v_plus(r):
        arr = np.asarray(r, dtype=float)
        out = pref * ll / (arr * arr) + spring * arr * arr - shift
        return float(out) if out.ndim == 0 else out

    return v_plus


@dataclass(frozen=True)
class PartnerPair:
    """The two partner potentials generated by one superpotential.

    Both evaluators are computed through the derivative combinations
    ``(hbar^2/2m)(U'^2 ∓ U'')`` — not from the simplified closed forms — so
    algebraic identities about them are genuine checks.  The pair shares all
    eigenvalues except the zero ground level, present only on the plus side.
    """

    generator: Superpotential
    scales: OscillatorScales

    @property
    def l_angular(self) -> int:
        return self.generator.l_angular

    def _combo(self, r, sign: float):
        pref = self.scales.hbar**2 / (2.0 * self.scales.mass)
        du = self.generator.derivative(r)
        d2u = self.generator.second_derivative(r)
        out = pref * (np.asarray(du) ** 2 + sign * np.asarray(d2u))
        return float(out) if out.ndim == 0 else out

    def plus_potential(self, r):
        return self._combo(r, -1.0)

    def minus_potential(self, r):
        return self._combo(r, +1.0)


def partner_pair(generator: Superpotential, scales: OscillatorScales) -> PartnerPair:
    """Pair ``(V+, V-)`` generated by ``U``; ``V-`` carries ``(L+1)(L+2)``."""
    if not math.isclose(generator.r0, scales.r0, rel_tol=1e-12):
        raise DomainError(
            f"superpotential length {generator.r0!r} does not match the trap "
            f"oscillator length {scales.r0!r}"
        )
    return PartnerPair(generator=generator, scales=scales)


def _check_partner_label(l_angular: int, n_spectroscopic: int) -> None:
    if int(l_angular) != l_angular or l_angular < 0:
        raise DomainError(f"L must be a nonnegative integer, got {l_angular!r}")
    n, l = n_spectroscopic, l_angular
    if int(n) != n or n < l or (n - l) % 2 != 0:
        raise DomainError(f"N_s must lie in {{{l}, {l + 2}, ...}}, got {n!r}")
    if n == l:
        raise ExcludedLevelError(
            f"N_s = L = {l} is the level the partner construction removes"
        )


def partner_spectrum(l_angular: int, n_spectroscopic: int, scales: OscillatorScales) -> float:
    """Minus-side eigenvalue ``hbar w0 (N_s - L)`` for ``N_s = L+2, L+4, ...``.

    Identical to the plus-side value at the same label; the ``N_s = L``
    ground level is absent and raises :class:`ExcludedLevelError`.
    """
    _check_partner_label(l_angular, n_spectroscopic)
    return scales.quantum * (n_spectroscopic - l_angular)


def partner_wavefunction(
    n_spectroscopic: int, l_angular: int, scales: OscillatorScales
) -> RadialEigenstate:
    """Minus-side eigenfunction: the index-mapped profile ``W_{N_s-1, L+1}``.

    This is *not* the conventional ``W_{N_s,L}`` state: the ladder operator
    shifts both indices, which lowers the node count by one.  The returned
    state's ``energy`` is its absolute trap energy; the zero-referenced
    partner eigenvalue is :func:`partner_spectrum`.
    """
    _check_partner_label(l_angular, n_spectroscopic)
    return radial_wavefunction_3d(scales, n_spectroscopic - 1, l_angular + 1)


def related_systems_3d(l_angular: int, count: int) -> list[int]:
    """Particle numbers of the systems reached by iterating the construction.

    Each iterate describes one valence particle above a closed shell, so the
    n-th entry is ``1 + shell_capacity(N)`` with the filled level ``N``
    stepping by two.  The towers start differently: ``L = 0`` begins with a
    lone particle (empty core, ``N = -1``), ``L = 1`` with a filled s shell
    (``N = 0``), giving 1, 5, 21, 57, ... and 2, 11, 36, 85, ...
    """
    if l_angular not in (0, 1):
        raise DomainError(
            f"filling sequences are defined for towers L = 0 and L = 1, got {l_angular!r}"
        )
    if int(count) != count or count < 1:
        raise DomainError(f"count must be a positive integer, got {count!r}")
    start = -1 if l_angular == 0 else 0
    return [1 + shell_capacity(start + 2 * k) for k in range(int(count))]
