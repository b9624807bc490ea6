"""Isotropic 3D oscillator spectrum, radial eigenfunctions, and shell filling.

A magnetically trapped dipole near the minimum of an isotropic trap sees
``U = E0 + (1/2) m w0^2 r^2`` (the constant offset ``E0`` is the potential
value at the trap center).  States are labeled ``(N, L, M)`` with
``L <= N``, ``N - L`` even; the energy ``E_N = E0 + hbar w0 (N + 3/2)``
depends on ``N`` only.  There is no spin degeneracy: the trap holds one
spin orientation, so each level holds ``(N+1)(N+2)/2`` particles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import HBAR
from .errors import DomainError
from .special import laguerre_gen, laguerre_gen_derivative, radial_norm_3d

__all__ = [
    "OscillatorScales",
    "RadialEigenstate",
    "ShellRow",
    "validate_quantum_numbers_3d",
    "allowed_angular",
    "energy_3d",
    "radial_wavefunction_3d",
    "degeneracy",
    "shell_capacity",
    "valence_total",
    "shell_table",
]


@dataclass(frozen=True)
class OscillatorScales:
    """Quantum scales of an isotropic oscillator.

    ``energy_offset`` is the rest energy of the dipole at the trap center
    (``mu * B0`` for a magnetic trap); it is zero in natural units.
    """

    mass: float
    omega0: float
    energy_offset: float = 0.0
    hbar: float = HBAR

    def __post_init__(self):
        if self.mass <= 0.0 or self.omega0 <= 0.0 or self.hbar <= 0.0:
            raise DomainError("mass, omega0, and hbar must all be positive")

    @property
    def r0(self) -> float:
        """Oscillator length ``sqrt(hbar / (m w0))``."""
        return math.sqrt(self.hbar / (self.mass * self.omega0))

    @property
    def quantum(self) -> float:
        """Level spacing ``hbar w0``."""
        return self.hbar * self.omega0

    @classmethod
    def natural(cls) -> "OscillatorScales":
        """Dimensionless scales ``hbar = m = w0 = 1``, zero offset."""
        return cls(mass=1.0, omega0=1.0, energy_offset=0.0, hbar=1.0)


def validate_quantum_numbers_3d(n_principal: int, l_angular: int, m_angular: int = 0) -> None:
    """Reject invalid ``(N, L, M)`` triples.

    Valid states have integer ``N >= 0``, ``0 <= L <= N`` with ``N - L``
    even, and ``|M| <= L``.
    """
    for name, value in (("N", n_principal), ("L", l_angular), ("M", m_angular)):
        if int(value) != value:
            raise DomainError(f"{name} must be an integer, got {value!r}")
    if n_principal < 0 or l_angular < 0:
        raise DomainError(f"N and L must be nonnegative, got N={n_principal}, L={l_angular}")
    if l_angular > n_principal or (n_principal - l_angular) % 2 != 0:
        raise DomainError(
            f"L must satisfy L <= N with N - L even; got N={n_principal}, L={l_angular}"
        )
    if abs(m_angular) > l_angular:
        raise DomainError(f"|M| must not exceed L; got L={l_angular}, M={m_angular}")


def allowed_angular(n_principal: int) -> list[int]:
    """Angular momenta present in level ``N``: ``N, N-2, ..., 1 or 0``."""
    if int(n_principal) != n_principal or n_principal < 0:
        raise DomainError(f"N must be a nonnegative integer, got {n_principal!r}")
    return list(range(n_principal % 2, n_principal + 1, 2))


def energy_3d(scales: OscillatorScales, n_principal: int) -> float:
    """Level energy ``E_N = E0 + hbar w0 (N + 3/2)``."""
    if int(n_principal) != n_principal or n_principal < 0:
        raise DomainError(f"N must be a nonnegative integer, got {n_principal!r}")
    return scales.energy_offset + scales.quantum * (n_principal + 1.5)


@dataclass(frozen=True)
class RadialEigenstate:
    """Radial profile ``W_{N,L}(r) = C (r/r0)^{L+1} e^{-r^2/2r0^2} L_n^{L+1/2}(r^2/r0^2)``.

    ``n = (N - L)/2`` is the Laguerre degree.  ``n_principal`` and
    ``l_angular`` may be non-integer (quantum-defect towers); their difference
    must be a nonnegative even integer.  The full 3D state is
    ``psi = (r0/r) W(r) Y_{LM}``; with the normalization constant used here
    ``int_0^inf W^2 dr = 1``.
    """

    n_principal: float
    l_angular: float
    r0: float
    norm: float
    energy: float

    @property
    def degree(self) -> int:
        return int(round((self.n_principal - self.l_angular) / 2.0))

    def __call__(self, r):
        u = np.asarray(r, dtype=float) / self.r0
        x = u * u
        poly = laguerre_gen(self.degree, self.l_angular + 0.5, x)
        with np.errstate(divide="ignore"):
            val = self.norm * u ** (self.l_angular + 1.0) * np.exp(-0.5 * x) * poly
        return val if np.asarray(r).ndim else float(val)

    def derivative(self, r):
        """Analytic ``dW/dr`` (Laguerre derivative identity, stable in u = r/r0)."""
        u = np.asarray(r, dtype=float) / self.r0
        x = u * u
        a = self.l_angular + 1.0
        poly = laguerre_gen(self.degree, self.l_angular + 0.5, x)
        dpoly = laguerre_gen_derivative(self.degree, self.l_angular + 0.5, x)
        with np.errstate(divide="ignore"):
            val = (
                self.norm
                / self.r0
                * u ** (self.l_angular)
                * np.exp(-0.5 * x)
                * (a * poly - x * poly + 2.0 * x * dpoly)
            )
        return val if np.asarray(r).ndim else float(val)


def radial_wavefunction_3d(scales: OscillatorScales, n_principal: int, l_angular: int) -> RadialEigenstate:
    """Unit-normalized radial profile of the ``(N, L)`` oscillator state."""
    validate_quantum_numbers_3d(n_principal, l_angular)
    r0 = scales.r0
    return RadialEigenstate(
        n_principal=float(n_principal),
        l_angular=float(l_angular),
        r0=r0,
        norm=radial_norm_3d(n_principal, l_angular, r0),
        energy=energy_3d(scales, n_principal),
    )


def degeneracy(n_principal: int) -> int:
    """Orbital count of level ``N``: ``(N+1)(N+2)/2``."""
    if int(n_principal) != n_principal or n_principal < 0:
        raise DomainError(f"N must be a nonnegative integer, got {n_principal!r}")
    n = int(n_principal)
    return (n + 1) * (n + 2) // 2


def shell_capacity(n_principal: int) -> int:
    """Total capacity through level ``N``: ``(N+1)(N+2)(N+3)/6``; zero for N = -1."""
    if int(n_principal) != n_principal or n_principal < -1:
        raise DomainError(f"N must be an integer >= -1, got {n_principal!r}")
    n = int(n_principal)
    if n == -1:
        return 0
    return (n + 1) * (n + 2) * (n + 3) // 6


def valence_total(n_valence: int, d_occupancy: int) -> int:
    """Total particle number with ``d`` particles in the open level ``N+1``.

    With levels through ``N`` filled, adding ``1 <= d <= degeneracy(N+1)``
    particles gives ``n = d + (N+1)(N+2)(N+3)/6``.
    """
    cap_below = shell_capacity(n_valence)
    d_max = degeneracy(n_valence + 1)
    if int(d_occupancy) != d_occupancy or not 1 <= d_occupancy <= d_max:
        raise DomainError(
            f"occupancy must lie in 1..{d_max} for the level above N={n_valence}, got {d_occupancy!r}"
        )
    return int(d_occupancy) + cap_below


@dataclass(frozen=True)
class ShellRow:
    """One closed-shell bookkeeping row."""

    shell_index: int
    degeneracy: int
    cumulative: int


def shell_table(max_n: int) -> list[ShellRow]:
    """Degeneracies and cumulative capacities for ``N = 0..max_n``."""
    if int(max_n) != max_n or max_n < 0:
        raise DomainError(f"max_n must be a nonnegative integer, got {max_n!r}")
    return [
        ShellRow(shell_index=n, degeneracy=degeneracy(n), cumulative=shell_capacity(n))
        for n in range(int(max_n) + 1)
    ]
