"""Tests for the driven-quadrupole and crossed-field planar trap models."""

import itertools
import math

import numpy as np
import pytest
from scipy import integrate

from trapspec import DomainError, ExcludedLevelError, StabilityError
from trapspec.numerov import RadialProblem, overlap, solve_eigen
from trapspec.planar import (
    PaulFrequencies,
    PaulParams,
    PenningFrequencies,
    PenningParams,
    PlanarPartnerPair,
    paul_effective_potential,
    paul_energy,
    paul_frequencies,
    paul_related_systems,
    paul_shell_count,
    paul_susy_partner,
    paul_wavefunctions,
    penning_energy,
    penning_frequencies,
    penning_state_count,
    penning_susy_partner,
    penning_wavefunction,
    static_quadrupole_potential,
    validate_planar_numbers,
)

# Natural-unit fixtures: unit secular frequency for the driven trap and an
# irrational frequency triple for the static one.
PAUL = PaulFrequencies(
    quadrupole=80.0, secular=1.0, length=1.0, drive=1600.0, drive_ratio=20.0,
    mass=1.0, hbar=1.0,
)
PENNING = PenningFrequencies(
    axial=1.0, cyclotron=math.sqrt(7.0), hybrid=math.sqrt(5.0), mass=1.0, hbar=1.0
)

E_CHARGE = 1.602176634e-19


def si_paul_params():
    return PaulParams(
        voltage=5.0,
        size=1.0e-3,
        drive=2.0 * math.pi * 20.0e6,
        charge=E_CHARGE,
        mass=6.642156e-26,
    )


def radial_oracle(omega, abs_m, n_nodes, mass=1.0):
    """Shooting eigenvalue of the 2D radial equation with the M^2-1/4 barrier."""
    problem = RadialProblem(
        potential=lambda r: 0.5 * mass * omega**2 * r * r,
        centrifugal=abs_m * abs_m - 0.25,
        mass=mass,
        r_min=1e-6 / math.sqrt(mass * omega),
        r_max=12.0 / math.sqrt(mass * omega),
        origin_exponent=abs_m + 0.5,
    )
    return solve_eigen(problem, n_nodes).energy


class TestPaulFrequencies:
    def test_param_validation(self):
        with pytest.raises(DomainError):
            PaulParams(5.0, 0.0, 1e8, E_CHARGE, 1e-25)
        with pytest.raises(DomainError):
            PaulParams(0.0, 1e-3, 1e8, E_CHARGE, 1e-25)
        with pytest.raises(DomainError):
            PaulParams(5.0, 1e-3, 1e8, 0.0, 1e-25)

    def test_quadrupole_frequency_scaling(self):
        p = si_paul_params()
        quad = PaulParams(4.0 * p.voltage, p.size, p.drive, p.charge, p.mass)
        f1 = paul_frequencies(p)
        f4 = paul_frequencies(quad)
        assert f4.quadrupole == pytest.approx(2.0 * f1.quadrupole, rel=1e-14)

    def test_secular_frequency_drive_scaling(self):
        p = si_paul_params()
        slow = PaulParams(p.voltage, p.size, p.drive / 2.0, p.charge, p.mass)
        f_fast = paul_frequencies(p)
        f_slow = paul_frequencies(slow)
        assert f_slow.secular == pytest.approx(2.0 * f_fast.secular, rel=1e-14)

    def test_length_frequency_identity(self):
        f = paul_frequencies(si_paul_params())
        assert f.length**2 * f.secular == pytest.approx(
            f.hbar / f.mass, rel=1e-12
        )

    def test_slow_drive_warns(self):
        p = si_paul_params()
        f = paul_frequencies(p)
        slow = PaulParams(p.voltage, p.size, 9.0 * f.quadrupole, p.charge, p.mass)
        with pytest.warns(UserWarning, match="ratio"):
            paul_frequencies(slow)

    def test_reference_numbers(self):
        f = paul_frequencies(si_paul_params())
        assert f.secular == pytest.approx(33932.54777128917, rel=1e-12)
        assert f.drive_ratio > 10.0


class TestPaulPotentials:
    def test_static_quadrupole_value_and_laplace(self):
        p = si_paul_params()
        assert static_quadrupole_potential(p, 0.0, 1e-4) == pytest.approx(
            p.voltage / (2.0 * p.size**2) * 1e-8, rel=1e-14
        )
        # axisymmetric Laplacian d2/dz2 + (1/rho) d/drho (rho d/drho) = 0
        h = 1e-6
        rho, z = 3e-4, 2e-4
        d2z = (
            static_quadrupole_potential(p, rho, z + h)
            - 2.0 * static_quadrupole_potential(p, rho, z)
            + static_quadrupole_potential(p, rho, z - h)
        ) / h**2
        dr = lambda r: (
            static_quadrupole_potential(p, r + h, z)
            - static_quadrupole_potential(p, r - h, z)
        ) / (2.0 * h)
        radial = (dr(rho) + rho * (dr(rho + h) - dr(rho - h)) / (2.0 * h)) / rho
        scale = abs(d2z)
        assert abs(d2z + radial) < 1e-6 * scale

    def test_effective_potential_shape(self):
        f = paul_frequencies(si_paul_params())
        assert paul_effective_potential(f, 0.0, 0.0) == 0.0
        s = 1e-5
        ratio = paul_effective_potential(f, 0.0, s) / paul_effective_potential(
            f, s, 0.0
        )
        assert ratio == pytest.approx(4.0, rel=1e-12)

    def test_effective_potential_from_gradient_identity(self):
        # (q^2 / 4 m drive^2) |grad Phi|^2 with the static quadrupole Phi
        # must reproduce the closed-form well pointwise.
        p = si_paul_params()
        f = paul_frequencies(p)
        front = p.charge**2 / (4.0 * p.mass * p.drive**2)
        for rho, z in ((1e-4, 0.0), (2e-4, 1e-4), (0.0, 3e-4)):
            gr = -p.voltage / (2.0 * p.size**2) * rho
            gz = p.voltage / p.size**2 * z
            want = front * (gr * gr + gz * gz)
            assert paul_effective_potential(f, rho, z) == pytest.approx(
                want, rel=1e-12
            )


class TestPaulEnergies:
    def test_ground_level(self):
        assert paul_energy(PAUL, 0, 0) == pytest.approx(2.0, rel=1e-14)

    def test_level_formula(self):
        for n, k in ((2, 0), (1, 3), (4, 2)):
            assert paul_energy(PAUL, n, k) == pytest.approx(
                float(n + 2 * k + 2), rel=1e-14
            )

    def test_invalid_numbers(self):
        with pytest.raises(DomainError):
            paul_energy(PAUL, -1, 0)
        with pytest.raises(DomainError):
            paul_energy(PAUL, 0, -1)
        with pytest.raises(DomainError):
            validate_planar_numbers(2, 1, 0)  # parity
        with pytest.raises(DomainError):
            validate_planar_numbers(1, 2, 0)  # N < |M|

    def test_separation_against_radial_oracle(self):
        # 2D radial eigenvalue + hbar w_p (2K + 1) axial offset = E_{N,K}.
        for n, m, k in ((0, 0, 0), (2, 2, 1), (3, 1, 0)):
            e2d = radial_oracle(PAUL.secular, m, (n - m) // 2)
            total = e2d + PAUL.quantum * (2 * k + 1)
            assert total == pytest.approx(paul_energy(PAUL, n, k), rel=1e-6)


class TestPaulWavefunctions:
    def test_ground_radial_nodeless(self):
        _, x = paul_wavefunctions(PAUL, 0, 0, 0)
        rho = np.linspace(1e-3, 8.0, 3001)
        assert np.all(x(rho) > 0.0)

    def test_axial_norm(self):
        for k in (0, 1, 5, 12):
            axial, _ = paul_wavefunctions(PAUL, 0, 0, k)
            val, _ = integrate.quad(
                lambda z: axial(z) ** 2, -np.inf, np.inf, limit=200
            )
            assert abs(val - 1.0) < 1e-10

    def test_axial_scale_is_double_frequency(self):
        axial, _ = paul_wavefunctions(PAUL, 0, 0, 0)
        assert axial.z_scale == pytest.approx(PAUL.length / math.sqrt(2.0), rel=1e-14)

    def test_radial_orthonormality(self):
        for m in (0, 2):
            states = [
                paul_wavefunctions(PAUL, m + 2 * j, m, 0)[1] for j in range(4)
            ]
            for i, a in enumerate(states):
                for j, b in enumerate(states):
                    val = overlap(a, b, 0.0, np.inf)
                    assert abs(val - (1.0 if i == j else 0.0)) < 1e-10

    def test_azimuthal_phase(self):
        axial, _ = paul_wavefunctions(PAUL, 2, 2, 0)
        base = axial(0.3)
        with_phase = axial(0.3, math.pi / 4.0)
        assert with_phase == pytest.approx(base * np.exp(1j * math.pi / 2.0))

    def test_node_count(self):
        rho = np.linspace(1e-3, 10.0, 8001)
        for n, m in ((4, 0), (6, 2), (5, 1)):
            vals = paul_wavefunctions(PAUL, n, m, 0)[1](rho)
            signs = np.sign(vals[np.abs(vals) > 1e-9 * np.max(np.abs(vals))])
            assert int(np.sum(signs[:-1] * signs[1:] < 0)) == (n - m) // 2


class TestPlanarPartner:
    def test_minus_is_shifted_next_tower(self):
        pair = paul_susy_partner(PAUL, 1)
        upper = paul_susy_partner(PAUL, 2)
        for rho in (0.2, 0.9, 2.5):
            assert pair.minus_potential(rho) == pytest.approx(
                upper.plus_potential(rho) + 2.0 * PAUL.quantum, rel=1e-13
            )

    def test_gap_is_repulsive(self):
        pair = paul_susy_partner(PAUL, 0)
        for rho in (0.1, 0.7, 2.0):
            gap = pair.minus_potential(rho) - pair.plus_potential(rho)
            want = 0.5 / rho**2 + 1.0  # (hbar^2/2m)(2|M|+1)/rho^2 + hbar w
            assert gap == pytest.approx(want, rel=1e-12)
            assert gap > 0.0

    def test_tower_spectra(self):
        pair = paul_susy_partner(PAUL, 2)
        assert pair.plus_spectrum(2) == 0.0
        assert pair.plus_spectrum(6) == pytest.approx(4.0)
        assert pair.minus_spectrum(4) == pytest.approx(2.0)
        with pytest.raises(ExcludedLevelError):
            pair.minus_spectrum(2)
        with pytest.raises(DomainError):
            pair.minus_spectrum(3)

    def test_minus_ground_energy_numeric(self):
        # Lowest minus-side level (two quanta above the removed ground).
        pair = paul_susy_partner(PAUL, 0)
        m_up = 1
        e = radial_oracle(PAUL.secular, m_up, 0)  # inner tower |M|+1
        # V- = V+(|M|+1) + 2 hbar w; ground-referencing shifts cancel:
        e_minus = e - PAUL.quantum * (m_up + 1) + 2.0 * PAUL.quantum
        assert e_minus == pytest.approx(pair.minus_spectrum(2), rel=1e-6)

    def test_wavefunction_index_map(self):
        pair = paul_susy_partner(PAUL, 1)
        mapped = pair.partner_wavefunction(3)
        _, direct = paul_wavefunctions(PAUL, 2, 2, 0)
        rho = np.linspace(0.05, 7.0, 40)
        np.testing.assert_allclose(mapped(rho), direct(rho), rtol=1e-12)

    def test_lowest_partner_state_nodeless(self):
        pair = paul_susy_partner(PAUL, 2)
        rho = np.linspace(1e-3, 9.0, 4001)
        assert np.all(pair.partner_wavefunction(4)(rho) > 0.0)

    def test_annihilation_of_ground(self):
        pair = paul_susy_partner(PAUL, 1)
        _, ground = paul_wavefunctions(PAUL, 1, 1, 0)
        rho = np.linspace(0.02, 9.0, 20001)
        lowered = ground.derivative(rho) + pair.superpotential_derivative(rho) * ground(rho)
        norm = math.sqrt(integrate.simpson(lowered**2, x=rho))
        assert norm < 1e-8

    def test_superpotential_stationary_at_ground_peak(self):
        pair = paul_susy_partner(PAUL, 3)
        peak = pair.length * math.sqrt(3.5)
        assert pair.superpotential_derivative(peak) == pytest.approx(0.0, abs=1e-13)

    def test_validation(self):
        with pytest.raises(DomainError):
            PlanarPartnerPair(abs_m=-1, omega=1.0, mass=1.0, hbar=1.0)
        pair = paul_susy_partner(PAUL, 0)
        with pytest.raises(DomainError):
            pair.superpotential_derivative(0.0)


class TestPaulShellCounts:
    def test_first_values(self):
        assert paul_shell_count(2) == 2
        assert paul_shell_count(3) == 6

    def test_matches_enumeration(self):
        # Count (N, M, K) triples with N + 2K + 2 <= E_tilde, two spins each.
        for e_tilde in range(2, 31):
            count = 0
            for m in range(-e_tilde, e_tilde + 1):
                for n in range(abs(m), e_tilde + 1, 2):
                    for k in range(0, e_tilde):
                        if n + 2 * k + 2 <= e_tilde:
                            count += 2
            assert paul_shell_count(e_tilde) == count

    def test_domain(self):
        with pytest.raises(DomainError):
            paul_shell_count(1)
        with pytest.raises(DomainError):
            paul_shell_count(2.5)

    def test_related_systems(self):
        assert paul_related_systems(7) == [1, 3, 7, 15, 27, 45, 69]
        seq = paul_related_systems(5)
        assert seq[1:] == [paul_shell_count(e) + 1 for e in range(2, 6)]
        with pytest.raises(DomainError):
            paul_related_systems(0)


class TestPenningFrequencies:
    def test_param_validation(self):
        with pytest.raises(DomainError):
            PenningParams(10.0, 3e-3, 5.0, -E_CHARGE, 1e-25)
        with pytest.raises(DomainError):
            PenningParams(10.0, 3e-3, 0.0, E_CHARGE, 1e-25)

    def test_hybrid_frequency_algebra(self):
        # With w_z = 1 and w_c = 2 the hybrid frequency is sqrt(2).
        params = PenningParams(
            voltage=1.0, size=1.0, axial_field=2.0, charge=1.0, mass=1.0
        )
        f = penning_frequencies(params, hbar=1.0)
        assert f.axial == pytest.approx(1.0, rel=1e-14)
        assert f.cyclotron == pytest.approx(2.0, rel=1e-14)
        assert f.hybrid == pytest.approx(math.sqrt(2.0), rel=1e-14)

    def test_boundary_tuning_rejected(self):
        # w_z^2 = 2 and w_c^2 = 4 put the discriminant at exactly zero.
        params = PenningParams(
            voltage=2.0, size=1.0, axial_field=2.0, charge=1.0, mass=1.0
        )
        with pytest.raises(StabilityError):
            penning_frequencies(params, hbar=1.0)
        weak = PenningParams(
            voltage=1.0, size=1.0, axial_field=1.0, charge=1.0, mass=1.0
        )
        with pytest.raises(StabilityError):
            penning_frequencies(weak, hbar=1.0)

    def test_tuning_in_unit_interval(self):
        for b in (1.5, 2.0, 40.0):
            params = PenningParams(
                voltage=1.0, size=1.0, axial_field=b, charge=1.0, mass=1.0
            )
            f = penning_frequencies(params, hbar=1.0)
            assert 0.0 < f.tuning < 1.0

    def test_characteristic_lengths(self):
        f = PENNING
        assert f.cyclotron_length == pytest.approx(7.0**-0.25, rel=1e-13)
        assert f.axial_length == pytest.approx(1.0, rel=1e-13)
        assert f.radial_length == pytest.approx(
            math.sqrt(2.0) * 5.0**-0.25, rel=1e-13
        )


class TestPenningEnergies:
    def test_ground_level(self):
        want = 0.5 * (PENNING.hybrid + PENNING.axial)
        assert penning_energy(PENNING, 0, 0, 0) == pytest.approx(want, rel=1e-14)

    def test_magnetron_descent(self):
        # At fixed N and K the energy falls linearly with M.
        levels = [penning_energy(PENNING, 4, 0, m) for m in (-4, -2, 0, 2, 4)]
        gaps = np.diff(levels)
        np.testing.assert_allclose(gaps, -PENNING.cyclotron, rtol=1e-12)

    def test_matches_radial_oracle(self):
        for n, m, k in ((0, 0, 0), (2, -2, 1), (3, 1, 2)):
            e_radial = radial_oracle(0.5 * PENNING.hybrid, abs(m), (n - abs(m)) // 2)
            want = (
                e_radial
                - 0.5 * PENNING.cyclotron * m
                + PENNING.axial * (k + 0.5)
            )
            assert penning_energy(PENNING, n, k, m) == pytest.approx(want, rel=1e-6)

    def test_magnetron_cap(self):
        with pytest.raises(DomainError):
            penning_energy(PENNING, 12, 0, 12, magnetron_cap=5)
        with pytest.raises(DomainError):
            penning_energy(PENNING, 102, 0, 102)

    def test_level_injectivity(self):
        energies = []
        for m in range(-6, 7):
            for n in range(abs(m), 7):
                if (n - abs(m)) % 2:
                    continue
                for k in range(7):
                    energies.append(penning_energy(PENNING, n, k, m))
        energies.sort()
        gaps = np.diff(energies)
        assert np.min(gaps) > 1e-9


class TestPenningStates:
    def test_ground_state_nodeless(self):
        psi = penning_wavefunction(PENNING, 0, 0, 0)
        rho = np.linspace(1e-3, 6.0, 500)
        vals = psi(rho, 0.0, 0.4).real
        assert np.all(vals > 0.0)
        z = np.linspace(-5.0, 5.0, 401)
        assert np.all(psi(1.0, 0.0, z).real > 0.0)

    def test_three_dimensional_norm(self):
        psi = penning_wavefunction(PENNING, 2, 1, -2)

        def z_slice(rho):
            val, _ = integrate.quad(
                lambda z: abs(psi(rho, 0.0, z)) ** 2, -np.inf, np.inf, limit=200
            )
            return val

        total, _ = integrate.quad(
            lambda rho: 2.0 * math.pi * rho * z_slice(rho), 0.0, np.inf, limit=200
        )
        assert abs(total - 1.0) < 1e-8

    def test_energy_attached(self):
        psi = penning_wavefunction(PENNING, 2, 0, 2)
        assert psi.energy == pytest.approx(penning_energy(PENNING, 2, 0, 2), rel=1e-14)

    def test_radial_factor_matches_partner_map(self):
        pair = penning_susy_partner(PENNING, 1)
        mapped = pair.partner_wavefunction(3)
        direct = penning_wavefunction(PENNING, 2, 0, 2).radial
        rho = np.linspace(0.05, 6.0, 30)
        np.testing.assert_allclose(mapped(rho), direct(rho), rtol=1e-12)

    def test_partner_tower_spacing(self):
        # Penning partner towers step by hbar Omega (twice the radial quantum).
        pair = penning_susy_partner(PENNING, 0)
        assert pair.omega == pytest.approx(0.5 * PENNING.hybrid, rel=1e-14)
        step = pair.minus_spectrum(4) - pair.minus_spectrum(2)
        assert step == pytest.approx(PENNING.hybrid, rel=1e-13)


class TestPenningCounting:
    def brute_count(self, freqs, energy_cap, magnetron_cap):
        """Triple loop over (K, M, N) with generous hard ranges."""
        count = 0
        for k in range(0, 200):
            for m in range(-200, magnetron_cap + 1):
                for n in range(abs(m), abs(m) + 400, 2):
                    if (n + m) // 2 > magnetron_cap:
                        break
                    e = 0.5 * (
                        freqs.hybrid * n
                        - freqs.cyclotron * m
                        + freqs.hybrid
                        + freqs.axial
                    ) + freqs.axial * k
                    if e > energy_cap:
                        break  # energy increases with N at fixed (M, K)
                    count += 2
        return count

    def test_matches_enumeration(self):
        for cap in (3.0, 5.5, 8.2):
            got = penning_state_count(PENNING, cap, magnetron_cap=6)
            want = self.brute_count(PENNING, cap, 6)
            assert got == want

    def test_cap_validation(self):
        with pytest.raises(DomainError):
            penning_state_count(PENNING, 5.0, magnetron_cap=-1)

    def test_count_grows_with_cap(self):
        counts = [
            penning_state_count(PENNING, cap, magnetron_cap=4)
            for cap in (2.0, 4.0, 6.0, 8.0)
        ]
        assert all(b >= a for a, b in zip(counts, counts[1:]))
        assert counts[-1] > counts[0]
