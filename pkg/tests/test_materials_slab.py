import math

import numpy as np
import pytest

from squeezeslab.constants import BOLTZMANN, HBAR, SPEED_OF_LIGHT as C
from squeezeslab.materials import ConstantIndex, LorentzOscillator, refractive_index
from squeezeslab.slab import (
    SlabSpec,
    homogeneous_limit,
    noise_moment,
    scatter_coefficients,
    slab_amplitudes,
    thermal_occupation,
    unwrap_half_phases,
)

from conftest import OMEGA_IR, WAVELENGTH_IR


class TestRefractiveIndex:
    def test_constant_model_returns_parameters(self):
        assert refractive_index(ConstantIndex(1.5, 0.005), OMEGA_IR) == 1.5 + 0.005j

    def test_vacuum(self):
        assert refractive_index(ConstantIndex(1.0, 0.0), 1e15) == 1.0 + 0.0j

    def test_lorentz_static_limit(self):
        # Far below resonance with negligible damping the index tends to
        # sqrt(1 + plasma^2/omega0^2); plasma = omega0 gives sqrt(2).
        w0 = 1e16
        model = LorentzOscillator(omega0=w0, plasma=w0, gamma=1e-9 * w0)
        n = refractive_index(model, 1e-4 * w0)
        assert n.real == pytest.approx(math.sqrt(2.0), rel=1e-7)
        assert abs(n.imag) < 1e-10

    def test_lorentz_passivity(self):
        model = LorentzOscillator(omega0=1e16, plasma=5e15, gamma=1e13)
        omegas = np.logspace(13, 17, 300)
        n = refractive_index(model, omegas)
        assert np.all(n.imag >= 0.0)
        assert np.all(n.real > 0.0)

    def test_domain_error(self):
        with pytest.raises(ValueError):
            refractive_index(ConstantIndex(1.5), 0.0)
        with pytest.raises(ValueError):
            refractive_index(ConstantIndex(1.5), -1e15)

    def test_invalid_parameters(self):
        with pytest.raises(ValueError):
            ConstantIndex(0.0, 0.0)
        with pytest.raises(ValueError):
            ConstantIndex(1.5, -0.1)
        with pytest.raises(ValueError):
            LorentzOscillator(omega0=1e15, plasma=1e15, gamma=-1.0)


class TestScatterCoefficients:
    def test_no_slab(self, lossless_glass):
        coeffs = scatter_coefficients(SlabSpec(0.0, lossless_glass), OMEGA_IR)
        assert coeffs.t_s == pytest.approx(1.0 + 0.0j, abs=1e-15)
        assert coeffs.r_s == pytest.approx(0.0 + 0.0j, abs=1e-15)
        assert coeffs.absorptance == pytest.approx(0.0, abs=1e-15)

    def test_quarter_wave_resonance(self, lossless_glass):
        slab = SlabSpec(WAVELENGTH_IR / (4 * 1.5), lossless_glass)
        coeffs = scatter_coefficients(slab, OMEGA_IR)
        assert coeffs.abs_t == pytest.approx(1.0, abs=1e-12)
        assert coeffs.abs_r == pytest.approx(0.0, abs=1e-12)

    def test_eighth_wave_values(self, eighth_wave_slab):
        coeffs = scatter_coefficients(eighth_wave_slab, OMEGA_IR)
        assert coeffs.abs_t == pytest.approx(2 * 1.5 / (1.5**2 + 1), abs=1e-12)  # 12/13
        assert coeffs.abs_r == pytest.approx((1.5**2 - 1) / (1.5**2 + 1), abs=1e-12)  # 5/13

    def test_lossless_absorptance_zero(self, lossless_glass):
        rng = np.random.default_rng(11)
        for _ in range(50):
            slab = SlabSpec(rng.uniform(0.0, 30e-6), lossless_glass)
            assert abs(scatter_coefficients(slab, OMEGA_IR).absorptance) < 1e-12

    def test_phase_decomposition_round_trip(self, lossy_glass):
        rng = np.random.default_rng(5)
        for _ in range(100):
            slab = SlabSpec(rng.uniform(1e-8, 30e-6), lossy_glass)
            c = scatter_coefficients(slab, rng.uniform(0.5, 2.0) * OMEGA_IR)
            assert c.abs_r * np.exp(2j * c.delta_r) == pytest.approx(c.r_s, abs=1e-12)
            assert c.abs_t * np.exp(2j * c.delta_t) == pytest.approx(c.t_s, abs=1e-12)
            assert -math.pi / 2 < c.delta_r <= math.pi / 2
            assert -math.pi / 2 < c.delta_t <= math.pi / 2

    def test_lossless_unitarity_random_grid(self):
        rng = np.random.default_rng(19)
        eta = rng.uniform(1.0, 3.0, 1000)
        omega = rng.uniform(0.5, 2.0, 1000) * OMEGA_IR
        l = rng.uniform(0.0, 20e-6, 1000)
        for e, w, li in zip(eta, omega, l):
            r, t = slab_amplitudes(ConstantIndex(e, 0.0), w, li)
            assert abs(abs(r) ** 2 + abs(t) ** 2 - 1.0) < 1e-12

    def test_passivity_random_grid(self):
        rng = np.random.default_rng(23)
        for _ in range(500):
            model = ConstantIndex(rng.uniform(1.0, 3.0), rng.uniform(0.0, 0.2))
            r, t = slab_amplitudes(model, rng.uniform(0.5, 2.0) * OMEGA_IR, rng.uniform(0.0, 30e-6))
            a = 1.0 - abs(r) ** 2 - abs(t) ** 2
            assert -1e-12 <= a <= 1.0

    def test_thickness_periodicity_lossless(self, lossless_glass):
        period = WAVELENGTH_IR / (4 * 1.5)
        rng = np.random.default_rng(31)
        for _ in range(50):
            l = rng.uniform(0.0, 10e-6)
            _, t1 = slab_amplitudes(lossless_glass, OMEGA_IR, l)
            _, t2 = slab_amplitudes(lossless_glass, OMEGA_IR, l + period)
            assert abs(abs(t1) - abs(t2)) < 1e-10

    def test_half_phase_unwrap(self, lossy_glass):
        ls = np.linspace(1e-8, 5e-6, 400)
        _, t = slab_amplitudes(lossy_glass, OMEGA_IR, ls)
        deltas = np.angle(t) / 2.0
        smooth = unwrap_half_phases(deltas)
        assert np.max(np.abs(np.diff(smooth))) < 0.5  # no pi jumps left
        # unwrapping preserves each phase modulo pi
        assert np.allclose(np.cos(2 * smooth), np.cos(2 * deltas), atol=1e-12)


class TestHomogeneousLimit:
    def test_lossless_magnitude_one(self, lossless_glass):
        t = homogeneous_limit(SlabSpec(3e-6, lossless_glass), OMEGA_IR)
        assert abs(t) == pytest.approx(1.0, abs=1e-15)

    def test_absorbing_magnitude(self, lossy_glass):
        l = 10e-6
        t = homogeneous_limit(SlabSpec(l, lossy_glass), OMEGA_IR)
        assert abs(t) == pytest.approx(math.exp(-2.0 * OMEGA_IR * 0.005 * l / C), rel=1e-12)
        # phase advances by 2 w eta l / c modulo 2 pi
        assert np.angle(t) == pytest.approx(
            math.remainder(2.0 * OMEGA_IR * 1.5 * l / C, 2.0 * math.pi), abs=1e-9
        )

    def test_thick_slab_opaque(self, lossy_glass):
        assert abs(homogeneous_limit(SlabSpec(1.0, lossy_glass), OMEGA_IR)) == 0.0


class TestThermalNoise:
    def test_zero_temperature(self):
        assert thermal_occupation(OMEGA_IR, 0.0) == 0.0

    def test_room_temperature_infrared(self):
        # hbar w / kB T evaluated from the constants table is the oracle.
        x = HBAR * OMEGA_IR / (BOLTZMANN * 300.0)
        assert x == pytest.approx(45.07, abs=0.01)
        assert thermal_occupation(OMEGA_IR, 300.0) == pytest.approx(math.exp(-x), rel=1e-10)

    def test_ln2_identity(self):
        # hbar w / kB T = ln 2 gives exactly one thermal photon.
        t = HBAR * OMEGA_IR / (BOLTZMANN * math.log(2.0))
        assert thermal_occupation(OMEGA_IR, t) == pytest.approx(1.0, rel=1e-12)

    def test_noise_moment_zero_cases(self, lossy_glass, lossless_glass):
        assert noise_moment(SlabSpec(5e-6, lossy_glass, temperature=0.0), OMEGA_IR) == 0.0
        assert noise_moment(SlabSpec(5e-6, lossless_glass, temperature=300.0), OMEGA_IR) == (
            pytest.approx(0.0, abs=1e-25)
        )

    def test_noise_moment_product(self, lossy_glass):
        slab = SlabSpec(5e-6, lossy_glass, temperature=300.0)
        a = scatter_coefficients(slab, OMEGA_IR).absorptance
        assert 0.0 < a < 1.0
        expected = thermal_occupation(OMEGA_IR, 300.0) * a
        assert noise_moment(slab, OMEGA_IR) == pytest.approx(expected, rel=1e-12)


def test_slab_spec_validation(lossless_glass):
    with pytest.raises(ValueError):
        SlabSpec(-1e-6, lossless_glass)
    with pytest.raises(ValueError):
        SlabSpec(1e-6, lossless_glass, sigma=0.0)
    with pytest.raises(ValueError):
        SlabSpec(1e-6, lossless_glass, temperature=-1.0)
