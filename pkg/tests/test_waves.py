import math

import pytest

import glowkit as gk

# Frozen high-precision evaluations.
OMEGA_P_1E18 = 56414602311.806276        # rad/s at n_e = 1e18 m^-3
OMEGA_P_1E18_GHZ = 8.9786628204874349    # /2pi, GHz
SKIN_DEPTH_245 = 5.5237117192459142e-3   # m at 2.45 GHz drive
OMEGA_245 = 2.0 * math.pi * 2.45e9


class TestPlasmaFrequency:
    def test_nominal_density(self):
        assert gk.plasma_frequency(1e18) == pytest.approx(OMEGA_P_1E18, rel=1e-12)
        ghz = gk.plasma_frequency(1e18) / (2.0 * math.pi * 1e9)
        assert ghz == pytest.approx(OMEGA_P_1E18_GHZ, rel=1e-12)
        assert ghz == pytest.approx(9.0, rel=0.05)

    def test_vacuum(self):
        assert gk.plasma_frequency(0.0) == 0.0

    def test_square_root_scaling_exact(self):
        assert gk.plasma_frequency(4e18) == 2.0 * gk.plasma_frequency(1e18)

    def test_rejects_negative_density(self):
        with pytest.raises(ValueError):
            gk.plasma_frequency(-1.0)


class TestDecayProfile:
    def test_overdense_at_drive_frequency(self):
        profile = gk.decay_profile(1e18, OMEGA_245)
        assert not profile.propagating
        assert profile.skin_depth == pytest.approx(SKIN_DEPTH_245, rel=1e-12)
        assert profile.decay_constant == pytest.approx(1.0 / SKIN_DEPTH_245, rel=1e-12)
        assert profile.refractive_index is None

    def test_cutoff_is_propagating_with_zero_index(self):
        w_p = gk.plasma_frequency(1e18)
        profile = gk.decay_profile(1e18, w_p)
        assert profile.propagating
        assert profile.refractive_index == pytest.approx(0.0, abs=1e-7)
        assert profile.skin_depth is None

    def test_vacuum_index_is_unity(self):
        profile = gk.decay_profile(0.0, OMEGA_245)
        assert profile.propagating
        assert profile.refractive_index == 1.0

    def test_amplitude_falls_by_e_over_one_skin_depth(self):
        profile = gk.decay_profile(1e18, OMEGA_245)
        assert math.exp(-profile.decay_constant * profile.skin_depth) == pytest.approx(
            1.0 / math.e, rel=1e-15
        )

    def test_continuity_at_cutoff(self):
        # both branches vanish like sqrt(eps) approaching omega_p
        w_p = gk.plasma_frequency(1e18)
        k_p = w_p / gk.CODATA2018.speed_of_light
        for eps in (1e-6, 1e-9, 1e-12):
            below = gk.decay_profile(1e18, w_p * (1.0 - eps))
            above = gk.decay_profile(1e18, w_p * (1.0 + eps))
            assert below.decay_constant < 1.5 * k_p * math.sqrt(2.0 * eps)
            assert above.refractive_index < 1.5 * math.sqrt(2.0 * eps)

    def test_decay_constant_monotone_in_density(self):
        alphas = [
            gk.decay_profile(n_e, OMEGA_245).decay_constant
            for n_e in (2e17, 5e17, 1e18, 5e18, 1e19)
        ]
        assert all(b > a for a, b in zip(alphas, alphas[1:]))

    def test_rejects_nonpositive_frequency(self):
        with pytest.raises(ValueError):
            gk.decay_profile(1e18, 0.0)

    def test_index_squared_consistency(self):
        n_sq = gk.refractive_index_squared(1e18, OMEGA_245)
        profile = gk.decay_profile(1e18, OMEGA_245)
        assert profile.refractive_index_squared == n_sq
        assert n_sq < 0.0
        k = OMEGA_245 / gk.CODATA2018.speed_of_light
        assert profile.decay_constant == pytest.approx(k * math.sqrt(-n_sq), rel=1e-15)
