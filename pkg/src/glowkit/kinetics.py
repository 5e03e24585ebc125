"""Kinetic theory of a single electron in a neutral gas under an oscillating field.

Mean free path           l      = k_B T / (sqrt(2) P sigma)
Collision frequency      nu_c   = 4 P sigma / sqrt(m_e pi k_B T)
Effective field          E_eff  = E nu_c / sqrt(nu_c^2 + omega^2)
Energy gain / collision  du     = e E^2 / (m_e (nu_c^2 + omega^2))   [eV]

The speed convention is the Maxwell-Boltzmann mean speed: the identity
l * nu_c = sqrt(8 k_B T / (pi m_e)) holds by construction. Collisions are
elastic, the cross-section is energy independent, and the magnetic force
on the electron is neglected.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import K_B, M_E, Q_E
from .core import GasSpecies, PlasmaConditions


@dataclass(frozen=True)
class KineticState:
    """Per-electron transport quantities at one operating point."""

    mean_free_path: float        # m
    collision_frequency: float   # 1/s
    mean_free_time: float        # s, exactly 1/collision_frequency
    effective_field: float       # V/m
    energy_gain_ev: float        # eV per collision


def mean_free_path(gas: GasSpecies, conditions: PlasmaConditions) -> float:
    """Electron mean free path [m], linear in T and inversely linear in P."""
    return K_B * conditions.temperature / (math.sqrt(2.0) * conditions.pressure * gas.cross_section_m2)


def collision_frequency(gas: GasSpecies, conditions: PlasmaConditions) -> float:
    """Electron-atom collision rate [1/s], linear in P."""
    return (
        4.0
        * conditions.pressure
        * gas.cross_section_m2
        / math.sqrt(M_E * math.pi * K_B * conditions.temperature)
    )


def effective_field(conditions: PlasmaConditions, nu_c: float) -> float:
    """Field amplitude rescaled for the energy-transfer efficiency of an AC drive.

    Returns E * nu_c / sqrt(nu_c^2 + omega^2). Equals E in the DC limit
    (omega = 0) and falls as omega grows past nu_c: an electron that
    oscillates many times between collisions picks up little net energy.
    """
    if nu_c < 0.0:
        raise ValueError(f"collision frequency must be >= 0, got {nu_c!r}")
    omega = conditions.angular_frequency
    if omega == 0.0:
        return conditions.field_amplitude
    return conditions.field_amplitude * nu_c / math.hypot(nu_c, omega)


def energy_gain_per_collision(conditions: PlasmaConditions, nu_c: float) -> float:
    """Average energy an electron gains from the field per collision [eV].

    e E^2 / (m_e (nu_c^2 + omega^2)); algebraically identical to
    e E_eff^2 / (m_e nu_c^2). The leading factor of e converts J to eV.
    """
    omega = conditions.angular_frequency
    if nu_c == 0.0 and omega == 0.0:
        raise ValueError("nu_c = 0 with omega = 0 leaves no energy-transfer mechanism")
    if nu_c < 0.0:
        raise ValueError(f"collision frequency must be >= 0, got {nu_c!r}")
    e_amp = conditions.field_amplitude
    return Q_E * e_amp * e_amp / (M_E * (nu_c * nu_c + omega * omega))


def kinetic_state(gas: GasSpecies, conditions: PlasmaConditions) -> KineticState:
    """Evaluate all per-electron transport quantities for one operating point."""
    nu_c = collision_frequency(gas, conditions)
    return KineticState(
        mean_free_path=mean_free_path(gas, conditions),
        collision_frequency=nu_c,
        mean_free_time=1.0 / nu_c,
        effective_field=effective_field(conditions, nu_c),
        energy_gain_ev=energy_gain_per_collision(conditions, nu_c),
    )


def maxwell_boltzmann_mean_speed(temperature: float) -> float:
    """Mean electron speed sqrt(8 k_B T / (pi m_e)) [m/s]."""
    return math.sqrt(8.0 * K_B * temperature / (math.pi * M_E))
