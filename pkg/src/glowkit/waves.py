"""Plasma frequency, refractive index, and evanescent decay of a drive wave.

A collisionless electron fluid of density n_e has plasma frequency
omega_p = sqrt(n_e e^2 / (m_e eps_0)) and refractive index
n^2(omega) = 1 - (omega_p / omega)^2. Below omega_p the wave is
evanescent with decay constant alpha = (omega / c) sqrt((omega_p/omega)^2 - 1);
the field amplitude falls by e^-1 over one skin depth 1/alpha. An
overdense plasma therefore glows only in a thin shell at the wall where
the drive field still penetrates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .constants import C_LIGHT, EPS_0, M_E, Q_E


@dataclass(frozen=True)
class PlasmaWaveParameters:
    """Wave propagation report for one (n_e, omega) pair.

    Exactly one of the two branches is populated: a propagating wave has
    a real refractive index (cutoff omega = omega_p is classified as
    propagating with index 0); an evanescent wave has a decay constant
    and skin depth.
    """

    electron_density: float          # 1/m^3
    plasma_frequency: float          # rad/s
    refractive_index_squared: float  # may be negative
    propagating: bool
    refractive_index: Optional[float] = None  # set when propagating
    decay_constant: Optional[float] = None    # 1/m, set when evanescent
    skin_depth: Optional[float] = None        # m, set when evanescent

    def to_json_dict(self) -> dict:
        return {
            "electron_density": self.electron_density,
            "plasma_frequency": self.plasma_frequency,
            "refractive_index_squared": self.refractive_index_squared,
            "propagating": self.propagating,
            "refractive_index": self.refractive_index,
            "decay_constant": self.decay_constant,
            "skin_depth": self.skin_depth,
        }


def plasma_frequency(electron_density: float) -> float:
    """Natural oscillation frequency of the electron fluid [rad/s]; 0 in vacuum."""
    if electron_density < 0.0:
        raise ValueError(f"electron density must be >= 0, got {electron_density!r}")
    return math.sqrt(electron_density * Q_E * Q_E / (M_E * EPS_0))


def refractive_index_squared(electron_density: float, angular_frequency: float) -> float:
    """n^2(omega) = 1 - (omega_p / omega)^2; negative means evanescent."""
    if not angular_frequency > 0.0:
        raise ValueError(f"angular frequency must be positive, got {angular_frequency!r}")
    w_p = plasma_frequency(electron_density)
    x = w_p / angular_frequency
    return 1.0 - x * x


def decay_profile(electron_density: float, angular_frequency: float) -> PlasmaWaveParameters:
    """Classify a wave as propagating or evanescent and quantify either branch."""
    if not angular_frequency > 0.0:
        raise ValueError(f"angular frequency must be positive, got {angular_frequency!r}")
    w_p = plasma_frequency(electron_density)
    n_squared = refractive_index_squared(electron_density, angular_frequency)
    if n_squared >= 0.0:
        return PlasmaWaveParameters(
            electron_density=electron_density,
            plasma_frequency=w_p,
            refractive_index_squared=n_squared,
            propagating=True,
            refractive_index=math.sqrt(n_squared),
        )
    k = angular_frequency / C_LIGHT
    alpha = k * math.sqrt(-n_squared)
    return PlasmaWaveParameters(
        electron_density=electron_density,
        plasma_frequency=w_p,
        refractive_index_squared=n_squared,
        propagating=False,
        decay_constant=alpha,
        skin_depth=1.0 / alpha,
    )
