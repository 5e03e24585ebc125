"""Fundamental physical constants (CODATA 2018) and eV/J helpers.

Safe to import from anywhere; holds only primitive values and pure
functions. All quantities are SI.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass


@dataclass(frozen=True)
class PhysicalConstants:
    electron_mass: float = 9.1093837015e-31      # kg
    elementary_charge: float = 1.602176634e-19   # C
    boltzmann: float = 1.380649e-23              # J/K
    vacuum_permittivity: float = 8.8541878128e-12  # F/m
    speed_of_light: float = 299792458.0          # m/s

    def __post_init__(self) -> None:
        for name, value in asdict(self).items():
            if not value > 0.0:
                raise ValueError(f"constant {name} must be strictly positive, got {value!r}")

    def to_dict(self) -> dict[str, float]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict[str, float]) -> "PhysicalConstants":
        return cls(**data)


CODATA2018 = PhysicalConstants()

# Short aliases used throughout the formulas.
M_E = CODATA2018.electron_mass
Q_E = CODATA2018.elementary_charge
K_B = CODATA2018.boltzmann
EPS_0 = CODATA2018.vacuum_permittivity
C_LIGHT = CODATA2018.speed_of_light


def ev_to_joule(energy_ev: float) -> float:
    """Convert energy from electronvolt to joule (exact charge factor)."""
    return energy_ev * Q_E


def joule_to_ev(energy_j: float) -> float:
    """Convert energy from joule to electronvolt (exact charge factor)."""
    return energy_j / Q_E
