"""Working-gas data, chamber operating point, vessel geometry, diffusion length.

Everything is stored in SI units. Pressure in mbar and drive frequency in
GHz are accepted only at construction boundaries and converted on the way
in (mbar -> Pa is exactly x100). All types are immutable values; all
operations are pure functions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Literal, Union

MBAR_TO_PA = 100.0

# First zero of the Bessel function J0, lowest radial diffusion mode of a cylinder.
_BESSEL_J0_ZERO = 2.405


@dataclass(frozen=True)
class GasSpecies:
    """A working gas: ionization energy [eV] and electron collision cross-section [m^2]."""

    name: str
    ionization_energy_ev: float
    cross_section_m2: float

    def __post_init__(self) -> None:
        if not self.ionization_energy_ev > 0.0:
            raise ValueError(f"ionization energy must be positive, got {self.ionization_energy_ev!r}")
        if not self.cross_section_m2 > 0.0:
            raise ValueError(f"collision cross-section must be positive, got {self.cross_section_m2!r}")


ARGON = GasSpecies(name="argon", ionization_energy_ev=15.76, cross_section_m2=1.1e-19)

# Registry is extensible but ships with argon only. Air is modelled solely as an
# inert pressure contribution, never as a reactive species.
GAS_REGISTRY: dict[str, GasSpecies] = {ARGON.name: ARGON}


def get_gas(name: str) -> GasSpecies:
    try:
        return GAS_REGISTRY[name.lower()]
    except KeyError:
        known = ", ".join(sorted(GAS_REGISTRY))
        raise ValueError(f"unknown gas species {name!r} (known: {known})") from None


def register_gas(species: GasSpecies) -> None:
    """Add a species to the registry (replaces an existing entry of the same name)."""
    GAS_REGISTRY[species.name.lower()] = species


def convert_pressure(value: float, unit: Literal["mbar", "Pa"]) -> float:
    """Convert a pressure reading to pascal. mbar is exactly x100; Pa passes through."""
    if not value > 0.0:
        raise ValueError(f"pressure must be positive, got {value!r}")
    if unit == "mbar":
        return value * MBAR_TO_PA
    if unit == "Pa":
        return value
    raise ValueError(f"unknown pressure unit {unit!r} (expected 'mbar' or 'Pa')")


@dataclass(frozen=True)
class PlasmaConditions:
    """Operating point of the chamber: drive field, drive frequency, gas pressure, temperature.

    field_amplitude   E      [V/m],   >= 0
    angular_frequency omega  [rad/s], >= 0 (0 models a DC drive)
    pressure          P      [Pa],    > 0
    temperature       T      [K],     > 0

    The electron ensemble and the neutral gas share one temperature.
    """

    field_amplitude: float
    angular_frequency: float
    pressure: float
    temperature: float

    def __post_init__(self) -> None:
        if self.field_amplitude < 0.0:
            raise ValueError(f"field amplitude must be >= 0, got {self.field_amplitude!r}")
        if self.angular_frequency < 0.0:
            raise ValueError(f"angular frequency must be >= 0, got {self.angular_frequency!r}")
        if not self.pressure > 0.0:
            raise ValueError(f"pressure must be positive, got {self.pressure!r}")
        if not self.temperature > 0.0:
            raise ValueError(f"temperature must be positive, got {self.temperature!r}")

    @classmethod
    def from_lab(
        cls,
        field_amplitude: float,
        frequency_ghz: float,
        pressure_mbar: float,
        temperature: float,
    ) -> "PlasmaConditions":
        """Build from bench units: frequency in GHz, pressure in mbar."""
        return cls(
            field_amplitude=field_amplitude,
            angular_frequency=2.0 * math.pi * frequency_ghz * 1e9,
            pressure=convert_pressure(pressure_mbar, "mbar"),
            temperature=temperature,
        )


@dataclass(frozen=True)
class Hemisphere:
    """Bowl-shaped vessel: a dome of the given diameter sitting on a flat baseplate."""

    diameter: float  # m

    def __post_init__(self) -> None:
        if not self.diameter > 0.0:
            raise ValueError(f"diameter must be positive, got {self.diameter!r}")


@dataclass(frozen=True)
class Cylinder:
    radius: float  # m
    height: float  # m

    def __post_init__(self) -> None:
        if not self.radius > 0.0:
            raise ValueError(f"radius must be positive, got {self.radius!r}")
        if not self.height > 0.0:
            raise ValueError(f"height must be positive, got {self.height!r}")


Shape = Union[Hemisphere, Cylinder]


class DiffusionModel(Enum):
    """How the characteristic diffusion length of the vessel is estimated.

    DIAMETER_OVER_PI: order-of-magnitude estimate, diffusion length = d / pi
    where d is the vessel diameter. Ignores all shape detail beyond d.

    LOWEST_MODE: lowest diffusion mode of a finite cylinder,
    1 / Lambda^2 = (pi / L)^2 + (2.405 / R)^2. Cylinder shapes only.
    """

    DIAMETER_OVER_PI = "d-over-pi"
    LOWEST_MODE = "lowest-mode"


@dataclass(frozen=True)
class ChamberGeometry:
    shape: Shape
    diffusion_model: DiffusionModel = field(default=DiffusionModel.DIAMETER_OVER_PI)


def characteristic_diameter(shape: Shape) -> float:
    if isinstance(shape, Hemisphere):
        return shape.diameter
    return 2.0 * shape.radius


def diffusion_length(geometry: ChamberGeometry) -> float:
    """Characteristic length scale for electron loss to the vessel walls [m]."""
    shape = geometry.shape
    if geometry.diffusion_model is DiffusionModel.DIAMETER_OVER_PI:
        return characteristic_diameter(shape) / math.pi
    if not isinstance(shape, Cylinder):
        raise ValueError("lowest-mode diffusion length is defined for Cylinder shapes only")
    return 1.0 / math.sqrt((math.pi / shape.height) ** 2 + (_BESSEL_J0_ZERO / shape.radius) ** 2)
