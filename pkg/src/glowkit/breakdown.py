"""Glow-discharge ignition criterion and operating-regime sweeps.

An electron must collect the gas ionization energy faster than diffusion
carries it to the walls. With N_i the collision count needed to ionize
and N_d the collision count survived before wall loss, ignition is
predicted when N_i / N_d <= 1:

    N_i = U_i / du = m_e U_i (nu_c^2 + omega^2) / (e E^2)
    N_d = 2 Lambda^2 / (3 l^2)

Two evaluation paths are exposed on purpose:

* :func:`breakdown_ratio` evaluates the full criterion from kinetics.
* :func:`breakdown_ratio_closed_form` is a legacy closed-form fit with
  pre-baked coefficients for argon driven at 2.45 GHz in a d = 0.23 m
  vessel (T in K, E in V/m, P in Pa). It disagrees with the full
  criterion by a constant factor of about 2.3; both are kept so the two
  conventions can be compared rather than silently reconciled. The
  exactly re-derived coefficients are available from
  :func:`ratio_coefficients`.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence, TextIO

from . import jsonio
from .constants import K_B, M_E, Q_E
from .core import ChamberGeometry, GasSpecies, PlasmaConditions, diffusion_length
from .kinetics import KineticState, kinetic_state

# Above roughly this pressure the diffuse glow gives way to filamentary
# arcing. Empirical operating cutoff (about 10 mbar), not derived; override
# per call if the vessel behaves differently.
ARC_PRESSURE_THRESHOLD_PA = 1000.0

CSV_COLUMNS = ("E", "P", "T", "l", "nu_c", "E_eff", "N_i", "N_d", "ratio", "log10_ratio", "regime")

SCHEMA_VERSION = 1


class Regime(Enum):
    NO_IGNITION = "no-ignition"
    GLOW_DISCHARGE = "glow-discharge"
    ARCING_RISK = "arcing-risk"


@dataclass(frozen=True)
class BreakdownReport:
    """Ignition prediction with all intermediate kinetic quantities."""

    collisions_to_ionize: float   # N_i, continuous
    collisions_to_wall: float     # N_d, continuous
    ratio: float                  # N_i / N_d, +inf when E = 0
    log10_ratio: float
    regime: Regime
    kinetic: KineticState
    diffusion_length: float       # m

    def to_json_dict(self) -> dict:
        return {
            "N_i": self.collisions_to_ionize,
            "N_d": self.collisions_to_wall,
            "ratio": self.ratio,
            "log10_ratio": self.log10_ratio,
            "regime": self.regime.value,
            "mean_free_path": self.kinetic.mean_free_path,
            "collision_frequency": self.kinetic.collision_frequency,
            "mean_free_time": self.kinetic.mean_free_time,
            "effective_field": self.kinetic.effective_field,
            "energy_gain_ev": self.kinetic.energy_gain_ev,
            "diffusion_length": self.diffusion_length,
        }


def collisions_to_ionize(gas: GasSpecies, kinetic: KineticState) -> float:
    """Collision count for an electron to accumulate the ionization energy.

    Continuous, not rounded: N_i = U_i / du.
    """
    if not kinetic.energy_gain_ev > 0.0:
        raise ValueError("energy gain per collision must be positive to ionize")
    return gas.ionization_energy_ev / kinetic.energy_gain_ev


def collisions_to_wall(kinetic: KineticState, diffusion_length_m: float) -> float:
    """Collision count survived before diffusive wall loss: 2 Lambda^2 / (3 l^2)."""
    if not kinetic.mean_free_path > 0.0:
        raise ValueError("mean free path must be positive")
    if not diffusion_length_m > 0.0:
        raise ValueError("diffusion length must be positive")
    ratio = diffusion_length_m / kinetic.mean_free_path
    return 2.0 * ratio * ratio / 3.0


def classify_regime(ratio: float, pressure: float, arc_threshold: float) -> Regime:
    """Pure classification of (ratio, P) against the ignition and arcing thresholds."""
    if ratio > 1.0:
        return Regime.NO_IGNITION
    if pressure >= arc_threshold:
        return Regime.ARCING_RISK
    return Regime.GLOW_DISCHARGE


def breakdown_ratio(
    gas: GasSpecies,
    conditions: PlasmaConditions,
    geometry: ChamberGeometry,
    arc_threshold: float = ARC_PRESSURE_THRESHOLD_PA,
) -> BreakdownReport:
    """Evaluate the full ignition criterion at one operating point.

    Ignition (ratio <= 1, boundary inclusive) is classified as glow
    discharge below the arcing pressure threshold and as arcing risk at
    or above it. E = 0 cannot ignite; it reports ratio = +inf rather
    than raising, so axis sweeps can traverse degenerate endpoints.
    """
    kin = kinetic_state(gas, conditions)
    lam = diffusion_length(geometry)
    n_wall = collisions_to_wall(kin, lam)
    if kin.energy_gain_ev > 0.0:
        n_ion = collisions_to_ionize(gas, kin)
        ratio = n_ion / n_wall
    else:
        n_ion = math.inf
        ratio = math.inf
    return BreakdownReport(
        collisions_to_ionize=n_ion,
        collisions_to_wall=n_wall,
        ratio=ratio,
        log10_ratio=math.log10(ratio),
        regime=classify_regime(ratio, conditions.pressure, arc_threshold),
        kinetic=kin,
        diffusion_length=lam,
    )


def breakdown_ratio_closed_form(conditions: PlasmaConditions) -> float:
    """Legacy closed-form ratio fit: 2.6e-17 T / E^2 + 20800 T^2 / (E^2 P^2).

    Coefficients are fixed (argon, 2.45 GHz drive, d = 0.23 m vessel) and
    kept verbatim for cross-checking; see the module docstring for how
    this relates to :func:`breakdown_ratio`.
    """
    e_amp = conditions.field_amplitude
    p = conditions.pressure
    t = conditions.temperature
    if not e_amp > 0.0:
        raise ValueError("closed-form ratio requires E > 0")
    e2 = e_amp * e_amp
    return 2.6e-17 * t / e2 + 20800.0 * t * t / (e2 * p * p)


def ratio_coefficients(
    gas: GasSpecies,
    geometry: ChamberGeometry,
    angular_frequency: float,
) -> tuple[float, float]:
    """Exact coefficients (A, B) of the criterion written as A T / E^2 + B T^2 / (E^2 P^2).

    Substituting the kinetic expressions for l and nu_c into the full
    criterion collapses it to this two-term form; A carries the
    pressure-independent collisional term and B the field-oscillation
    term. Useful for comparing against the fixed closed-form fit.
    """
    lam = diffusion_length(geometry)
    u_i = gas.ionization_energy_ev
    sigma = gas.cross_section_m2
    a_coeff = 12.0 * u_i * K_B / (math.pi * Q_E * lam * lam)
    b_coeff = (
        3.0
        * M_E
        * u_i
        * angular_frequency
        * angular_frequency
        * K_B
        * K_B
        / (4.0 * Q_E * sigma * sigma * lam * lam)
    )
    return a_coeff, b_coeff


@dataclass(frozen=True)
class SweepGrid:
    """Breakdown reports over an (E, P) grid at a fixed temperature.

    cells[i][j] corresponds to e_axis[i], p_axis[j].
    """

    e_axis: tuple[float, ...]
    p_axis: tuple[float, ...]
    temperature: float
    cells: tuple[tuple[BreakdownReport, ...], ...]


def _validate_axis(values: Sequence[float], name: str) -> tuple[float, ...]:
    axis = tuple(float(v) for v in values)
    if not axis:
        raise ValueError(f"{name} axis must not be empty")
    for i in range(1, len(axis)):
        if not axis[i] > axis[i - 1]:
            raise ValueError(f"{name} axis not strictly increasing at index {i}")
    return axis


def sweep(
    gas: GasSpecies,
    geometry: ChamberGeometry,
    e_axis: Iterable[float],
    p_axis: Iterable[float],
    temperature: float,
    angular_frequency: float,
    arc_threshold: float = ARC_PRESSURE_THRESHOLD_PA,
) -> SweepGrid:
    """Evaluate the criterion over a grid. Cells are independent and deterministic."""
    e_vals = _validate_axis(list(e_axis), "E")
    p_vals = _validate_axis(list(p_axis), "P")
    cells = tuple(
        tuple(
            breakdown_ratio(
                gas,
                PlasmaConditions(
                    field_amplitude=e,
                    angular_frequency=angular_frequency,
                    pressure=p,
                    temperature=temperature,
                ),
                geometry,
                arc_threshold=arc_threshold,
            )
            for p in p_vals
        )
        for e in e_vals
    )
    return SweepGrid(e_axis=e_vals, p_axis=p_vals, temperature=temperature, cells=cells)


def write_sweep_csv(grid: SweepGrid, stream: TextIO, metadata: dict | None = None) -> None:
    """Write a sweep as CSV with the fixed column contract.

    Floats are rendered with ``repr`` so identical grids give identical
    bytes. An optional metadata dict is embedded as a single leading
    '#'-prefixed comment line.
    """
    if metadata is not None:
        stream.write("# " + json.dumps(jsonio.sanitize(metadata)) + "\n")
    stream.write(",".join(CSV_COLUMNS) + "\n")
    for i, e in enumerate(grid.e_axis):
        for j, p in enumerate(grid.p_axis):
            cell = grid.cells[i][j]
            kin = cell.kinetic
            row = (
                repr(e),
                repr(p),
                repr(grid.temperature),
                repr(kin.mean_free_path),
                repr(kin.collision_frequency),
                repr(kin.effective_field),
                repr(cell.collisions_to_ionize),
                repr(cell.collisions_to_wall),
                repr(cell.ratio),
                repr(cell.log10_ratio),
                cell.regime.value,
            )
            stream.write(",".join(row) + "\n")


def sweep_to_json_dict(grid: SweepGrid, metadata: dict | None = None) -> dict:
    doc: dict = {"schema_version": SCHEMA_VERSION}
    if metadata is not None:
        doc["config"] = metadata
    doc.update(
        temperature=grid.temperature,
        e_axis=list(grid.e_axis),
        p_axis=list(grid.p_axis),
        cells=[[cell.to_json_dict() for cell in row] for row in grid.cells],
    )
    return doc
