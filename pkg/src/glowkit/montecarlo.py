"""Seeded electron random-walk swarms: a brute-force check on the analytic criterion.

The walk follows the same physical conventions as the analytic model so
the two are directly comparable: free paths are exponential with the
kinetic mean free path, scattering is isotropic, and every collision
deposits the deterministic per-collision energy gain. A walk ends either
ionized (accumulated energy reaches the gas ionization energy) or lost
(its flight segment crosses the vessel boundary).

Start points are the most wall-distant interior points, the conservative
choice: the center of a cylinder, and the on-axis point at half the dome
radius for the hemisphere.

Everything is reproducible bit-exactly from (seed, parameters) on a given
platform, independent of thread count, because each walk consumes its own
PRNG stream keyed by (seed, walk index).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import _kernels
from .core import ChamberGeometry, Cylinder, GasSpecies, Hemisphere, PlasmaConditions
from .kinetics import kinetic_state

PRNG_ID = _kernels.PRNG_ID

# A walk must end long before this; hitting the cap signals a modelling error.
HARD_COLLISION_CAP = 1_000_000_000

# Sentinel collision count meaning "ionization disabled"; far above the cap.
_IONIZATION_DISABLED = 1 << 62

# Exact second moment of an exponential isotropic step, in units of l^2:
# the free-walk mean squared displacement per collision.
FREE_WALK_MSD_COEFFICIENT = 2.0

# Per-collision coefficient implied by the analytic wall-loss count
# N_d = 2 Lambda^2 / (3 l^2), kept for comparison against measurement.
WALL_COUNT_MSD_COEFFICIENT = 2.0 / 3.0

_SEED_LIMIT = 1 << 64


class WalkTerminal(Enum):
    LOST_TO_WALL = "lost-to-wall"
    IONIZED = "ionized"


@dataclass(frozen=True)
class WalkOutcome:
    terminal: WalkTerminal
    collisions: int
    final_r_squared: float  # m^2, squared displacement from the start point


@dataclass(frozen=True)
class SwarmStatistics:
    """Aggregate results of a swarm run; reproducible from (seed, parameters)."""

    n_walks: int
    mean_collisions_to_wall: float
    mean_r2_per_collision: float  # m^2, see wall_loss_statistics
    ionization_fraction: float
    seed: int
    prng: str = PRNG_ID

    def to_json_dict(self) -> dict:
        return {
            "prng": self.prng,
            "seed": self.seed,
            "n_walks": self.n_walks,
            "mean_collisions_to_wall": self.mean_collisions_to_wall,
            "mean_r2_per_collision": self.mean_r2_per_collision,
            "ionization_fraction": self.ionization_fraction,
        }


@dataclass(frozen=True)
class CoefficientVerdict:
    """Outcome of comparing a measured MSD slope against a reference coefficient."""

    reference_coefficient: float  # in units of l^2 per collision
    z_score: float
    consistent: bool  # |z| <= 3


@dataclass(frozen=True)
class DisplacementRegression:
    """Free-walk mean squared displacement regressed against collision count.

    The slope estimates the per-collision MSD; dividing by l^2 gives the
    dimensionless walk coefficient, to be judged against
    FREE_WALK_MSD_COEFFICIENT and WALL_COUNT_MSD_COEFFICIENT.
    """

    n_collisions: tuple[int, ...]
    walks_per_n: int
    mean_r2: tuple[float, ...]     # m^2 at each collision count
    stderr_r2: tuple[float, ...]
    msd_per_collision: float       # regression slope through the origin, m^2
    msd_stderr: float
    mean_free_path: float
    seed: int
    prng: str = PRNG_ID

    @property
    def coefficient(self) -> float:
        """Slope in units of l^2 per collision."""
        return self.msd_per_collision / (self.mean_free_path * self.mean_free_path)

    def verdict(self, reference_coefficient: float) -> CoefficientVerdict:
        reference = reference_coefficient * self.mean_free_path * self.mean_free_path
        z = (self.msd_per_collision - reference) / self.msd_stderr
        return CoefficientVerdict(
            reference_coefficient=reference_coefficient,
            z_score=z,
            consistent=abs(z) <= 3.0,
        )

    def to_json_dict(self) -> dict:
        return {
            "prng": self.prng,
            "seed": self.seed,
            "n_collisions": list(self.n_collisions),
            "walks_per_n": self.walks_per_n,
            "mean_r2": list(self.mean_r2),
            "stderr_r2": list(self.stderr_r2),
            "msd_per_collision": self.msd_per_collision,
            "msd_stderr": self.msd_stderr,
            "mean_free_path": self.mean_free_path,
            "coefficient": self.coefficient,
            "free_walk_reference": FREE_WALK_MSD_COEFFICIENT,
            "wall_count_reference": WALL_COUNT_MSD_COEFFICIENT,
        }


def _check_seed(seed: int) -> int:
    if not 0 <= seed < _SEED_LIMIT:
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed!r}")
    return seed


def _ionization_threshold(gas: GasSpecies, conditions: PlasmaConditions) -> int:
    """Collision count at which accumulated energy first reaches the ionization energy."""
    du = kinetic_state(gas, conditions).energy_gain_ev
    if du <= 0.0:
        return _IONIZATION_DISABLED
    return int(math.ceil(gas.ionization_energy_ev / du))


def run_swarm(
    gas: GasSpecies,
    conditions: PlasmaConditions,
    geometry: ChamberGeometry,
    n_walks: int,
    seed: int,
    ionization: bool = True,
    walk_offset: int = 0,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Run n_walks independent walks; returns (terminal codes, collisions, final R^2).

    Low-level entry point. Walk w uses the PRNG stream keyed by
    (seed, walk_offset + w), so identical indices give identical walks
    regardless of batching. Raises if any walk hits the hard collision cap.
    """
    _check_seed(seed)
    if n_walks < 1:
        raise ValueError(f"n_walks must be >= 1, got {n_walks!r}")
    mfp = kinetic_state(gas, conditions).mean_free_path
    ionize_at = _ionization_threshold(gas, conditions) if ionization else _IONIZATION_DISABLED
    shape = geometry.shape
    if isinstance(shape, Cylinder):
        terminal, collisions, final_r2 = _kernels.walk_swarm_cylinder(
            seed,
            walk_offset,
            n_walks,
            mfp,
            shape.radius,
            shape.height / 2.0,
            0.0,
            0.0,
            0.0,
            ionize_at,
            HARD_COLLISION_CAP,
            _kernels.ZIG_X,
        )
    elif isinstance(shape, Hemisphere):
        radius = shape.diameter / 2.0
        terminal, collisions, final_r2 = _kernels.walk_swarm_halfball(
            seed,
            walk_offset,
            n_walks,
            mfp,
            radius,
            radius / 2.0,
            ionize_at,
            HARD_COLLISION_CAP,
            _kernels.ZIG_X,
        )
    else:
        raise ValueError(f"unsupported shape {shape!r}")
    if np.any(terminal == 2):
        w = int(np.argmax(terminal == 2))
        raise RuntimeError(
            f"walk {walk_offset + w} exceeded the hard cap of {HARD_COLLISION_CAP} collisions"
        )
    return terminal, collisions, final_r2


def walk_electron(
    gas: GasSpecies,
    conditions: PlasmaConditions,
    geometry: ChamberGeometry,
    seed: int,
    walk_index: int = 0,
) -> WalkOutcome:
    """Trace one electron from the start point to ionization or wall loss."""
    terminal, collisions, final_r2 = run_swarm(
        gas, conditions, geometry, 1, seed, ionization=True, walk_offset=walk_index
    )
    kind = WalkTerminal.IONIZED if terminal[0] == 1 else WalkTerminal.LOST_TO_WALL
    return WalkOutcome(terminal=kind, collisions=int(collisions[0]), final_r_squared=float(final_r2[0]))


def wall_loss_statistics(
    gas: GasSpecies,
    conditions: PlasmaConditions,
    geometry: ChamberGeometry,
    n_walks: int,
    seed: int,
) -> SwarmStatistics:
    """Swarm with ionization disabled: every walk ends at the wall.

    mean_collisions_to_wall estimates the survivable collision count that
    the analytic model approximates as 2 Lambda^2 / (3 l^2).

    mean_r2_per_collision is the Wald ratio sum(R^2) / sum(segments),
    where a walk with n collisions flew n + 1 segments (the last one ends
    on the wall). For this walk it converges to the exact per-step second
    moment 2 l^2 whatever the vessel shape.
    """
    if n_walks < 100:
        raise ValueError(f"n_walks must be >= 100 for meaningful statistics, got {n_walks!r}")
    _, collisions, final_r2 = run_swarm(gas, conditions, geometry, n_walks, seed, ionization=False)
    segments = int(collisions.sum()) + n_walks
    return SwarmStatistics(
        n_walks=n_walks,
        mean_collisions_to_wall=float(collisions.mean()),
        mean_r2_per_collision=float(final_r2.sum() / segments),
        ionization_fraction=0.0,
        seed=seed,
    )


def breakdown_probability(
    gas: GasSpecies,
    conditions: PlasmaConditions,
    geometry: ChamberGeometry,
    n_walks: int,
    seed: int,
) -> float:
    """Fraction of walks that ionize before reaching the wall.

    Walk trajectories depend only on (seed, walk index, mean free path),
    not on the field, so raising E at a fixed seed only lowers the
    ionization threshold: the fraction is non-decreasing in E.
    """
    if n_walks < 100:
        raise ValueError(f"n_walks must be >= 100 for meaningful statistics, got {n_walks!r}")
    terminal, _, _ = run_swarm(gas, conditions, geometry, n_walks, seed, ionization=True)
    return float(np.count_nonzero(terminal == 1) / n_walks)


def ignition_statistics(
    gas: GasSpecies,
    conditions: PlasmaConditions,
    geometry: ChamberGeometry,
    n_walks: int,
    seed: int,
) -> SwarmStatistics:
    """Swarm with ionization enabled; wall statistics cover the lost walks only."""
    if n_walks < 100:
        raise ValueError(f"n_walks must be >= 100 for meaningful statistics, got {n_walks!r}")
    terminal, collisions, final_r2 = run_swarm(gas, conditions, geometry, n_walks, seed, ionization=True)
    lost = terminal == 0
    n_lost = int(np.count_nonzero(lost))
    if n_lost:
        mean_wall = float(collisions[lost].mean())
        wald = float(final_r2[lost].sum() / (int(collisions[lost].sum()) + n_lost))
    else:
        mean_wall = math.inf
        wald = math.nan
    return SwarmStatistics(
        n_walks=n_walks,
        mean_collisions_to_wall=mean_wall,
        mean_r2_per_collision=wald,
        ionization_fraction=float(np.count_nonzero(terminal == 1) / n_walks),
        seed=seed,
    )


def displacement_regression(
    gas: GasSpecies,
    conditions: PlasmaConditions,
    n_collisions: tuple[int, ...] = (10, 100, 1000),
    walks_per_n: int = 20_000,
    seed: int = 0,
) -> DisplacementRegression:
    """Measure the free-walk MSD-per-collision slope over fixed collision counts.

    Boundary-free walks, an independent batch per collision count. The
    slope of mean R^2 against N (weighted least squares through the
    origin) is the empirical per-collision MSD.
    """
    _check_seed(seed)
    counts = tuple(int(n) for n in n_collisions)
    if len(counts) < 2:
        raise ValueError("need at least two collision counts to regress")
    if any(n <= 0 for n in counts):
        raise ValueError(f"collision counts must be positive, got {counts!r}")
    if walks_per_n < 100:
        raise ValueError(f"walks_per_n must be >= 100, got {walks_per_n!r}")
    mfp = kinetic_state(gas, conditions).mean_free_path
    means: list[float] = []
    stderrs: list[float] = []
    for j, n in enumerate(counts):
        r2 = _kernels.free_walk_r2(seed, j * walks_per_n, walks_per_n, mfp, n, _kernels.ZIG_X)
        means.append(float(r2.mean()))
        stderrs.append(float(r2.std(ddof=1) / math.sqrt(walks_per_n)))
    weights = [1.0 / (se * se) for se in stderrs]
    denom = sum(w * n * n for w, n in zip(weights, counts))
    slope = sum(w * n * m for w, n, m in zip(weights, counts, means)) / denom
    return DisplacementRegression(
        n_collisions=counts,
        walks_per_n=walks_per_n,
        mean_r2=tuple(means),
        stderr_r2=tuple(stderrs),
        msd_per_collision=slope,
        msd_stderr=1.0 / math.sqrt(denom),
        mean_free_path=mfp,
        seed=seed,
    )
