"""glowkit: microwave glow-discharge ignition criterion and plasma lab analysis.

Predicts whether a low-pressure gas in a microwave cavity ignites into a
glow discharge, cross-checks the analytic criterion with a seeded electron
random-walk simulator, computes plasma wave parameters (skin depth of an
overdense plasma), and analyses bench data: optical-cavity finesse traces
and surface removal rates.
"""

from .breakdown import (
    ARC_PRESSURE_THRESHOLD_PA,
    BreakdownReport,
    Regime,
    SweepGrid,
    breakdown_ratio,
    breakdown_ratio_closed_form,
    collisions_to_ionize,
    collisions_to_wall,
    ratio_coefficients,
    sweep,
    write_sweep_csv,
)
from .constants import CODATA2018, PhysicalConstants, ev_to_joule, joule_to_ev
from .core import (
    ARGON,
    ChamberGeometry,
    Cylinder,
    DiffusionModel,
    GasSpecies,
    Hemisphere,
    PlasmaConditions,
    convert_pressure,
    diffusion_length,
    get_gas,
    register_gas,
)
from .kinetics import (
    KineticState,
    collision_frequency,
    effective_field,
    energy_gain_per_collision,
    kinetic_state,
    maxwell_boltzmann_mean_speed,
    mean_free_path,
)
from .labdata import (
    CavityTrace,
    FinesseResult,
    InsufficientPeaksError,
    PeakConfig,
    PeakFitError,
    RemovalRecord,
    compute_removal_rates,
    extract_finesse,
    removal_records_from_csv,
    synthetic_cavity_trace,
    washer_rate_estimate,
)
from .montecarlo import (
    FREE_WALK_MSD_COEFFICIENT,
    WALL_COUNT_MSD_COEFFICIENT,
    DisplacementRegression,
    SwarmStatistics,
    WalkOutcome,
    WalkTerminal,
    breakdown_probability,
    displacement_regression,
    ignition_statistics,
    run_swarm,
    walk_electron,
    wall_loss_statistics,
)
from .waves import (
    PlasmaWaveParameters,
    decay_profile,
    plasma_frequency,
    refractive_index_squared,
)

__version__ = "0.1.0"
