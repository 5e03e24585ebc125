"""Command-line front end: sweeps, oracle runs, wave reports, lab analyses.

The CLI marshals arguments to the library and formats results; it holds
no physics. Values come from (lowest to highest precedence) built-in
defaults, an INI config file with one section per subcommand, and
command-line flags. Unknown config keys are hard errors.

Unit discipline in flags: explicit suffixes are honoured ("1mbar",
"2.45GHz"); bare numbers are SI (Pa, Hz, V/m, K, m). Every artifact file
embeds its fully resolved configuration, and ``--replay`` re-runs a
previous artifact from exactly that embedded configuration.

Artifacts are written atomically (temp file, then rename), so an
interrupted run never leaves a truncated file.
"""

from __future__ import annotations

import argparse
import configparser
import json
import math
import os
import sys
from pathlib import Path
from typing import Any, Callable

import numpy as np

from . import breakdown, jsonio, labdata, montecarlo, waves
from .core import (
    ChamberGeometry,
    Cylinder,
    DiffusionModel,
    Hemisphere,
    PlasmaConditions,
    get_gas,
)

SCHEMA_VERSION = 1

OUTPUT_DIR_ENV = "GLOWKIT_OUTPUT_DIR"


class ConfigError(ValueError):
    """A named configuration field failed validation."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


# ---------------------------------------------------------------------------
# unit-aware scalar parsing
# ---------------------------------------------------------------------------


def _as_float(field: str, value: Any) -> float:
    try:
        return float(value)
    except (TypeError, ValueError):
        raise ConfigError(field, f"expected a number, got {value!r}") from None


def parse_pressure(field: str, value: Any) -> float:
    """Pressure in Pa; accepts a bare SI number or an 'mbar'/'Pa' suffix."""
    if not isinstance(value, str):
        pa = _as_float(field, value)
    else:
        text = value.strip()
        lowered = text.lower()
        if lowered.endswith("mbar"):
            pa = _as_float(field, text[:-4]) * 100.0
        elif lowered.endswith("pa"):
            pa = _as_float(field, text[:-2])
        else:
            pa = _as_float(field, text)
    if not pa > 0.0:
        raise ConfigError(field, f"pressure must be positive, got {pa!r} Pa")
    return pa


_FREQ_SUFFIXES = (("ghz", 1e9), ("mhz", 1e6), ("khz", 1e3), ("hz", 1.0))


def parse_frequency(field: str, value: Any) -> float:
    """Drive frequency in Hz; accepts GHz/MHz/kHz/Hz suffixes, bare means Hz."""
    if not isinstance(value, str):
        freq = _as_float(field, value)
    else:
        text = value.strip()
        lowered = text.lower()
        for suffix, scale in _FREQ_SUFFIXES:
            if lowered.endswith(suffix):
                freq = _as_float(field, text[: -len(suffix)]) * scale
                break
        else:
            freq = _as_float(field, text)
    if freq < 0.0:
        raise ConfigError(field, f"frequency must be >= 0, got {freq!r} Hz")
    return freq


def parse_axis(field: str, value: Any) -> str:
    """Normalize an axis spec 'min,max,count[,lin|log]' to its canonical string."""
    if not isinstance(value, str):
        raise ConfigError(field, f"expected 'min,max,count[,lin|log]', got {value!r}")
    parts = [p.strip() for p in value.split(",")]
    if len(parts) == 3:
        parts.append("lin")
    if len(parts) != 4:
        raise ConfigError(field, f"expected 'min,max,count[,lin|log]', got {value!r}")
    lo = _as_float(field, parts[0])
    hi = _as_float(field, parts[1])
    try:
        count = int(parts[2])
    except ValueError:
        raise ConfigError(field, f"axis count must be an integer, got {parts[2]!r}") from None
    scale = parts[3].lower()
    if scale not in ("lin", "log"):
        raise ConfigError(field, f"axis scale must be 'lin' or 'log', got {parts[3]!r}")
    if count < 1:
        raise ConfigError(field, f"axis count must be >= 1, got {count}")
    if count == 1 and hi != lo:
        raise ConfigError(field, "a single-point axis needs min == max")
    if count > 1 and not hi > lo:
        raise ConfigError(field, f"axis needs max > min, got {lo!r}..{hi!r}")
    if scale == "log" and not lo > 0.0:
        raise ConfigError(field, f"log axis requires positive bounds, got min {lo!r}")
    return f"{lo!r},{hi!r},{count},{scale}"


def axis_values(spec: str) -> tuple[float, ...]:
    lo_s, hi_s, count_s, scale = spec.split(",")
    lo, hi, count = float(lo_s), float(hi_s), int(count_s)
    if count == 1:
        return (lo,)
    if scale == "log":
        return tuple(float(x) for x in np.geomspace(lo, hi, count))
    return tuple(float(x) for x in np.linspace(lo, hi, count))


def _positive(parser: Callable[[str, Any], float]) -> Callable[[str, Any], float]:
    def inner(field: str, value: Any) -> float:
        out = parser(field, value)
        if not out > 0.0:
            raise ConfigError(field, f"must be positive, got {out!r}")
        return out

    return inner


def _nonneg_float(field: str, value: Any) -> float:
    out = _as_float(field, value)
    if out < 0.0:
        raise ConfigError(field, f"must be >= 0, got {out!r}")
    return out


def _int_field(field: str, value: Any) -> int:
    try:
        return int(value)
    except (TypeError, ValueError):
        raise ConfigError(field, f"expected an integer, got {value!r}") from None


def _str_field(field: str, value: Any) -> str:
    return str(value)


def _choice(*allowed: str) -> Callable[[str, Any], str]:
    def inner(field: str, value: Any) -> str:
        text = str(value)
        if text not in allowed:
            raise ConfigError(field, f"expected one of {allowed}, got {text!r}")
        return text

    return inner


def _int_list(field: str, value: Any) -> str:
    if isinstance(value, str):
        parts = [p.strip() for p in value.split(",") if p.strip()]
    elif isinstance(value, (list, tuple)):
        parts = [str(p) for p in value]
    else:
        raise ConfigError(field, f"expected a comma-separated integer list, got {value!r}")
    try:
        numbers = [int(p) for p in parts]
    except ValueError:
        raise ConfigError(field, f"expected integers, got {value!r}") from None
    if len(numbers) < 2:
        raise ConfigError(field, "need at least two collision counts")
    return ",".join(str(n) for n in numbers)


# ---------------------------------------------------------------------------
# option tables: one source of truth for flags, config files, and replay
# ---------------------------------------------------------------------------

_GEOMETRY_OPTIONS: dict[str, tuple[Any, Callable[[str, Any], Any], str]] = {
    "diameter": (None, _positive(_as_float), "hemisphere bowl diameter [m]"),
    "radius": (None, _positive(_as_float), "cylinder radius [m]"),
    "height": (None, _positive(_as_float), "cylinder height [m]"),
    "diffusion_model": (
        "d-over-pi",
        _choice("d-over-pi", "lowest-mode"),
        "diffusion length model",
    ),
}

_CONDITION_OPTIONS: dict[str, tuple[Any, Callable[[str, Any], Any], str]] = {
    "gas": ("argon", _str_field, "working gas name"),
    "field": (None, _nonneg_float, "drive field amplitude [V/m]"),
    "pressure": (None, parse_pressure, "gas pressure (bare = Pa, or e.g. 1mbar)"),
    "temperature": (300.0, _positive(_as_float), "gas temperature [K]"),
    "frequency": ("2.45GHz", parse_frequency, "drive frequency (bare = Hz, or e.g. 2.45GHz)"),
}

OPTION_TABLES: dict[str, dict[str, tuple[Any, Callable[[str, Any], Any], str]]] = {
    "point": {
        **_CONDITION_OPTIONS,
        **_GEOMETRY_OPTIONS,
        "arc_threshold": (1000.0, _positive(parse_pressure), "arcing pressure threshold [Pa]"),
        "output": (None, _str_field, "optional JSON artifact path"),
    },
    "sweep": {
        "gas": _CONDITION_OPTIONS["gas"],
        "temperature": _CONDITION_OPTIONS["temperature"],
        "frequency": _CONDITION_OPTIONS["frequency"],
        **_GEOMETRY_OPTIONS,
        "arc_threshold": (1000.0, _positive(parse_pressure), "arcing pressure threshold [Pa]"),
        "e_axis": (None, parse_axis, "field axis 'min,max,count[,lin|log]' [V/m]"),
        "p_axis": (None, parse_axis, "pressure axis 'min,max,count[,lin|log]' [Pa]"),
        "format": ("csv", _choice("csv", "json"), "artifact format"),
        "output": (None, _str_field, "artifact path (default sweep.<format> in output dir)"),
    },
    "oracle": {
        **_CONDITION_OPTIONS,
        **_GEOMETRY_OPTIONS,
        "task": (
            "ignition",
            _choice("ignition", "wall-loss", "walk", "regression"),
            "which swarm estimate to run",
        ),
        "walks": (10_000, _int_field, "number of electron walks"),
        "seed": (1, _int_field, "PRNG seed"),
        "collision_counts": ("10,100,1000", _int_list, "regression collision counts"),
        "walks_per_n": (20_000, _int_field, "regression walks per collision count"),
        "output": (None, _str_field, "JSON artifact path (default oracle.json in output dir)"),
    },
    "waves": {
        "electron_density": (1e18, _nonneg_float, "electron density [1/m^3]"),
        "frequency": _CONDITION_OPTIONS["frequency"],
        "output": (None, _str_field, "optional JSON artifact path"),
    },
    "finesse": {
        "trace": (None, _str_field, "two-column (time, voltage) CSV trace"),
        "threshold_fraction": (0.5, _positive(_as_float), "peak detection threshold fraction"),
        "min_separation_fraction": (0.02, _positive(_as_float), "minimum peak separation fraction"),
        "fit_window_fwhms": (6.0, _positive(_as_float), "fit window half-width in FWHMs"),
        "output": (None, _str_field, "JSON artifact path (default finesse.json in output dir)"),
    },
    "removal": {
        "records": (None, _str_field, "exposure records CSV"),
        "washer_thickness": (None, _positive(_as_float), "washer layer thickness [nm]"),
        "washer_time_low": (None, _positive(_as_float), "earliest possible clean time [min]"),
        "washer_time_high": (None, _positive(_as_float), "latest possible clean time [min]"),
        "format": ("csv", _choice("csv", "json"), "artifact format"),
        "output": (None, _str_field, "artifact path (default removal.<format> in output dir)"),
    },
}

_REQUIRED: dict[str, tuple[str, ...]] = {
    "point": ("field", "pressure"),
    "sweep": ("e_axis", "p_axis"),
    "oracle": ("field", "pressure"),
    "waves": (),
    "finesse": ("trace",),
    "removal": (),
}


def _load_config_file(path: str, subcommand: str) -> dict[str, str]:
    parser = configparser.ConfigParser()
    read = parser.read(path)
    if not read:
        raise ConfigError("config", f"cannot read config file {path!r}")
    for section in parser.sections():
        if section not in OPTION_TABLES:
            raise ConfigError("config", f"unknown section [{section}] in {path!r}")
        table = OPTION_TABLES[section]
        for key in parser[section]:
            if key not in table:
                raise ConfigError("config", f"unknown key {key!r} in section [{section}]")
    if parser.has_section(subcommand):
        return dict(parser[subcommand])
    return {}


def resolve_config(subcommand: str, *sources: dict[str, Any]) -> dict[str, Any]:
    """Merge defaults and override layers into one validated, typed config dict."""
    table = OPTION_TABLES[subcommand]
    merged: dict[str, Any] = {key: default for key, (default, _, _) in table.items()}
    for source in sources:
        for key, value in source.items():
            if key == "subcommand":
                continue
            if key not in table:
                raise ConfigError(key, f"unknown key for subcommand {subcommand!r}")
            if value is not None:
                merged[key] = value
    resolved: dict[str, Any] = {"subcommand": subcommand}
    for key, (_, parse, _) in table.items():
        value = merged[key]
        resolved[key] = None if value is None else parse(key, value)
    for key in _REQUIRED[subcommand]:
        if resolved[key] is None:
            raise ConfigError(key, "required value missing (flag or config file)")
    return resolved


# ---------------------------------------------------------------------------
# building library objects from a resolved config
# ---------------------------------------------------------------------------


def _geometry_from_config(cfg: dict[str, Any]) -> ChamberGeometry:
    model = DiffusionModel(cfg["diffusion_model"])
    has_cylinder = cfg.get("radius") is not None or cfg.get("height") is not None
    if cfg.get("diameter") is not None:
        if has_cylinder:
            raise ConfigError("diameter", "give either a diameter or radius+height, not both")
        return ChamberGeometry(shape=Hemisphere(diameter=cfg["diameter"]), diffusion_model=model)
    if has_cylinder:
        if cfg.get("radius") is None or cfg.get("height") is None:
            raise ConfigError("radius", "cylinder geometry needs both radius and height")
        return ChamberGeometry(
            shape=Cylinder(radius=cfg["radius"], height=cfg["height"]), diffusion_model=model
        )
    return ChamberGeometry(shape=Hemisphere(diameter=0.23), diffusion_model=model)


def _conditions_from_config(cfg: dict[str, Any], field_amplitude: float | None = None) -> PlasmaConditions:
    amplitude = cfg["field"] if field_amplitude is None else field_amplitude
    return PlasmaConditions(
        field_amplitude=amplitude,
        angular_frequency=2.0 * math.pi * cfg["frequency"],
        pressure=cfg["pressure"],
        temperature=cfg["temperature"],
    )


def _output_path(cfg: dict[str, Any], default_name: str) -> Path:
    if cfg.get("output"):
        return Path(cfg["output"])
    return Path(os.environ.get(OUTPUT_DIR_ENV, ".")) / default_name


def atomic_write_text(path: Path, text: str) -> None:
    """Write via a sibling temp file and rename; readers never see partial output."""
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(path.name + ".tmp")
    with open(tmp, "w", newline="") as handle:
        handle.write(text)
    os.replace(tmp, path)


def _embeddable(cfg: dict[str, Any]) -> dict[str, Any]:
    """Config as embedded in artifacts: the destination path is not part of a run."""
    return {key: value for key, value in cfg.items() if key != "output"}


def _write_json_artifact(path: Path, document: dict) -> None:
    atomic_write_text(path, jsonio.dumps(document))


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------


def _cmd_point(cfg: dict[str, Any]) -> int:
    gas = get_gas(cfg["gas"])
    geometry = _geometry_from_config(cfg)
    conditions = _conditions_from_config(cfg)
    report = breakdown.breakdown_ratio(gas, conditions, geometry, arc_threshold=cfg["arc_threshold"])
    closed = (
        breakdown.breakdown_ratio_closed_form(conditions)
        if conditions.field_amplitude > 0.0
        else math.inf
    )
    print(
        f"ratio={report.ratio:.6g} closed_form={closed:.6g} regime={report.regime.value}"
    )
    if cfg.get("output"):
        document = {
            "schema_version": SCHEMA_VERSION,
            "config": _embeddable(cfg),
            "report": report.to_json_dict(),
            "closed_form_ratio": closed,
        }
        _write_json_artifact(Path(cfg["output"]), document)
    return 0


def _cmd_sweep(cfg: dict[str, Any]) -> int:
    gas = get_gas(cfg["gas"])
    geometry = _geometry_from_config(cfg)
    grid = breakdown.sweep(
        gas,
        geometry,
        axis_values(cfg["e_axis"]),
        axis_values(cfg["p_axis"]),
        temperature=cfg["temperature"],
        angular_frequency=2.0 * math.pi * cfg["frequency"],
        arc_threshold=cfg["arc_threshold"],
    )
    path = _output_path(cfg, f"sweep.{cfg['format']}")
    if cfg["format"] == "csv":
        import io

        buffer = io.StringIO()
        breakdown.write_sweep_csv(grid, buffer, metadata=_embeddable(cfg))
        atomic_write_text(path, buffer.getvalue())
    else:
        _write_json_artifact(path, breakdown.sweep_to_json_dict(grid, metadata=_embeddable(cfg)))
    print(f"sweep {len(grid.e_axis)}x{len(grid.p_axis)} cells -> {path}")
    return 0


def _cmd_oracle(cfg: dict[str, Any]) -> int:
    gas = get_gas(cfg["gas"])
    geometry = _geometry_from_config(cfg)
    conditions = _conditions_from_config(cfg)
    task = cfg["task"]
    document: dict[str, Any] = {"schema_version": SCHEMA_VERSION, "config": _embeddable(cfg), "task": task}
    if task == "walk":
        outcome = montecarlo.walk_electron(gas, conditions, geometry, seed=cfg["seed"])
        document["walk"] = {
            "prng": montecarlo.PRNG_ID,
            "terminal": outcome.terminal.value,
            "collisions": outcome.collisions,
            "final_r_squared": outcome.final_r_squared,
        }
        summary = f"walk: {outcome.terminal.value} after {outcome.collisions} collisions"
    elif task == "wall-loss":
        stats = montecarlo.wall_loss_statistics(gas, conditions, geometry, cfg["walks"], cfg["seed"])
        document["statistics"] = stats.to_json_dict()
        summary = f"wall-loss: mean collisions to wall = {stats.mean_collisions_to_wall:.6g}"
    elif task == "ignition":
        stats = montecarlo.ignition_statistics(gas, conditions, geometry, cfg["walks"], cfg["seed"])
        document["statistics"] = stats.to_json_dict()
        summary = f"ignition: fraction = {stats.ionization_fraction:.6g}"
    else:
        counts = tuple(int(n) for n in cfg["collision_counts"].split(","))
        regression = montecarlo.displacement_regression(
            gas, conditions, n_collisions=counts, walks_per_n=cfg["walks_per_n"], seed=cfg["seed"]
        )
        free = regression.verdict(montecarlo.FREE_WALK_MSD_COEFFICIENT)
        wall = regression.verdict(montecarlo.WALL_COUNT_MSD_COEFFICIENT)
        document["regression"] = regression.to_json_dict()
        document["verdicts"] = {
            "free_walk_coefficient_2": {
                "z_score": free.z_score,
                "consistent": free.consistent,
            },
            "wall_count_coefficient_2_3": {
                "z_score": wall.z_score,
                "consistent": wall.consistent,
            },
        }
        summary = (
            f"regression: msd/collision = {regression.coefficient:.4f} l^2 "
            f"(z vs 2: {free.z_score:+.2f}, z vs 2/3: {wall.z_score:+.2f})"
        )
    path = _output_path(cfg, "oracle.json")
    _write_json_artifact(path, document)
    print(f"{summary} -> {path}")
    return 0


def _cmd_waves(cfg: dict[str, Any]) -> int:
    profile = waves.decay_profile(cfg["electron_density"], 2.0 * math.pi * cfg["frequency"])
    if profile.propagating:
        summary = (
            f"propagating: n={profile.refractive_index:.6g} "
            f"omega_p={profile.plasma_frequency:.6g} rad/s"
        )
    else:
        summary = (
            f"evanescent: skin_depth={profile.skin_depth:.6g} m "
            f"alpha={profile.decay_constant:.6g} 1/m "
            f"omega_p={profile.plasma_frequency:.6g} rad/s"
        )
    print(summary)
    if cfg.get("output"):
        document = {
            "schema_version": SCHEMA_VERSION,
            "config": _embeddable(cfg),
            "wave": profile.to_json_dict(),
        }
        _write_json_artifact(Path(cfg["output"]), document)
    return 0


def _cmd_finesse(cfg: dict[str, Any]) -> int:
    trace = labdata.CavityTrace.from_csv(cfg["trace"])
    peak_config = labdata.PeakConfig(
        threshold_fraction=cfg["threshold_fraction"],
        min_separation_fraction=cfg["min_separation_fraction"],
        fit_window_fwhms=cfg["fit_window_fwhms"],
    )
    result = labdata.extract_finesse(trace, peak_config)
    path = _output_path(cfg, "finesse.json")
    document = {
        "schema_version": SCHEMA_VERSION,
        "config": _embeddable(cfg),
        "finesse": result.to_json_dict(),
    }
    _write_json_artifact(path, document)
    print(
        f"finesse={result.finesse:.6g} +/- {result.uncertainty:.2g} "
        f"(n_peaks={result.n_peaks_used}) -> {path}"
    )
    return 0


def _cmd_removal(cfg: dict[str, Any]) -> int:
    washer_keys = ("washer_thickness", "washer_time_low", "washer_time_high")
    has_washer = any(cfg.get(k) is not None for k in washer_keys)
    if has_washer and any(cfg.get(k) is None for k in washer_keys):
        raise ConfigError("washer_thickness", "washer estimate needs thickness and both time bounds")
    if not has_washer and cfg.get("records") is None:
        raise ConfigError("records", "give an exposure records CSV or the washer flags")
    document: dict[str, Any] = {"schema_version": SCHEMA_VERSION, "config": _embeddable(cfg)}
    summaries: list[str] = []
    records = None
    if cfg.get("records") is not None:
        records = labdata.compute_removal_rates(labdata.removal_records_from_csv(cfg["records"]))
        document["records"] = [record.to_json_dict() for record in records]
        summaries.append(f"{len(records)} records")
    if has_washer:
        low, high = labdata.washer_rate_estimate(
            cfg["washer_thickness"], (cfg["washer_time_low"], cfg["washer_time_high"])
        )
        document["washer_rate_nm_per_min"] = {"low": low, "high": high}
        summaries.append(f"washer rate {low:.3g}..{high:.3g} nm/min")
    # a washer-only run has no table to tabulate; it always emits JSON
    fmt = cfg["format"] if records is not None else "json"
    path = _output_path(cfg, f"removal.{fmt}")
    if fmt == "json":
        _write_json_artifact(path, document)
    else:
        import io

        buffer = io.StringIO()
        buffer.write("# " + json.dumps(jsonio.sanitize(_embeddable(cfg))) + "\n")
        labdata.write_removal_csv(records, buffer)
        atomic_write_text(path, buffer.getvalue())
    print("; ".join(summaries) + f" -> {path}")
    return 0


_HANDLERS = {
    "point": _cmd_point,
    "sweep": _cmd_sweep,
    "oracle": _cmd_oracle,
    "waves": _cmd_waves,
    "finesse": _cmd_finesse,
    "removal": _cmd_removal,
}


# ---------------------------------------------------------------------------
# argument parsing and replay
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="glowkit",
        description="Microwave glow-discharge ignition toolkit",
    )
    parser.add_argument("--replay", metavar="ARTIFACT", help="re-run from a previous artifact's embedded config")
    parser.add_argument("--output", help="artifact path override (with --replay)")
    subparsers = parser.add_subparsers(dest="subcommand")
    for name, table in OPTION_TABLES.items():
        sub = subparsers.add_parser(name, help=f"{name} subcommand")
        sub.add_argument("--config", help="INI config file with a [%s] section" % name)
        for key, (_, _, help_text) in table.items():
            sub.add_argument("--" + key.replace("_", "-"), dest=key, default=None, help=help_text)
    return parser


def extract_embedded_config(path: str | Path) -> dict[str, Any]:
    """Read the fully resolved config a previous run embedded in its artifact."""
    text = Path(path).read_text()
    if text.startswith("# "):
        return json.loads(text.splitlines()[0][2:])
    document = json.loads(text)
    try:
        return document["config"]
    except (TypeError, KeyError):
        raise ConfigError("replay", f"no embedded config found in {path!r}") from None


def run(argv: list[str]) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.replay:
        embedded = extract_embedded_config(args.replay)
        subcommand = embedded.get("subcommand")
        if subcommand not in _HANDLERS:
            raise ConfigError("replay", f"embedded config has no valid subcommand: {subcommand!r}")
        overrides: dict[str, Any] = {}
        if args.output:
            overrides["output"] = args.output
        cfg = resolve_config(subcommand, embedded, overrides)
        return _HANDLERS[subcommand](cfg)
    if not args.subcommand:
        parser.print_usage(sys.stderr)
        return 2
    file_layer = (
        _load_config_file(args.config, args.subcommand) if getattr(args, "config", None) else {}
    )
    flag_layer = {
        key: value
        for key, value in vars(args).items()
        if key in OPTION_TABLES[args.subcommand] and value is not None
    }
    cfg = resolve_config(args.subcommand, file_layer, flag_layer)
    return _HANDLERS[args.subcommand](cfg)


def main(argv: list[str] | None = None) -> int:
    try:
        return run(sys.argv[1:] if argv is None else argv)
    except ConfigError as exc:
        print(json.dumps({"error": {"field": exc.field, "message": str(exc)}}), file=sys.stderr)
        return 2
    except (ValueError, RuntimeError) as exc:
        print(json.dumps({"error": {"message": str(exc)}}), file=sys.stderr)
        return 2
    except OSError as exc:
        print(
            json.dumps({"error": {"path": getattr(exc, "filename", None), "message": str(exc)}}),
            file=sys.stderr,
        )
        return 1


if __name__ == "__main__":
    sys.exit(main())
