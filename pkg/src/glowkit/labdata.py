"""Bench-data analysis: cavity finesse from photodiode traces, surface removal rates.

Finesse is the ratio of resonance peak separation to peak width. Both are
extracted from the same swept trace, so the unknown sweep calibration
(time axis to frequency) cancels: any affine rescale of the time axis and
any positive rescale of the signal leave the result unchanged. Peaks are
fitted with a Lorentzian profile; the width is the fitted FWHM, not a raw
sample crossing.

Removal-rate bookkeeping is plain division, preserved to the sign:
negative rates (redeposited material) are data, not errors.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Optional, Sequence

import numpy as np
from scipy.optimize import curve_fit
from scipy.signal import find_peaks

from .core import convert_pressure


class InsufficientPeaksError(ValueError):
    """Fewer than two resonance peaks above the detection threshold."""


class PeakFitError(RuntimeError):
    """A per-peak Lorentzian fit failed to converge."""

    def __init__(self, peak_index: int, message: str):
        super().__init__(f"peak {peak_index}: {message}")
        self.peak_index = peak_index


def lorentzian_peak(x, amplitude, center, fwhm, offset):
    """Lorentzian profile: amplitude / (1 + (2 (x - center) / fwhm)^2) + offset."""
    u = 2.0 * (x - center) / fwhm
    return amplitude / (1.0 + u * u) + offset


@dataclass(frozen=True)
class PeakConfig:
    """Detection and fit knobs for :func:`extract_finesse`.

    threshold_fraction: detection level as a fraction of (max - baseline)
    above the baseline (median of the trace).
    min_separation_fraction: minimum peak-to-peak distance as a fraction
    of the trace length, guarding against noise doubles.
    fit_window_fwhms: half-width of each per-peak fit window in units of
    the locally estimated FWHM.
    """

    threshold_fraction: float = 0.5
    min_separation_fraction: float = 0.02
    fit_window_fwhms: float = 6.0

    def __post_init__(self) -> None:
        if not 0.0 < self.threshold_fraction < 1.0:
            raise ValueError(f"threshold_fraction must be in (0, 1), got {self.threshold_fraction!r}")
        if not 0.0 < self.min_separation_fraction < 1.0:
            raise ValueError(
                f"min_separation_fraction must be in (0, 1), got {self.min_separation_fraction!r}"
            )
        if not self.fit_window_fwhms > 0.0:
            raise ValueError(f"fit_window_fwhms must be positive, got {self.fit_window_fwhms!r}")


@dataclass(frozen=True)
class CavityTrace:
    """Sampled photodiode signal: times [s] strictly increasing, voltages [V]."""

    times: np.ndarray
    voltages: np.ndarray
    sweep_rate: Optional[float] = None  # frequency per second, metadata only

    def __post_init__(self) -> None:
        times = np.asarray(self.times, dtype=np.float64)
        voltages = np.asarray(self.voltages, dtype=np.float64)
        if times.ndim != 1 or voltages.ndim != 1 or times.size != voltages.size:
            raise ValueError("times and voltages must be 1-D arrays of equal length")
        if times.size < 3:
            raise ValueError(f"a trace needs at least 3 samples, got {times.size}")
        if not np.all(np.diff(times) > 0.0):
            raise ValueError("trace times must be strictly increasing")
        times.flags.writeable = False
        voltages.flags.writeable = False
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "voltages", voltages)

    @classmethod
    def from_csv(cls, path: str | Path, sweep_rate: Optional[float] = None) -> "CavityTrace":
        """Read a two-column (time, voltage) CSV; a non-numeric first row is a header."""
        times: list[float] = []
        volts: list[float] = []
        with open(path, newline="") as handle:
            for index, row in enumerate(csv.reader(handle)):
                if not row or not row[0].strip():
                    continue
                try:
                    t = float(row[0])
                    v = float(row[1])
                except (ValueError, IndexError):
                    if index == 0:
                        continue  # header line
                    raise ValueError(f"malformed trace row: {row!r}") from None
                times.append(t)
                volts.append(v)
        return cls(times=np.array(times), voltages=np.array(volts), sweep_rate=sweep_rate)


@dataclass(frozen=True)
class FinesseResult:
    peak_separation: float   # trace-time units (or frequency if calibrated)
    mean_peak_width: float   # same units
    finesse: float           # peak_separation / mean_peak_width, unit-free
    uncertainty: float
    n_peaks_used: int

    def to_json_dict(self) -> dict:
        return {
            "peak_separation": self.peak_separation,
            "mean_peak_width": self.mean_peak_width,
            "finesse": self.finesse,
            "uncertainty": self.uncertainty,
            "n_peaks_used": self.n_peaks_used,
        }


def _half_max_crossings(t: np.ndarray, v: np.ndarray, peak: int, half: float) -> tuple[float, float]:
    """Interpolated positions where the signal crosses `half` either side of `peak`."""
    i = peak
    while i > 0 and v[i] > half:
        i -= 1
    if v[i] > half:
        left = t[0]
    else:
        frac = (half - v[i]) / (v[i + 1] - v[i])
        left = t[i] + frac * (t[i + 1] - t[i])
    j = peak
    last = len(v) - 1
    while j < last and v[j] > half:
        j += 1
    if v[j] > half:
        right = t[last]
    else:
        frac = (half - v[j - 1]) / (v[j] - v[j - 1])
        right = t[j - 1] + frac * (t[j] - t[j - 1])
    return left, right


def extract_finesse(trace: CavityTrace, config: PeakConfig | None = None) -> FinesseResult:
    """Detect resonance peaks, fit each with a Lorentzian, and form the ratio.

    Peak separation is the mean spacing of adjacent fitted centers; peak
    width is the mean fitted FWHM. The quoted uncertainty combines the
    fit covariances with the peak-to-peak scatter of both quantities.

    Raises InsufficientPeaksError for fewer than two detected peaks and
    PeakFitError (naming the peak) when a fit does not converge.
    """
    cfg = config or PeakConfig()
    t = trace.times
    v = trace.voltages
    baseline = float(np.median(v))
    top = float(v.max())
    if not top > baseline:
        raise InsufficientPeaksError("insufficient peaks: trace has no signal above baseline")
    height = baseline + cfg.threshold_fraction * (top - baseline)
    distance = max(1, int(cfg.min_separation_fraction * t.size))
    peak_indices, _ = find_peaks(v, height=height, distance=distance)
    if len(peak_indices) < 2:
        raise InsufficientPeaksError(
            f"insufficient peaks: found {len(peak_indices)}, need at least 2"
        )

    centers: list[float] = []
    widths: list[float] = []
    center_vars: list[float] = []
    width_vars: list[float] = []
    for order, p in enumerate(peak_indices):
        half = baseline + 0.5 * (v[p] - baseline)
        left, right = _half_max_crossings(t, v, p, half)
        est_fwhm = max(right - left, float(t[min(p + 1, t.size - 1)] - t[max(p - 1, 0)]))
        lo = t[p] - cfg.fit_window_fwhms * est_fwhm
        hi = t[p] + cfg.fit_window_fwhms * est_fwhm
        if order > 0:
            lo = max(lo, 0.5 * (t[p] + t[peak_indices[order - 1]]))
        if order < len(peak_indices) - 1:
            hi = min(hi, 0.5 * (t[p] + t[peak_indices[order + 1]]))
        window = (t >= lo) & (t <= hi)
        if int(window.sum()) < 5:
            raise PeakFitError(order, "fewer than 5 samples in the fit window")
        p0 = (float(v[p]) - baseline, float(t[p]), est_fwhm, baseline)
        try:
            popt, pcov = curve_fit(lorentzian_peak, t[window], v[window], p0=p0, maxfev=10_000)
        except RuntimeError as exc:
            raise PeakFitError(order, str(exc)) from exc
        if not np.all(np.isfinite(popt)):
            raise PeakFitError(order, "fit returned non-finite parameters")
        centers.append(float(popt[1]))
        widths.append(abs(float(popt[2])))
        variances = np.diag(pcov)
        center_vars.append(float(variances[1]) if np.isfinite(variances[1]) else 0.0)
        width_vars.append(float(variances[2]) if np.isfinite(variances[2]) else 0.0)

    by_center = np.argsort(centers)
    centers_arr = np.asarray(centers)[by_center]
    widths_arr = np.asarray(widths)[by_center]
    spacings = np.diff(centers_arr)
    separation = float(spacings.mean())
    width = float(widths_arr.mean())
    if not separation > 0.0 or not width > 0.0:
        raise PeakFitError(0, "degenerate fit: non-positive separation or width")
    finesse = separation / width

    n = len(centers_arr)
    sep_var_scatter = float(spacings.var(ddof=1) / spacings.size) if spacings.size > 1 else 0.0
    sep_var_fit = 2.0 * float(np.mean(center_vars)) / spacings.size
    width_var_scatter = float(widths_arr.var(ddof=1) / n) if n > 1 else 0.0
    width_var_fit = float(np.mean(width_vars)) / n
    rel_sq = (sep_var_scatter + sep_var_fit) / separation**2 + (
        width_var_scatter + width_var_fit
    ) / width**2
    return FinesseResult(
        peak_separation=separation,
        mean_peak_width=width,
        finesse=finesse,
        uncertainty=finesse * math.sqrt(rel_sq),
        n_peaks_used=n,
    )


def synthetic_cavity_trace(
    finesse: float,
    n_peaks: int = 2,
    peak_spacing: float = 1.0,
    amplitude: float = 1.0,
    baseline: float = 0.0,
    noise_fraction: float = 0.0,
    seed: int = 0,
    samples_per_fwhm: float = 20.0,
    n_samples: Optional[int] = None,
) -> CavityTrace:
    """Generate an ideal swept-cavity trace: equispaced Lorentzians plus white noise.

    Sampling density defaults to samples_per_fwhm points across each peak
    width, which keeps narrow high-finesse peaks resolvable.
    """
    if not finesse > 0.0 or not peak_spacing > 0.0 or n_peaks < 2:
        raise ValueError("need finesse > 0, peak_spacing > 0 and n_peaks >= 2")
    fwhm = peak_spacing / finesse
    span_lo = -0.5 * peak_spacing
    span_hi = (n_peaks - 0.5) * peak_spacing
    if n_samples is None:
        n_samples = int(math.ceil((span_hi - span_lo) / fwhm * samples_per_fwhm))
        n_samples = min(max(n_samples, 1001), 5_000_000)
    t = np.linspace(span_lo, span_hi, n_samples)
    v = np.full_like(t, float(baseline))
    for k in range(n_peaks):
        v += lorentzian_peak(t, amplitude, k * peak_spacing, fwhm, 0.0)
    if noise_fraction > 0.0:
        rng = np.random.default_rng(seed)
        v = v + rng.normal(0.0, noise_fraction * amplitude, size=t.size)
    return CavityTrace(times=t, voltages=v)


@dataclass(frozen=True)
class RemovalRecord:
    """One plate or washer exposure. Missing measurements stay None, never guessed."""

    label: str
    thickness_removed_nm: Optional[float] = None
    exposure_time_min: Optional[float] = None
    pressure_pa: Optional[float] = None
    argon_flow_scfh: Optional[float] = None  # flow meters read SCFH; metadata only
    air_flow_scfh: Optional[float] = None
    removal_rate_nm_per_min: Optional[float] = None

    @property
    def is_complete(self) -> bool:
        return self.thickness_removed_nm is not None and self.exposure_time_min is not None

    def to_json_dict(self) -> dict:
        return {
            "label": self.label,
            "thickness_removed_nm": self.thickness_removed_nm,
            "exposure_time_min": self.exposure_time_min,
            "pressure_pa": self.pressure_pa,
            "argon_flow_scfh": self.argon_flow_scfh,
            "air_flow_scfh": self.air_flow_scfh,
            "removal_rate_nm_per_min": self.removal_rate_nm_per_min,
        }


def compute_removal_rates(records: Sequence[RemovalRecord]) -> list[RemovalRecord]:
    """Fill removal_rate = thickness / time for complete records; sign preserved.

    Incomplete records pass through untouched (rate left None). A present
    but non-positive exposure time is rejected.
    """
    out: list[RemovalRecord] = []
    for record in records:
        if record.exposure_time_min is not None and not record.exposure_time_min > 0.0:
            raise ValueError(
                f"record {record.label!r}: exposure time must be positive, "
                f"got {record.exposure_time_min!r}"
            )
        if not record.is_complete:
            out.append(record)
            continue
        rate = record.thickness_removed_nm / record.exposure_time_min
        out.append(replace(record, removal_rate_nm_per_min=rate))
    return out


REMOVAL_CSV_COLUMNS = (
    "label",
    "thickness_removed_nm",
    "exposure_time_min",
    "pressure_mbar",
    "argon_flow_scfh",
    "air_flow_scfh",
    "removal_rate_nm_per_min",
)


def _cell_to_float(cell: str) -> Optional[float]:
    cell = cell.strip()
    return float(cell) if cell else None


def removal_records_from_csv(path: str | Path) -> list[RemovalRecord]:
    """Read exposure records; ragged or blank cells become None (marked, not filled)."""
    records: list[RemovalRecord] = []
    with open(path, newline="") as handle:
        reader = csv.reader(handle)
        for row in reader:
            if not row or all(not cell.strip() for cell in row):
                continue
            if row[0].strip() == "label":
                continue
            padded = list(row) + [""] * (len(REMOVAL_CSV_COLUMNS) - len(row))
            pressure_mbar = _cell_to_float(padded[3])
            records.append(
                RemovalRecord(
                    label=padded[0].strip(),
                    thickness_removed_nm=_cell_to_float(padded[1]),
                    exposure_time_min=_cell_to_float(padded[2]),
                    pressure_pa=(
                        convert_pressure(pressure_mbar, "mbar") if pressure_mbar is not None else None
                    ),
                    argon_flow_scfh=_cell_to_float(padded[4]),
                    air_flow_scfh=_cell_to_float(padded[5]),
                    removal_rate_nm_per_min=_cell_to_float(padded[6]),
                )
            )
    return records


def write_removal_csv(records: Sequence[RemovalRecord], stream) -> None:
    """Write records back out; None cells stay empty, floats use repr."""
    stream.write(",".join(REMOVAL_CSV_COLUMNS) + "\n")
    for record in records:
        pressure_mbar = record.pressure_pa / 100.0 if record.pressure_pa is not None else None
        cells = [
            record.label,
            *(
                "" if value is None else repr(value)
                for value in (
                    record.thickness_removed_nm,
                    record.exposure_time_min,
                    pressure_mbar,
                    record.argon_flow_scfh,
                    record.air_flow_scfh,
                    record.removal_rate_nm_per_min,
                )
            ),
        ]
        stream.write(",".join(cells) + "\n")


def washer_rate_estimate(
    layer_thickness_nm: float, clean_time_bounds: tuple[float, float]
) -> tuple[float, float]:
    """Removal-rate interval for a layer that finished cleaning inside a time window.

    Completion observed between t_low and t_high (inspection interval)
    brackets the rate in [thickness / t_high, thickness / t_low].
    """
    if not layer_thickness_nm > 0.0:
        raise ValueError(f"layer thickness must be positive, got {layer_thickness_nm!r}")
    t_low, t_high = clean_time_bounds
    if not 0.0 < t_low <= t_high:
        raise ValueError(f"need 0 < t_low <= t_high, got {clean_time_bounds!r}")
    return layer_thickness_nm / t_high, layer_thickness_nm / t_low
