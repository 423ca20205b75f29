"""Per-rail frequency-scaling laws fitted to a calibration grid.

Dynamic rails (clock, BRAM, IO) scale essentially proportionally to clock
frequency, so they get through-origin least-squares lines; signal and leakage
carry a static component and get affine lines. Clock, BRAM and signal values
are identical across IO standards in the calibration grid, so those rails
share one fit; IO and leakage differ per standard and are fitted per standard.

All fits are exact ordinary-least-squares minimizers computed from the normal
equations. Prediction clamps each rail at zero (a fitted affine intercept can
be slightly negative) and reports the total as the sum of the clamped rails.
"""

from __future__ import annotations

import dataclasses
import enum

from .dataset import CalibrationDataset, MissingCell, PowerBreakdown
from .standards import IoStandard, Rail, WlanChannel


class DegenerateFit(ValueError):
    """Raised when the grid does not span enough distinct frequencies to fit."""


class NonPositiveFrequency(ValueError):
    """Raised for predictions or energy queries at f <= 0."""


class FitKind(enum.Enum):
    THROUGH_ORIGIN = "through-origin"
    AFFINE = "affine"


@dataclasses.dataclass(frozen=True)
class RailFit:
    slope_w_per_ghz: float
    intercept_w: float
    fit_kind: FitKind

    def at(self, f_ghz: float) -> float:
        return self.slope_w_per_ghz * f_ghz + self.intercept_w


@dataclasses.dataclass(frozen=True)
class ModelCoefficients:
    clock: RailFit
    signal: RailFit
    bram: RailFit
    io: dict[IoStandard, RailFit]
    leakage: dict[IoStandard, RailFit]

    def rail_fit(self, rail: Rail, std: IoStandard) -> RailFit:
        if rail is Rail.CLOCK:
            return self.clock
        if rail is Rail.SIGNAL:
            return self.signal
        if rail is Rail.BRAM:
            return self.bram
        if rail is Rail.IO:
            return self.io[std]
        if rail is Rail.LEAKAGE:
            return self.leakage[std]
        raise ValueError(f"no fit for rail {rail}")


def _through_origin(points: list[tuple[float, float]]) -> RailFit:
    # OLS through (0, 0): slope = sum(f*y) / sum(f^2)
    sfy = sum(f * y for f, y in points)
    sf2 = sum(f * f for f, _ in points)
    return RailFit(sfy / sf2, 0.0, FitKind.THROUGH_ORIGIN)


def _affine(points: list[tuple[float, float]]) -> RailFit:
    # Standard normal equations for y = slope*f + intercept.
    n = len(points)
    sf = sum(f for f, _ in points)
    sy = sum(y for _, y in points)
    sfy = sum(f * y for f, y in points)
    sf2 = sum(f * f for f, _ in points)
    denom = n * sf2 - sf * sf
    slope = (n * sfy - sf * sy) / denom
    intercept = (sy - slope * sf) / n
    return RailFit(slope, intercept, FitKind.AFFINE)


def _series(ds: CalibrationDataset, rail: Rail, std: IoStandard) -> list[tuple[float, float]]:
    points = [
        (ch.carrier_ghz, ds.cells[(std, ch)].rail(rail))
        for ch in ds.channels()
        if (std, ch) in ds.cells
    ]
    if not points:
        raise MissingCell(f"no cells for {std.name}; cannot fit its {rail.name.lower()} rail")
    return points


def fit(ds: CalibrationDataset) -> ModelCoefficients:
    """Fit all rail scaling laws to a grid.

    Shared rails pool every standard's points (their values coincide anyway);
    IO and leakage are fitted per standard. Raises DegenerateFit when the grid
    holds fewer than two distinct frequencies.
    """
    distinct = {ch.carrier_ghz for _, ch in ds.cells}
    if len(distinct) < 2:
        raise DegenerateFit(
            f"need at least 2 distinct frequencies, grid has {sorted(distinct)}"
        )

    shared: dict[Rail, list[tuple[float, float]]] = {
        Rail.CLOCK: [],
        Rail.SIGNAL: [],
        Rail.BRAM: [],
    }
    for std in ds.standards():
        for rail in shared:
            shared[rail].extend(_series(ds, rail, std))

    return ModelCoefficients(
        clock=_through_origin(shared[Rail.CLOCK]),
        signal=_affine(shared[Rail.SIGNAL]),
        bram=_through_origin(shared[Rail.BRAM]),
        io={std: _through_origin(_series(ds, Rail.IO, std)) for std in ds.standards()},
        leakage={std: _affine(_series(ds, Rail.LEAKAGE, std)) for std in ds.standards()},
    )


def predict(coeffs: ModelCoefficients, std: IoStandard, f_ghz: float) -> PowerBreakdown:
    """Evaluate the fitted laws at an arbitrary positive frequency."""
    if f_ghz <= 0:
        raise NonPositiveFrequency(f"frequency must be > 0 GHz, got {f_ghz}")
    clock = max(0.0, coeffs.clock.at(f_ghz))
    signal = max(0.0, coeffs.signal.at(f_ghz))
    bram = max(0.0, coeffs.bram.at(f_ghz))
    io = max(0.0, coeffs.io[std].at(f_ghz))
    leakage = max(0.0, coeffs.leakage[std].at(f_ghz))
    return PowerBreakdown(
        clock_w=clock,
        signal_w=signal,
        bram_w=bram,
        io_w=io,
        leakage_w=leakage,
        total_w=clock + signal + bram + io + leakage,
    )


def max_relative_residuals(
    ds: CalibrationDataset, coeffs: ModelCoefficients
) -> dict[str, float]:
    """Worst |fit - value| / value per fitted series, keyed like "io[LVCMOS12]"."""
    out: dict[str, float] = {}

    def worst(fit_: RailFit, points: list[tuple[float, float]]) -> float:
        return max(abs(fit_.at(f) - y) / y for f, y in points if y > 0)

    pooled = lambda rail: [p for std in ds.standards() for p in _series(ds, rail, std)]
    out["clock"] = worst(coeffs.clock, pooled(Rail.CLOCK))
    out["signal"] = worst(coeffs.signal, pooled(Rail.SIGNAL))
    out["bram"] = worst(coeffs.bram, pooled(Rail.BRAM))
    for std in ds.standards():
        out[f"io[{std.name}]"] = worst(coeffs.io[std], _series(ds, Rail.IO, std))
        out[f"leakage[{std.name}]"] = worst(coeffs.leakage[std], _series(ds, Rail.LEAKAGE, std))
    return out


def io_slope_voltage_scaling(coeffs: ModelCoefficients) -> dict[IoStandard, float]:
    """Fitted IO slope divided by supply voltage squared, per standard.

    A pure CV^2f law would make these equal; on the builtin grid they spread
    by roughly a third, which is why IO slopes are empirical per standard.
    Informational only.
    """
    return {
        std: coeffs.io[std].slope_w_per_ghz / std.supply_voltage**2
        for std in coeffs.io
    }


def power_at(
    ds: CalibrationDataset,
    std: IoStandard,
    f_ghz: float,
    coeffs: ModelCoefficients | None = None,
) -> PowerBreakdown:
    """Breakdown at a frequency: grid cell when on-grid, fitted prediction otherwise."""
    if f_ghz <= 0:
        raise NonPositiveFrequency(f"frequency must be > 0 GHz, got {f_ghz}")
    try:
        ch = WlanChannel.from_ghz(f_ghz)
    except ValueError:
        ch = None
    if ch is not None and (std, ch) in ds.cells:
        return ds.cells[(std, ch)]
    return predict(coeffs if coeffs is not None else fit(ds), std, f_ghz)


def energy_per_cycle(pb: PowerBreakdown, f_ghz: float) -> float:
    """Joules drawn per clock cycle: total watts over cycles per second."""
    if f_ghz <= 0:
        raise NonPositiveFrequency(f"frequency must be > 0 GHz, got {f_ghz}")
    return pb.total_w / (f_ghz * 1e9)
