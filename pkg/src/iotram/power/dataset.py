"""Calibration grid of per-rail power measurements.

The builtin grid holds the published power tables for the IoT-RAM design on
the 40nm FPGA: one six-field cell per (LVCMOS standard, WLAN channel) pair,
stored at milliwatt precision exactly as printed. Printed totals round each
rail independently, so a cell's rails may sum up to 5 mW away from its total;
`validate_dataset` checks that tolerance rather than the constructor, so that
broken user-supplied grids can still be loaded and diagnosed.
"""

from __future__ import annotations

import dataclasses
import enum

from .standards import CHANNELS, POWER_RAILS, STANDARDS, IoStandard, Rail, WlanChannel

#: Printed totals round per-rail; a stored total may differ from the rail sum
#: by up to this many watts.
ROW_SUM_TOLERANCE_W = 0.005


class MissingCell(KeyError):
    """A (standard, channel) pair absent from a user-supplied grid."""


@dataclasses.dataclass(frozen=True)
class PowerBreakdown:
    """The five power rails plus the reported total, in watts."""

    clock_w: float
    signal_w: float
    bram_w: float
    io_w: float
    leakage_w: float
    total_w: float

    def __post_init__(self):
        for field in dataclasses.fields(self):
            value = getattr(self, field.name)
            if value < 0:
                raise ValueError(f"{field.name} must be >= 0, got {value}")

    def rail(self, rail: Rail) -> float:
        return getattr(self, rail.field)

    @property
    def rail_sum_w(self) -> float:
        return self.clock_w + self.signal_w + self.bram_w + self.io_w + self.leakage_w

    @property
    def row_sum_error_w(self) -> float:
        """Absolute gap between the stored total and the sum of the rails."""
        return abs(self.total_w - self.rail_sum_w)


class Severity(enum.Enum):
    INFO = "info"
    WARNING = "warning"
    INCONSISTENCY = "inconsistency"


class DiagnosticCode(enum.Enum):
    """Closed set of findings a grid check can raise."""

    ROW_SUM = "ROW_SUM"
    MONOTONIC_FREQ = "MONOTONIC_FREQ"
    MONOTONIC_VOLT = "MONOTONIC_VOLT"
    TABLE7_MISMATCH = "TABLE7_MISMATCH"
    CLAIM_MISMATCH = "CLAIM_MISMATCH"


@dataclasses.dataclass(frozen=True)
class Diagnostic:
    severity: Severity
    code: DiagnosticCode
    message: str
    location: str

    def render(self) -> str:
        return f"{self.severity.value.upper():<13} {self.code.value:<16} {self.location}: {self.message}"


@dataclasses.dataclass(frozen=True)
class CalibrationDataset:
    """Grid of breakdown cells keyed by (standard, channel).

    The builtin grid is complete (all 20 pairs); user grids loaded from file
    may be partial, in which case `lookup` raises MissingCell.
    """

    cells: dict[tuple[IoStandard, WlanChannel], PowerBreakdown]
    provenance: str = "user"

    @property
    def complete(self) -> bool:
        return all((s, c) in self.cells for s in STANDARDS for c in CHANNELS)

    def channels(self) -> list[WlanChannel]:
        present = {c for _, c in self.cells}
        return [c for c in CHANNELS if c in present]

    def standards(self) -> list[IoStandard]:
        present = {s for s, _ in self.cells}
        return [s for s in STANDARDS if s in present]

    def lookup(self, std: IoStandard, ch: WlanChannel) -> PowerBreakdown:
        try:
            return self.cells[(std, ch)]
        except KeyError:
            raise MissingCell(f"no cell for ({std.name}, {ch.carrier_ghz} GHz)") from None


# Per-channel blocks mirroring the published tables: each row is one standard's
# (clock, signal, bram, io, leakage, total) in watts, exactly as printed.
_GRID: dict[float, dict[str, tuple[float, float, float, float, float, float]]] = {
    0.9: {
        "LVCMOS12": (0.061, 0.033, 1.148, 0.060, 1.321, 2.624),
        "LVCMOS15": (0.061, 0.033, 1.148, 0.086, 1.322, 2.651),
        "LVCMOS18": (0.061, 0.033, 1.148, 0.109, 1.323, 2.675),
        "LVCMOS25": (0.061, 0.033, 1.148, 0.171, 1.325, 2.739),
    },
    2.4: {
        "LVCMOS12": (0.161, 0.091, 3.062, 0.160, 1.374, 4.849),
        "LVCMOS15": (0.161, 0.091, 3.062, 0.229, 1.376, 4.920),
        "LVCMOS18": (0.161, 0.091, 3.062, 0.292, 1.378, 4.985),
        "LVCMOS25": (0.161, 0.091, 3.062, 0.457, 1.383, 5.155),
    },
    3.6: {
        "LVCMOS12": (0.246, 0.138, 4.593, 0.240, 1.419, 6.637),
        "LVCMOS15": (0.246, 0.138, 4.593, 0.343, 1.422, 6.744),
        "LVCMOS18": (0.246, 0.138, 4.593, 0.437, 1.425, 6.841),
        "LVCMOS25": (0.246, 0.138, 4.593, 0.686, 1.433, 7.096),
    },
    5.0: {
        "LVCMOS12": (0.341, 0.192, 6.380, 0.333, 1.476, 8.724),
        "LVCMOS15": (0.341, 0.192, 6.380, 0.477, 1.480, 8.872),
        "LVCMOS18": (0.341, 0.192, 6.380, 0.608, 1.485, 9.007),
        "LVCMOS25": (0.341, 0.192, 6.380, 0.952, 1.496, 9.363),
    },
    5.9: {
        "LVCMOS12": (0.403, 0.226, 7.528, 0.393, 1.515, 10.067),
        "LVCMOS15": (0.403, 0.226, 7.528, 0.563, 1.520, 10.242),
        "LVCMOS18": (0.403, 0.226, 7.528, 0.717, 1.525, 10.402),
        "LVCMOS25": (0.403, 0.226, 7.528, 1.124, 1.539, 10.822),
    },
}

BUILTIN_PROVENANCE = "builtin: 40nm FPGA IoT-RAM power tables, LVCMOS12-25 x 0.9-5.9 GHz"


def builtin_dataset() -> CalibrationDataset:
    """The embedded 20-cell calibration grid, fresh on every call."""
    cells = {}
    for ghz, rows in _GRID.items():
        ch = WlanChannel.from_ghz(ghz)
        for std_name, row in rows.items():
            cells[(IoStandard[std_name], ch)] = PowerBreakdown(*row)
    return CalibrationDataset(cells=cells, provenance=BUILTIN_PROVENANCE)


def validate_dataset(ds: CalibrationDataset) -> list[Diagnostic]:
    """Check grid-intrinsic invariants: row sums and both monotonicity axes.

    Frequency monotonicity expects every rail of a standard to strictly
    increase with the carrier; voltage monotonicity expects io and total to
    strictly increase with supply voltage at a fixed channel (clock, signal
    and BRAM are bank-independent, so only those two rails are checked).
    """
    out: list[Diagnostic] = []

    for std in ds.standards():
        for ch in ds.channels():
            cell = ds.cells.get((std, ch))
            if cell is None:
                continue
            if cell.row_sum_error_w > ROW_SUM_TOLERANCE_W:
                out.append(
                    Diagnostic(
                        Severity.INCONSISTENCY,
                        DiagnosticCode.ROW_SUM,
                        f"rails sum to {cell.rail_sum_w:.3f} W but total is "
                        f"{cell.total_w:.3f} W (tolerance {ROW_SUM_TOLERANCE_W} W)",
                        f"({std.name}, {ch.carrier_ghz} GHz)",
                    )
                )

    rails = POWER_RAILS + (Rail.TOTAL,)
    for std in ds.standards():
        series = [(ch, ds.cells[(std, ch)]) for ch in ds.channels() if (std, ch) in ds.cells]
        for rail in rails:
            for (ch_a, cell_a), (ch_b, cell_b) in zip(series, series[1:]):
                if cell_b.rail(rail) <= cell_a.rail(rail):
                    out.append(
                        Diagnostic(
                            Severity.INCONSISTENCY,
                            DiagnosticCode.MONOTONIC_FREQ,
                            f"{rail.name.lower()} does not increase with frequency: "
                            f"{cell_a.rail(rail):.3f} W at {ch_a.carrier_ghz} GHz vs "
                            f"{cell_b.rail(rail):.3f} W at {ch_b.carrier_ghz} GHz",
                            f"({std.name}, {rail.name.lower()})",
                        )
                    )

    for ch in ds.channels():
        column = [(std, ds.cells[(std, ch)]) for std in ds.standards() if (std, ch) in ds.cells]
        for rail in (Rail.IO, Rail.TOTAL):
            for (std_a, cell_a), (std_b, cell_b) in zip(column, column[1:]):
                if cell_b.rail(rail) <= cell_a.rail(rail):
                    out.append(
                        Diagnostic(
                            Severity.INCONSISTENCY,
                            DiagnosticCode.MONOTONIC_VOLT,
                            f"{rail.name.lower()} does not increase with supply voltage: "
                            f"{cell_a.rail(rail):.3f} W for {std_a.name} vs "
                            f"{cell_b.rail(rail):.3f} W for {std_b.name}",
                            f"({ch.carrier_ghz} GHz, {rail.name.lower()})",
                        )
                    )

    return out


CALIBRATION_HEADER = "standard,channel_ghz,clock_w,signal_w,bram_w,io_w,leakage_w,total_w"


def write_calibration(ds: CalibrationDataset) -> str:
    """Render a grid in the flat calibration text format (header + one line per cell)."""
    lines = [CALIBRATION_HEADER]
    for std in ds.standards():
        for ch in ds.channels():
            cell = ds.cells.get((std, ch))
            if cell is None:
                continue
            lines.append(
                f"{std.name},{ch.carrier_ghz},{cell.clock_w:.3f},{cell.signal_w:.3f},"
                f"{cell.bram_w:.3f},{cell.io_w:.3f},{cell.leakage_w:.3f},{cell.total_w:.3f}"
            )
    return "\n".join(lines) + "\n"


def read_calibration(text: str, provenance: str = "user") -> CalibrationDataset:
    """Parse the flat calibration format. Raises ValueError on malformed content."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty calibration file")
    if lines[0].replace(" ", "") != CALIBRATION_HEADER:
        raise ValueError(f"bad calibration header: {lines[0]!r}")
    cells: dict[tuple[IoStandard, WlanChannel], PowerBreakdown] = {}
    for lineno, line in enumerate(lines[1:], start=2):
        parts = [p.strip() for p in line.split(",")]
        if len(parts) != 8:
            raise ValueError(f"line {lineno}: expected 8 fields, got {len(parts)}")
        try:
            std = IoStandard.parse(parts[0])
            ch = WlanChannel.from_ghz(float(parts[1]))
            cell = PowerBreakdown(*(float(p) for p in parts[2:]))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
        key = (std, ch)
        if key in cells:
            raise ValueError(f"line {lineno}: duplicate cell ({std.name}, {ch.carrier_ghz})")
        cells[key] = cell
    return CalibrationDataset(cells=cells, provenance=provenance)


def load_calibration_file(path: str) -> CalibrationDataset:
    with open(path, "r", encoding="utf-8") as fh:
        return read_calibration(fh.read(), provenance=f"file: {path}")
