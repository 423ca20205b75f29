"""Reconciliation of configured port widths against the published RTL summary.

The published synthesis summary for the design reports 83 IO buffers (51
input, 32 output) and 1 clock buffer. Input pins computed here cover both
address ports, the data-in port, and the read/write enables; the clock pin is
counted under clock buffers, and the 128-bit gate key is device configuration
carried out-of-band rather than 128 physical pins (the published count could
not otherwise be approached). The summary's "16 flip flop/latches" line is
irreconcilable with a 32-bit registered output; it is recorded here rather
than modeled structurally, and no expected flip-flop count appears in the
report.
"""

from __future__ import annotations

import dataclasses

from .core import RamConfig

EXPECTED_INPUT_BUFFERS = 51
EXPECTED_OUTPUT_BUFFERS = 32
EXPECTED_CLOCK_BUFFERS = 1


@dataclasses.dataclass(frozen=True)
class RtlStatsReport:
    expected_input_buffers: int
    expected_output_buffers: int
    expected_clock_buffers: int
    computed_input_pins: int
    computed_output_pins: int
    mismatch_notes: list[str]

    def render(self) -> str:
        lines = [
            f"input pins:  {self.computed_input_pins} computed, "
            f"{self.expected_input_buffers} published",
            f"output pins: {self.computed_output_pins} computed, "
            f"{self.expected_output_buffers} published",
            f"clock buffers: 1 computed, {self.expected_clock_buffers} published",
        ]
        lines.extend(f"note: {note}" for note in self.mismatch_notes)
        return "\n".join(lines)


def rtl_stats(cfg: RamConfig) -> RtlStatsReport:
    """Compare pin counts implied by a config against the published buffer counts."""
    computed_in = 2 * cfg.addr_bits + cfg.data_bits + 2  # raddr + waddr + din + re + we
    computed_out = cfg.data_bits
    notes = []
    if computed_in != EXPECTED_INPUT_BUFFERS:
        notes.append(
            f"input buffers: computed {computed_in} vs published "
            f"{EXPECTED_INPUT_BUFFERS} (gate key carried out-of-band)"
        )
    if computed_out != EXPECTED_OUTPUT_BUFFERS:
        notes.append(
            f"output buffers: computed {computed_out} vs published {EXPECTED_OUTPUT_BUFFERS}"
        )
    return RtlStatsReport(
        expected_input_buffers=EXPECTED_INPUT_BUFFERS,
        expected_output_buffers=EXPECTED_OUTPUT_BUFFERS,
        expected_clock_buffers=EXPECTED_CLOCK_BUFFERS,
        computed_input_pins=computed_in,
        computed_output_pins=computed_out,
        mismatch_notes=notes,
    )
