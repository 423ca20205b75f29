"""IPv6-gated RAM model, RTL reconciliation, and trace driver."""

from .core import (
    KEY_BITS,
    KEY_MASK,
    WORD_BITS,
    WORD_MASK,
    AccessKind,
    AccessOutcome,
    InvalidConfig,
    IotRam,
    RamConfig,
    ram_new,
)
from .rtl import RtlStatsReport, rtl_stats
from .trace import TraceError, TraceOp, TraceSummary, parse_trace, run_trace

__all__ = [
    "AccessKind",
    "AccessOutcome",
    "InvalidConfig",
    "IotRam",
    "KEY_BITS",
    "KEY_MASK",
    "RamConfig",
    "RtlStatsReport",
    "TraceError",
    "TraceOp",
    "TraceSummary",
    "WORD_BITS",
    "WORD_MASK",
    "parse_trace",
    "ram_new",
    "rtl_stats",
    "run_trace",
]
