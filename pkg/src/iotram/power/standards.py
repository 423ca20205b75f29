"""LVCMOS IO standards and the WLAN channel set the device is clocked at."""

from __future__ import annotations

import enum


class IoStandard(enum.Enum):
    """Low-voltage CMOS IO bank configurations, by supply voltage."""

    LVCMOS12 = 1.2
    LVCMOS15 = 1.5
    LVCMOS18 = 1.8
    LVCMOS25 = 2.5

    @property
    def supply_voltage(self) -> float:
        return self.value

    @classmethod
    def parse(cls, text: str) -> "IoStandard":
        """Resolve a standard from its name, case-insensitively."""
        key = text.strip().upper().replace(" ", "").replace("_", "")
        try:
            return cls[key]
        except KeyError:
            raise ValueError(f"unknown IO standard: {text!r}") from None


class WlanChannel(enum.Enum):
    """802.11 channel variants; the carrier doubles as the modeled clock rate."""

    GHZ_0_9 = ("802.11ah", 0.9, "Unlicensed Bands")
    GHZ_2_4 = ("802.11b/g/n", 2.4, "2412-2484MHz")
    GHZ_3_6 = ("802.11y", 3.6, "3657.5-3692.5MHz")
    GHZ_5_0 = ("802.11a/h/j/n/ac", 5.0, "4915-5825MHz")
    GHZ_5_9 = ("802.11p", 5.9, "5850-5925MHz")

    def __init__(self, ieee_name: str, carrier_ghz: float, band_range: str):
        self.ieee_name = ieee_name
        self.carrier_ghz = carrier_ghz
        self.band_range = band_range

    @classmethod
    def from_ghz(cls, ghz: float) -> "WlanChannel":
        for ch in cls:
            if abs(ch.carrier_ghz - ghz) < 1e-9:
                return ch
        raise ValueError(f"no WLAN channel at {ghz} GHz")

    @classmethod
    def parse(cls, text: str) -> "WlanChannel":
        """Resolve a channel from an IEEE name ("802.11p") or GHz value ("5.9")."""
        key = text.strip()
        for ch in cls:
            if ch.ieee_name.lower() == key.lower():
                return ch
        try:
            ghz = float(key)
        except ValueError:
            raise ValueError(f"unknown WLAN channel: {text!r}") from None
        return cls.from_ghz(ghz)


#: Channels in ascending carrier order; the canonical iteration order everywhere.
CHANNELS: tuple[WlanChannel, ...] = tuple(
    sorted(WlanChannel, key=lambda ch: ch.carrier_ghz)
)

#: Standards in ascending supply-voltage order.
STANDARDS: tuple[IoStandard, ...] = tuple(
    sorted(IoStandard, key=lambda s: s.supply_voltage)
)


class Rail(enum.Enum):
    """One additive component of device power, plus the printed total."""

    CLOCK = "clock_w"
    SIGNAL = "signal_w"
    BRAM = "bram_w"
    IO = "io_w"
    LEAKAGE = "leakage_w"
    TOTAL = "total_w"

    @property
    def field(self) -> str:
        return self.value

    @classmethod
    def parse(cls, text: str) -> "Rail":
        try:
            return cls[text.strip().upper()]
        except KeyError:
            raise ValueError(f"unknown rail: {text!r}") from None


#: The five summing rails, excluding TOTAL.
POWER_RAILS: tuple[Rail, ...] = (
    Rail.CLOCK,
    Rail.SIGNAL,
    Rail.BRAM,
    Rail.IO,
    Rail.LEAKAGE,
)
