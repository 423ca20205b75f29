"""Behavioral model of the IPv6-gated synchronous RAM.

Word-addressable 32-bit memory whose read and write ports only act when the
caller presents the device's configured 128-bit key; a wrong key denies the
access without touching memory. Every submitted operation, accepted or
denied, costs exactly one clock cycle, and the cycle counter feeds energy
accounting. The read port is registered: last_dout holds its previous value
across denied accesses.

An instance is owned by one execution context at a time; callers that share
one across threads must serialize operations themselves.
"""

from __future__ import annotations

import dataclasses
import enum

WORD_BITS = 32
WORD_MASK = (1 << WORD_BITS) - 1
KEY_BITS = 128
KEY_MASK = (1 << KEY_BITS) - 1


class InvalidConfig(ValueError):
    """Rejected RAM geometry (zero depth, inconsistent address width, bad key)."""


def _addr_bits_for(depth_words: int) -> int:
    return max(1, (depth_words - 1).bit_length())


@dataclasses.dataclass(frozen=True)
class RamConfig:
    """Geometry plus the gate key. data_bits is fixed at 32."""

    depth_words: int = 256
    device_ipv6: int = 0
    addr_bits: int | None = None
    data_bits: int = WORD_BITS

    def __post_init__(self):
        if self.depth_words < 1:
            raise InvalidConfig(f"depth_words must be >= 1, got {self.depth_words}")
        if self.data_bits != WORD_BITS:
            raise InvalidConfig(f"data_bits is fixed at {WORD_BITS}, got {self.data_bits}")
        if not 0 <= self.device_ipv6 <= KEY_MASK:
            raise InvalidConfig("device_ipv6 must fit in 128 bits")
        expected = _addr_bits_for(self.depth_words)
        if self.addr_bits is None:
            object.__setattr__(self, "addr_bits", expected)
        elif self.addr_bits != expected:
            raise InvalidConfig(
                f"addr_bits {self.addr_bits} inconsistent with depth {self.depth_words} "
                f"(expected {expected})"
            )


class AccessKind(enum.Enum):
    READ_OK = "ReadOk"
    WRITE_OK = "WriteOk"
    AUTH_FAIL = "AuthFail"
    ADDR_RANGE = "AddrRange"


@dataclasses.dataclass(frozen=True)
class AccessOutcome:
    """Result of one submitted operation; data only accompanies READ_OK."""

    kind: AccessKind
    data: int | None = None

    def render(self) -> str:
        if self.kind is AccessKind.READ_OK:
            return f"ReadOk {self.data:08X}"
        return self.kind.value


class IotRam:
    """One RAM instance: zeroed words, a cycle counter, a registered output."""

    def __init__(self, config: RamConfig):
        self.config = config
        self.words = [0] * config.depth_words
        self.cycle_count = 0
        self.last_dout = 0

    def _gate(self, key: int, addr: int) -> AccessOutcome | None:
        # Both checks consume the cycle; auth is checked before the address.
        self.cycle_count += 1
        if key != self.config.device_ipv6:
            return AccessOutcome(AccessKind.AUTH_FAIL)
        if not 0 <= addr < self.config.depth_words:
            return AccessOutcome(AccessKind.ADDR_RANGE)
        return None

    def write(self, key: int, addr: int, data: int) -> AccessOutcome:
        denied = self._gate(key, addr)
        if denied is not None:
            return denied
        self.words[addr] = data & WORD_MASK
        return AccessOutcome(AccessKind.WRITE_OK)

    def read(self, key: int, addr: int) -> AccessOutcome:
        denied = self._gate(key, addr)
        if denied is not None:
            return denied
        value = self.words[addr]
        self.last_dout = value
        return AccessOutcome(AccessKind.READ_OK, data=value)


def ram_new(config: RamConfig) -> IotRam:
    return IotRam(config)
