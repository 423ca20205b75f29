"""Datagram service exposing one RAM instance, with energy accounting.

Each received datagram yields exactly one response; malformed input and
unknown opcodes become status codes, never crashes. READ/WRITE delegate to
the RAM with the frame's key as the gate key and cost one RAM cycle whatever
the outcome; STATUS reports the cycle counter without consuming a cycle. The
session's energy ledger prices accumulated cycles at the configured
(IO standard, WLAN channel) operating point.
"""

from __future__ import annotations

import dataclasses
import socket
import threading

from ..power.dataset import CalibrationDataset, builtin_dataset
from ..power.model import energy_per_cycle, power_at
from ..power.standards import IoStandard, WlanChannel
from ..ram.core import AccessKind, IotRam
from .frames import (
    MalformedFrame,
    Opcode,
    REQUEST_LEN,
    Status,
    decode_request,
    encode_response,
    salvage_seq,
)

DEFAULT_BIND = "127.0.0.1:18770"
BIND_ENV_VAR = "IOTRAM_BIND"


class BindFailure(OSError):
    """The service endpoint could not be bound."""


@dataclasses.dataclass(frozen=True)
class SessionConfig:
    io_standard: IoStandard
    channel: WlanChannel
    bind_endpoint: str = DEFAULT_BIND


class EnergyLedger:
    """Counts handled frames and prices RAM cycles in joules."""

    def __init__(self, per_cycle_j: float):
        self.per_cycle_j = per_cycle_j
        self.ops_total = 0
        self.ops_by_status: dict[Status, int] = {}
        self.cycles = 0

    @property
    def energy_j(self) -> float:
        return self.cycles * self.per_cycle_j

    def record(self, status: Status, cycle_delta: int) -> None:
        self.ops_total += 1
        self.ops_by_status[status] = self.ops_by_status.get(status, 0) + 1
        self.cycles += cycle_delta

    def render(self) -> str:
        by_status = ", ".join(
            f"{status.name}={count}" for status, count in sorted(self.ops_by_status.items())
        )
        return (
            f"ops_total={self.ops_total} [{by_status}] "
            f"cycles={self.cycles} energy={self.energy_j:.6e} J"
        )


def make_ledger(cfg: SessionConfig, ds: CalibrationDataset | None = None) -> EnergyLedger:
    """Ledger priced at the session's operating point (grid cell of the channel)."""
    ds = ds if ds is not None else builtin_dataset()
    breakdown = power_at(ds, cfg.io_standard, cfg.channel.carrier_ghz)
    return EnergyLedger(energy_per_cycle(breakdown, cfg.channel.carrier_ghz))


def handle_datagram(datagram: bytes, ram: IotRam, ledger: EnergyLedger) -> bytes:
    """Process one request datagram and build its response."""
    cycles_before = ram.cycle_count
    try:
        frame = decode_request(datagram)
    except MalformedFrame:
        ledger.record(Status.MALFORMED, 0)
        return encode_response(Status.MALFORMED, 0, salvage_seq(datagram))

    if frame.opcode == Opcode.READ:
        outcome = ram.read(frame.target_key, frame.addr)
        status, data = _map_outcome(outcome)
    elif frame.opcode == Opcode.WRITE:
        outcome = ram.write(frame.target_key, frame.addr, frame.data)
        status, data = _map_outcome(outcome)
    elif frame.opcode == Opcode.STATUS:
        status, data = Status.OK, ram.cycle_count & 0xFFFFFFFF
    else:
        status, data = Status.BAD_OPCODE, 0

    ledger.record(status, ram.cycle_count - cycles_before)
    return encode_response(status, data, frame.seq)


def _map_outcome(outcome) -> tuple[Status, int]:
    if outcome.kind is AccessKind.READ_OK:
        return Status.OK, outcome.data
    if outcome.kind is AccessKind.WRITE_OK:
        return Status.OK, 0
    if outcome.kind is AccessKind.AUTH_FAIL:
        return Status.AUTH_FAIL, 0
    return Status.ADDR_RANGE, 0


def parse_endpoint(endpoint: str) -> tuple[str, int]:
    """Split "[host]:port"; bracketed literals for IPv6, empty host binds all."""
    text = endpoint.strip()
    if text.startswith("["):
        host, sep, port = text[1:].partition("]:")
        if not sep:
            raise ValueError(f"bad endpoint {endpoint!r} (expected [host]:port)")
    else:
        host, sep, port = text.rpartition(":")
        if not sep:
            raise ValueError(f"bad endpoint {endpoint!r} (expected host:port)")
    try:
        port_num = int(port)
    except ValueError:
        raise ValueError(f"bad port in endpoint {endpoint!r}") from None
    if not 0 <= port_num <= 65535:
        raise ValueError(f"port out of range in endpoint {endpoint!r}")
    return host or "0.0.0.0", port_num


class RamService:
    """UDP request/response loop over one RAM and one ledger.

    Requests are processed whole, in arrival order, under a single lock, so
    observable behavior always matches a sequential interleaving.
    """

    def __init__(self, ram: IotRam, ledger: EnergyLedger, bind_endpoint: str = DEFAULT_BIND):
        self.ram = ram
        self.ledger = ledger
        self._lock = threading.Lock()
        self._stop = threading.Event()
        host, port = parse_endpoint(bind_endpoint)
        family = socket.AF_INET6 if ":" in host else socket.AF_INET
        self._sock = socket.socket(family, socket.SOCK_DGRAM)
        try:
            self._sock.bind((host, port))
        except OSError as exc:
            self._sock.close()
            raise BindFailure(f"cannot bind {bind_endpoint}: {exc}") from exc
        self._sock.settimeout(0.1)

    @property
    def address(self) -> tuple[str, int]:
        addr = self._sock.getsockname()
        return addr[0], addr[1]

    def handle(self, datagram: bytes) -> bytes:
        with self._lock:
            return handle_datagram(datagram, self.ram, self.ledger)

    def serve_forever(self) -> None:
        """Answer datagrams until shutdown() is called. Per-frame errors never
        terminate the loop."""
        while not self._stop.is_set():
            try:
                datagram, peer = self._sock.recvfrom(65536)
            except socket.timeout:
                continue
            except OSError:
                break
            try:
                self._sock.sendto(self.handle(datagram), peer)
            except OSError:
                continue

    def shutdown(self) -> None:
        self._stop.set()

    def close(self) -> None:
        self.shutdown()
        self._sock.close()

    def __enter__(self) -> "RamService":
        return self

    def __exit__(self, *exc) -> None:
        self.close()


def serve(cfg: SessionConfig, ram: IotRam, ds: CalibrationDataset | None = None) -> RamService:
    """Bind a service for a session; caller runs serve_forever and closes it."""
    return RamService(ram, make_ledger(cfg, ds), cfg.bind_endpoint)
