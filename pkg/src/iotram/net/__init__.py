"""Wire protocol and datagram service for remote RAM access."""

from .frames import (
    MAGIC,
    MalformedFrame,
    Opcode,
    REQUEST_LEN,
    RESPONSE_LEN,
    RequestFrame,
    ResponseFrame,
    Status,
    VERSION,
    decode_request,
    decode_response,
    encode_request,
    encode_response,
    salvage_seq,
)
from .service import (
    BIND_ENV_VAR,
    BindFailure,
    DEFAULT_BIND,
    EnergyLedger,
    RamService,
    SessionConfig,
    handle_datagram,
    make_ledger,
    parse_endpoint,
    serve,
)

__all__ = [
    "BIND_ENV_VAR",
    "BindFailure",
    "DEFAULT_BIND",
    "EnergyLedger",
    "MAGIC",
    "MalformedFrame",
    "Opcode",
    "REQUEST_LEN",
    "RESPONSE_LEN",
    "RamService",
    "RequestFrame",
    "ResponseFrame",
    "SessionConfig",
    "Status",
    "VERSION",
    "decode_request",
    "decode_response",
    "encode_request",
    "encode_response",
    "handle_datagram",
    "make_ledger",
    "parse_endpoint",
    "salvage_seq",
    "serve",
]
