"""Command-line surface for the power model, RAM simulator, and service.

Exit codes are stable across subcommands: 0 success, 2 usage error, 3 file
I/O error, 4 validation or fit failure, 5 bind failure.
"""

from __future__ import annotations

import argparse
import ipaddress
import json
import os
import sys

from .net.service import (
    BIND_ENV_VAR,
    BindFailure,
    DEFAULT_BIND,
    RamService,
    SessionConfig,
    make_ledger,
)
from .power.dataset import (
    CalibrationDataset,
    CALIBRATION_HEADER,
    DiagnosticCode,
    builtin_dataset,
    load_calibration_file,
    validate_dataset,
)
from .power.model import (
    DegenerateFit,
    FitKind,
    energy_per_cycle,
    fit,
    io_slope_voltage_scaling,
    max_relative_residuals,
    power_at,
    predict,
)
from .power.reductions import (
    CLAIM_TOLERANCE_PP,
    PUBLISHED_CLAIMS,
    comparison_matrix,
    reduction,
)
from .power.standards import CHANNELS, POWER_RAILS, STANDARDS, IoStandard, Rail, WlanChannel
from .ram.core import KEY_MASK, InvalidConfig, IotRam, RamConfig
from .ram.trace import TraceError, parse_trace, run_trace

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_VALIDATION = 4
EXIT_BIND = 5

DEFAULT_DEVICE_KEY = "2001:db8::1"

#: Diagnostics that document known discrepancies in the published source
#: rather than defects in the dataset itself; they do not fail validation.
_DOCUMENTED_CODES = {DiagnosticCode.TABLE7_MISMATCH, DiagnosticCode.CLAIM_MISMATCH}


class CliError(Exception):
    def __init__(self, exit_code: int, message: str):
        super().__init__(message)
        self.exit_code = exit_code


def _parse_standards(text: str) -> list[IoStandard]:
    if text.strip().lower() == "all":
        return list(STANDARDS)
    try:
        return [IoStandard.parse(text)]
    except ValueError as exc:
        raise CliError(EXIT_USAGE, str(exc)) from None


def _parse_channels(text: str) -> list[WlanChannel]:
    if text.strip().lower() == "all":
        return list(CHANNELS)
    try:
        return [WlanChannel.parse(text)]
    except ValueError as exc:
        raise CliError(EXIT_USAGE, str(exc)) from None


def _parse_rail(text: str) -> Rail:
    try:
        return Rail.parse(text)
    except ValueError as exc:
        raise CliError(EXIT_USAGE, str(exc)) from None


def _parse_key(text: str) -> int:
    """128-bit key, as an IPv6 literal ("2001:db8::1") or plain hex."""
    cleaned = text.strip()
    try:
        if ":" in cleaned:
            return int(ipaddress.IPv6Address(cleaned))
        value = int(cleaned, 16)
    except ValueError:
        raise CliError(EXIT_USAGE, f"bad 128-bit key {text!r}") from None
    if not 0 <= value <= KEY_MASK:
        raise CliError(EXIT_USAGE, f"key {text!r} does not fit in 128 bits")
    return value


def _load_dataset(path: str | None) -> CalibrationDataset:
    if path is None:
        return builtin_dataset()
    try:
        return load_calibration_file(path)
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot read {path}: {exc}") from None
    except ValueError as exc:
        raise CliError(EXIT_IO, f"bad calibration file {path}: {exc}") from None


def _cell_record(std: IoStandard, ch: WlanChannel, cell) -> dict:
    return {
        "standard": std.name,
        "channel_ghz": ch.carrier_ghz,
        "clock_w": cell.clock_w,
        "signal_w": cell.signal_w,
        "bram_w": cell.bram_w,
        "io_w": cell.io_w,
        "leakage_w": cell.leakage_w,
        "total_w": cell.total_w,
    }


def cmd_table(args) -> int:
    ds = _load_dataset(args.input)
    standards = _parse_standards(args.standard)
    channels = _parse_channels(args.channel)
    try:
        cells = {(s, c): ds.lookup(s, c) for s in standards for c in channels}
    except KeyError as exc:
        raise CliError(EXIT_VALIDATION, f"dataset incomplete: {exc.args[0]}") from None

    if args.format == "csv":
        print(CALIBRATION_HEADER)
        for s in standards:
            for c in channels:
                cell = cells[(s, c)]
                print(
                    f"{s.name},{c.carrier_ghz},{cell.clock_w:.3f},{cell.signal_w:.3f},"
                    f"{cell.bram_w:.3f},{cell.io_w:.3f},{cell.leakage_w:.3f},{cell.total_w:.3f}"
                )
    elif args.format == "json":
        records = [_cell_record(s, c, cells[(s, c)]) for s in standards for c in channels]
        print(json.dumps({"provenance": ds.provenance, "cells": records}, indent=2))
    else:
        for c in channels:
            print(f"Power consumption at {c.carrier_ghz} GHz ({c.ieee_name}), watts")
            header = f"{'rail':<10}" + "".join(f"{s.name:>10}" for s in standards)
            print(header)
            for rail in POWER_RAILS + (Rail.TOTAL,):
                row = f"{rail.name.lower():<10}"
                row += "".join(f"{cells[(s, c)].rail(rail):>10.3f}" for s in standards)
                print(row)
            print()
    return EXIT_OK


def cmd_compare(args) -> int:
    ds = _load_dataset(args.input)
    rail = _parse_rail(args.rail)
    base = _parse_standards(args.base_std)
    alt = _parse_standards(args.alt_std)
    if len(base) != 1 or len(alt) != 1:
        raise CliError(EXIT_USAGE, "--from and --to take a single standard")
    channels = _parse_channels(args.channel)

    try:
        reports = [reduction(ds, rail, base[0], alt[0], ch) for ch in channels]
    except KeyError as exc:
        raise CliError(EXIT_VALIDATION, f"dataset incomplete: {exc.args[0]}") from None
    except ValueError as exc:
        raise CliError(EXIT_VALIDATION, str(exc)) from None

    if args.format == "csv":
        print("channel_ghz,rail,base_standard,alt_standard,base_w,alt_w,percent")
        for r in reports:
            print(
                f"{r.channel.carrier_ghz},{rail.name.lower()},{r.base_std.name},"
                f"{r.alt_std.name},{r.base_w:.3f},{r.alt_w:.3f},{r.percent:.2f}"
            )
    elif args.format == "json":
        print(
            json.dumps(
                [
                    {
                        "channel_ghz": r.channel.carrier_ghz,
                        "rail": rail.name.lower(),
                        "base_standard": r.base_std.name,
                        "alt_standard": r.alt_std.name,
                        "base_w": r.base_w,
                        "alt_w": r.alt_w,
                        "percent": round(r.percent, 2),
                    }
                    for r in reports
                ],
                indent=2,
            )
        )
    else:
        for r in reports:
            print(r.render())

    # Quoted figures that the grid cannot reproduce are flagged alongside the
    # computed results, never printed in their place.
    if (base[0], alt[0]) == (IoStandard.LVCMOS25, IoStandard.LVCMOS12):
        selected = {ch for ch in channels}
        for claim in PUBLISHED_CLAIMS:
            if claim.rail is not rail or claim.channel not in selected:
                continue
            computed = reduction(ds, rail, base[0], alt[0], claim.channel).percent
            if abs(computed - claim.quoted_percent) > CLAIM_TOLERANCE_PP:
                print(
                    f"flagged: {claim.source} quotes {claim.quoted_percent:.2f}% at "
                    f"{claim.channel.carrier_ghz} GHz; the grid yields {computed:.2f}%",
                    file=sys.stderr,
                )
    return EXIT_OK


def cmd_fit(args) -> int:
    ds = _load_dataset(args.input)
    try:
        coeffs = fit(ds)
    except DegenerateFit as exc:
        raise CliError(EXIT_VALIDATION, f"degenerate fit: {exc}") from None
    residuals = max_relative_residuals(ds, coeffs)
    scaling = io_slope_voltage_scaling(coeffs)

    if args.format == "json":
        doc = {
            "coefficients": {
                "clock": _fit_record(coeffs.clock),
                "signal": _fit_record(coeffs.signal),
                "bram": _fit_record(coeffs.bram),
                "io": {s.name: _fit_record(f) for s, f in coeffs.io.items()},
                "leakage": {s.name: _fit_record(f) for s, f in coeffs.leakage.items()},
            },
            "max_relative_residuals": residuals,
            "io_slope_per_volt_sq": {s.name: v for s, v in scaling.items()},
        }
        print(json.dumps(doc, indent=2))
        return EXIT_OK

    def line(name: str, f) -> str:
        kind = "through-origin" if f.fit_kind is FitKind.THROUGH_ORIGIN else "affine"
        text = f"{name:<20} slope {f.slope_w_per_ghz:9.6f} W/GHz"
        if f.fit_kind is FitKind.AFFINE:
            text += f"  intercept {f.intercept_w:9.6f} W"
        return f"{text}  [{kind}]  max residual {100 * residuals[name]:.2f}%"

    print(line("clock", coeffs.clock))
    print(line("signal", coeffs.signal))
    print(line("bram", coeffs.bram))
    for std in ds.standards():
        print(line(f"io[{std.name}]", coeffs.io[std]))
    for std in ds.standards():
        print(line(f"leakage[{std.name}]", coeffs.leakage[std]))
    ratios = ", ".join(f"{s.name} {v:.6f}" for s, v in scaling.items())
    print(f"info: io slope / supply^2 (equal under a pure CV^2f law): {ratios}")
    return EXIT_OK


def _fit_record(f) -> dict:
    return {
        "slope_w_per_ghz": f.slope_w_per_ghz,
        "intercept_w": f.intercept_w,
        "fit_kind": f.fit_kind.value,
    }


def cmd_predict(args) -> int:
    if args.freq_ghz <= 0:
        raise CliError(EXIT_USAGE, f"--freq-ghz must be > 0, got {args.freq_ghz}")
    ds = _load_dataset(args.input)
    standards = _parse_standards(args.standard)
    if len(standards) != 1:
        raise CliError(EXIT_USAGE, "--standard takes a single standard")
    try:
        coeffs = fit(ds)
    except DegenerateFit as exc:
        raise CliError(EXIT_VALIDATION, f"degenerate fit: {exc}") from None
    pb = predict(coeffs, standards[0], args.freq_ghz)

    if args.format == "json":
        print(
            json.dumps(
                {
                    "standard": standards[0].name,
                    "freq_ghz": args.freq_ghz,
                    "clock_w": pb.clock_w,
                    "signal_w": pb.signal_w,
                    "bram_w": pb.bram_w,
                    "io_w": pb.io_w,
                    "leakage_w": pb.leakage_w,
                    "total_w": pb.total_w,
                },
                indent=2,
            )
        )
    else:
        print(f"predicted power for {standards[0].name} at {args.freq_ghz} GHz, watts")
        for rail in POWER_RAILS + (Rail.TOTAL,):
            print(f"{rail.name.lower():<10}{pb.rail(rail):>10.3f}")
    return EXIT_OK


def cmd_validate(args) -> int:
    if args.input is not None:
        ds = _load_dataset(args.input)
        diagnostics = validate_dataset(ds)
    else:
        ds = builtin_dataset()
        diagnostics = list(validate_dataset(ds))
        for rail in (Rail.IO, Rail.TOTAL, Rail.LEAKAGE):
            _, extra = comparison_matrix(ds, rail)
            diagnostics.extend(extra)

    for diag in diagnostics:
        print(diag.render())
    fatal = [d for d in diagnostics if d.code not in _DOCUMENTED_CODES]
    documented = [d for d in diagnostics if d.code in _DOCUMENTED_CODES]
    print(
        f"{len(diagnostics)} finding(s): {len(fatal)} dataset defect(s), "
        f"{len(documented)} documented source discrepanc(ies)"
    )
    return EXIT_VALIDATION if fatal else EXIT_OK


def cmd_ram_run(args) -> int:
    device_key = _parse_key(args.device_key)
    key = device_key if args.key is None else _parse_key(args.key)
    if (args.standard is None) != (args.channel is None):
        raise CliError(EXIT_USAGE, "--standard and --channel must be given together")

    try:
        with open(args.trace, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot read trace {args.trace}: {exc}") from None
    try:
        ops = parse_trace(text)
    except TraceError as exc:
        raise CliError(EXIT_VALIDATION, f"malformed trace: {exc}") from None

    try:
        ram = IotRam(RamConfig(depth_words=args.depth, device_ipv6=device_key))
    except InvalidConfig as exc:
        raise CliError(EXIT_USAGE, str(exc)) from None

    results, summary = run_trace(ram, ops, key)
    for op, outcome in results:
        mnemonic = f"W {op.addr} {op.data:08X}" if op.is_write else f"R {op.addr}"
        print(f"{op.lineno:>5}  {mnemonic:<24} -> {outcome.render()}")
    print(
        f"cycles={summary.cycles} writes={summary.writes} reads={summary.reads} "
        f"auth_fails={summary.auth_fails} range_errors={summary.range_errors}"
    )

    if args.standard is not None:
        standards = _parse_standards(args.standard)
        channels = _parse_channels(args.channel)
        if len(standards) != 1 or len(channels) != 1:
            raise CliError(EXIT_USAGE, "energy pricing takes a single standard and channel")
        ds = _load_dataset(args.input)
        pb = power_at(ds, standards[0], channels[0].carrier_ghz)
        per_cycle = energy_per_cycle(pb, channels[0].carrier_ghz)
        print(
            f"energy: {summary.cycles * per_cycle:.6e} J "
            f"({per_cycle:.6e} J/cycle at {standards[0].name}, "
            f"{channels[0].carrier_ghz} GHz)"
        )
    return EXIT_OK


def cmd_serve(args) -> int:
    standards = _parse_standards(args.standard)
    channels = _parse_channels(args.channel)
    if len(standards) != 1 or len(channels) != 1:
        raise CliError(EXIT_USAGE, "serve takes a single standard and channel")
    device_key = _parse_key(args.device_key)
    bind = args.bind or os.environ.get(BIND_ENV_VAR) or DEFAULT_BIND

    cfg = SessionConfig(standards[0], channels[0], bind)
    ds = _load_dataset(args.input)
    try:
        ram = IotRam(RamConfig(depth_words=args.depth, device_ipv6=device_key))
    except InvalidConfig as exc:
        raise CliError(EXIT_USAGE, str(exc)) from None
    try:
        ledger = make_ledger(cfg, ds)
        service = RamService(ram, ledger, bind)
    except BindFailure as exc:
        raise CliError(EXIT_BIND, str(exc)) from None
    except ValueError as exc:
        raise CliError(EXIT_USAGE, str(exc)) from None

    host, port = service.address
    print(
        f"listening on {host}:{port} ({cfg.io_standard.name}, "
        f"{cfg.channel.carrier_ghz} GHz, {ledger.per_cycle_j:.6e} J/cycle)"
    )
    try:
        service.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        service.close()
        print(ledger.render())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="iotram",
        description="IPv6-gated RAM simulator and LVCMOS/WLAN power calibration toolkit",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("table", help="print calibration cells")
    p.add_argument("--standard", default="all", help="IO standard name or 'all'")
    p.add_argument("--channel", default="all", help="WLAN channel (GHz or IEEE name) or 'all'")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("--input", help="calibration file instead of the builtin grid")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("compare", help="reduction between two IO standards")
    p.add_argument("--rail", required=True, help="clock|signal|bram|io|leakage|total")
    p.add_argument("--from", dest="base_std", required=True, help="base IO standard")
    p.add_argument("--to", dest="alt_std", required=True, help="alternative IO standard")
    p.add_argument("--channel", default="all", help="WLAN channel or 'all'")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("--input", help="calibration file instead of the builtin grid")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("fit", help="fit per-rail frequency-scaling coefficients")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--input", help="calibration file instead of the builtin grid")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("predict", help="model power at an arbitrary frequency")
    p.add_argument("--standard", required=True, help="IO standard name")
    p.add_argument("--freq-ghz", type=float, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--input", help="calibration file instead of the builtin grid")
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("validate", help="check a grid and cross-check published figures")
    p.add_argument("--input", help="calibration file; omit to validate the builtin grid")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("ram-run", help="execute a trace file against a fresh RAM")
    p.add_argument("--trace", required=True, help="trace file (W <addr> <hex32> / R <addr>)")
    p.add_argument("--key", help="128-bit access key (hex or IPv6); defaults to the device key")
    p.add_argument("--device-key", default=DEFAULT_DEVICE_KEY, help="configured gate key")
    p.add_argument("--depth", type=int, default=256, help="memory depth in words")
    p.add_argument("--standard", help="price energy at this IO standard")
    p.add_argument("--channel", help="price energy at this WLAN channel")
    p.add_argument("--input", help="calibration file for energy pricing")
    p.set_defaults(func=cmd_ram_run)

    p = sub.add_parser("serve", help="expose a RAM over the datagram protocol")
    p.add_argument("--bind", help=f"[host]:port (default ${BIND_ENV_VAR} or {DEFAULT_BIND})")
    p.add_argument("--standard", default="LVCMOS12", help="session IO standard")
    p.add_argument("--channel", default="2.4", help="session WLAN channel")
    p.add_argument("--device-key", default=DEFAULT_DEVICE_KEY, help="configured gate key")
    p.add_argument("--depth", type=int, default=256, help="memory depth in words")
    p.add_argument("--input", help="calibration file for energy pricing")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"iotram: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
