"""
Command-line front end: ``qudit-map {map,sim,verify,cost,tables}``.

Results go to stdout, logs and diagnostics to stderr. Exit status is 0 on
success, 1 on any operational error and 2 when verification finds a
counterexample.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from app.config import settings
from app.errors import QuditMapError
from app.ingestion import (
    QC_SUFFIX,
    REAL_SUFFIX,
    load_quantum,
    load_reversible,
    save_text,
    write_qc,
)
from app.logging_config import setup_logging
from app.mapping import map_circuit
from app.models.quantum import Library
from app.services import cost_model
from app.services.verification import VerifyMode, check_equivalence
from app.simulation.quart import (
    bits_to_quart,
    format_quart_state,
    parse_quart_pattern,
    simulate_quantum,
    trace_quantum,
)
from app.simulation.reversible import (
    format_bits,
    parse_bits,
    simulate_reversible,
    trace_reversible,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INEQUIVALENT = 2


def _out(text: str = ""):
    sys.stdout.write(text + "\n")


def _err(text: str):
    sys.stderr.write(text + "\n")


# ── map ────────────────────────────────────────────────────────────────

def cmd_map(args: argparse.Namespace) -> int:
    circuit = load_reversible(args.input)
    quantum = map_circuit(circuit, Library(args.lib))
    summary = cost_model.report(quantum)
    line = (
        f"{circuit.gate_count} Toffoli gates -> {summary.total_gates} {quantum.library.label} gates "
        f"({summary.controlled_gates} controlled)"
    )
    if args.output:
        save_text(args.output, write_qc(quantum))
        _out(line)
        _out(f"written to {args.output}")
    else:
        sys.stdout.write(write_qc(quantum))
        _err(line)
    return EXIT_OK


# ── sim ────────────────────────────────────────────────────────────────

def cmd_sim(args: argparse.Namespace) -> int:
    path = Path(args.input)
    if path.suffix == REAL_SUFFIX:
        circuit = load_reversible(path)
        bits = parse_bits(args.pattern)
        if args.trace:
            for index, state in enumerate(trace_reversible(circuit, bits), start=1):
                _out(f"after gate {index}: {format_quart_state(bits_to_quart(state))}")
        _out(format_bits(simulate_reversible(circuit, bits)))
        return EXIT_OK

    if path.suffix == QC_SUFFIX:
        circuit = load_quantum(path)
        state = parse_quart_pattern(args.pattern)
        if args.trace:
            for index, after in enumerate(trace_quantum(circuit, state), start=1):
                _out(f"after gate {index}: {format_quart_state(after)}")
        _out(format_quart_state(simulate_quantum(circuit, state), compact=True))
        return EXIT_OK

    _err(f"error: cannot tell circuit type of {path} (expected {REAL_SUFFIX} or {QC_SUFFIX})")
    return EXIT_ERROR


# ── verify ─────────────────────────────────────────────────────────────

def cmd_verify(args: argparse.Namespace) -> int:
    reversible = load_reversible(args.reversible)
    quantum = load_quantum(args.quantum)
    result = check_equivalence(
        reversible,
        quantum,
        mode=VerifyMode(args.mode),
        samples=args.samples,
        seed=args.seed,
        workers=args.workers,
    )
    if result.seed is not None:
        _out(f"seed: {result.seed}")
    if result.equivalent:
        _out(f"EQUIVALENT ({result.patterns_checked} patterns, {result.mode})")
        return EXIT_OK

    cex = result.counterexample
    _out(f"NOT EQUIVALENT ({result.patterns_checked} patterns, {result.mode})")
    _out(f"  input:    {cex.input}")
    _out(f"  expected: {cex.expected}")
    _out(f"  actual:   {cex.actual}")
    return EXIT_INEQUIVALENT


# ── cost ───────────────────────────────────────────────────────────────

def cmd_cost(args: argparse.Namespace) -> int:
    circuit = load_reversible(args.input)
    summary = cost_model.circuit_costs(circuit, ancillae=args.ancillae)
    if args.format == "json":
        _out(summary.model_dump_json(indent=2))
        return EXIT_OK

    _out("gate | k | ncv | ncv-v1 | delta")
    for row in summary.rows:
        if row.error:
            _out(f"{row.gate_index} | {row.k} | n/a | {row.ncvv1_cost} | n/a  ({row.error})")
        else:
            _out(f"{row.gate_index} | {row.k} | {row.ncv_cost} | {row.ncvv1_cost} | {row.delta_percent}%")
    overall = "n/a" if summary.delta_percent is None else f"{summary.delta_percent}%"
    _out(f"total | | {summary.ncv_total} | {summary.ncvv1_total} | {overall}")
    if summary.incomplete:
        _err("warning: some gates are outside the NCV cost table; NCV total excludes them")
    return EXIT_OK


# ── tables ─────────────────────────────────────────────────────────────

def cmd_tables(args: argparse.Namespace) -> int:
    ncv = cost_model.ncv_cost_frame()
    ncvv1 = cost_model.ncvv1_cost_frame()

    if args.format == "json":
        payload = {
            "ncv": json.loads(ncv.to_json(orient="index")),
            "ncv_v1": json.loads(ncvv1.to_json(orient="index")),
        }
        _out(json.dumps(payload, indent=2))
    elif args.format == "csv":
        sys.stdout.write(ncv.to_csv())
        _out()
        sys.stdout.write(ncvv1.to_csv())
    else:
        _out("NCV quantum cost (rows: controls, columns: ancillae)")
        _out(ncv.to_string(na_rep="-"))
        _out()
        _out("NCV-|v1> quantum cost and savings over NCV")
        _out(ncvv1.to_string())
    return EXIT_OK


# ── entry point ────────────────────────────────────────────────────────

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qudit-map",
        description="Map reversible Toffoli circuits to NCV and NCV-|v1> quantum circuits.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("map", help="map a .real circuit to a .qc circuit")
    p.add_argument("input")
    p.add_argument("--lib", choices=[lib.value for lib in Library], default=Library.NCV_V1.value)
    p.add_argument("-o", "--output", help="output .qc path (default: stdout)")
    p.set_defaults(handler=cmd_map)

    p = sub.add_parser("sim", help="simulate a .real or .qc circuit on one input pattern")
    p.add_argument("input")
    p.add_argument("pattern", help='e.g. 1111 or "v1 v1 1 1"')
    p.add_argument("--trace", action="store_true", help="print the state after every gate")
    p.set_defaults(handler=cmd_sim)

    p = sub.add_parser("verify", help="check a .qc circuit against a .real circuit")
    p.add_argument("reversible")
    p.add_argument("quantum")
    p.add_argument("--mode", choices=[m.value for m in VerifyMode], default=VerifyMode.EXHAUSTIVE.value)
    p.add_argument("--samples", type=int, default=None, help="patterns for random mode")
    p.add_argument("--seed", type=int, default=None, help="seed for random mode")
    p.add_argument("--workers", type=int, default=None, help="processes for exhaustive mode")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("cost", help="per-gate NCV vs NCV-|v1> quantum cost")
    p.add_argument("input")
    p.add_argument("--ancillae", type=int, default=None)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(handler=cmd_cost)

    p = sub.add_parser("tables", help="dump the embedded cost tables")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.set_defaults(handler=cmd_tables)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging("DEBUG" if args.verbose else settings.LOG_LEVEL, stream=sys.stderr)
    logger.debug("command: %s", args.command)
    try:
        return args.handler(args)
    except QuditMapError as exc:
        _err(f"error: {type(exc).__name__}: {exc}")
        return EXIT_ERROR
    except OSError as exc:
        _err(f"error: {exc}")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
