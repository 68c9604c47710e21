"""Command line front end.

Exit codes: 0 success, 2 invalid input, 3 unsupported code, 4 cap exceeded,
5 verification failure.  The only environment variable consulted is
PFKIT_THREADS, an optional worker-count override for the verification
suites.
"""

from __future__ import annotations

import argparse
import os
import sys

from .errors import (
    CapExceededError,
    InvalidInputError,
    PfkitError,
    UnsupportedCodeError,
)
from .report import ANALYSES, JobSpec, run, to_json, to_text, verify_passed


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="pfkit",
        description=(
            "Exact invariants of parafermion code extensions: classification, "
            "coset lattices, branching tables, and the module census."
        ),
    )
    p.add_argument("--k", type=int, required=True, help="level (>= 2)")
    p.add_argument("--ell", type=int, required=True, help="code length (>= 1)")
    p.add_argument(
        "--gen",
        action="append",
        default=[],
        metavar="ROW",
        help="comma-separated generator row, repeatable",
    )
    p.add_argument(
        "--analysis",
        action="append",
        choices=ANALYSES,
        default=[],
        help="analysis to run, repeatable (default: classify)",
    )
    p.add_argument(
        "--format",
        choices=("text", "json"),
        default="text",
        dest="fmt",
        help="report format",
    )
    p.add_argument(
        "--coset",
        metavar="J:BITS",
        help="coset selector for the branch analysis, e.g. 1:1100",
    )
    p.add_argument(
        "--orbit-cap",
        type=int,
        default=JobSpec.orbit_cap,
        help="maximum label-space size for orbit enumeration",
    )
    p.add_argument(
        "--verify-max-k",
        type=int,
        default=JobSpec.verify_max_k,
        help="largest level the verify analysis will accept",
    )
    p.add_argument(
        "--output",
        metavar="FILE",
        help="write the report to FILE instead of stdout",
    )
    return p


def _parse_generators(rows: list[str], k: int) -> tuple[tuple[int, ...], ...]:
    out = []
    for row in rows:
        try:
            entries = tuple(int(x.strip()) for x in row.split(","))
        except ValueError:
            raise InvalidInputError(f"generator row {row!r} is not integers")
        if any(not 0 <= x < k for x in entries):
            raise InvalidInputError(
                f"generator row {row!r} has entries outside [0, {k})"
            )
        out.append(entries)
    return tuple(out)


def _parse_coset(text: str, k: int) -> tuple[int, tuple[int, ...]]:
    shift, sep, bits = text.partition(":")
    if not sep or not bits:
        raise InvalidInputError(f"coset selector {text!r} is not J:BITS")
    try:
        j = int(shift)
        bit_tuple = tuple(int(b) for b in bits)
    except ValueError:
        raise InvalidInputError(f"coset selector {text!r} is not J:BITS")
    return j, bit_tuple


def _workers_from_env() -> int:
    raw = os.environ.get("PFKIT_THREADS")
    if raw is None:
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise InvalidInputError(f"PFKIT_THREADS must be an integer, got {raw!r}")
    if value < 1:
        raise InvalidInputError(f"PFKIT_THREADS must be >= 1, got {value}")
    return value


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        generators = _parse_generators(args.gen, args.k) if args.k >= 2 else ()
        coset = _parse_coset(args.coset, args.k) if args.coset else None
        analyses = tuple(args.analysis) if args.analysis else ("classify",)
        job = JobSpec(
            k=args.k,
            ell=args.ell,
            generators=generators,
            analyses=analyses,
            fmt=args.fmt,
            coset=coset,
            orbit_cap=args.orbit_cap,
            verify_max_k=args.verify_max_k,
        )
        report = run(job, workers=_workers_from_env())
    except InvalidInputError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except UnsupportedCodeError as err:
        print(f"error: {err}", file=sys.stderr)
        return 3
    except CapExceededError as err:
        print(f"error: {err}", file=sys.stderr)
        return 4
    except PfkitError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2

    text = to_json(report) if args.fmt == "json" else to_text(report)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
            if not text.endswith("\n"):
                handle.write("\n")
    else:
        print(text, end="" if text.endswith("\n") else "\n")
    if not verify_passed(report):
        return 5
    return 0
