import os
import sys
import argparse
import subprocess
from pathlib import Path
from typing import Optional, Sequence

from mayachains.mc.core.config import get_settings
from mayachains.mc.core.models import SolveDocument, VerificationReport
from mayachains.mc.core.services.atlas import FORMATS, WronskianFamilySpec, family_polynomial
from mayachains.mc.core.services.cache import cached_hermite_wronskian
from mayachains.mc.core.services.cyclic import (
    Signature,
    admissible_shifts,
    count_normalized_diagrams,
    enumerate_signatures,
)
from mayachains.mc.core.services.exactalg import poly_text
from mayachains.mc.core.services.runs import (
    parse_ints,
    roots_run,
    solve_document,
    verify_document,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2


def _effective_precision(cli_value: Optional[int]) -> int:
    """
    Determine the starting root-finding precision in bits.

    Priority:
    1. CLI argument (if provided)
    2. Environment variable MAYACHAINS_PRECISION
    3. Default value (128 bits)

    Args:
        cli_value (int | None): Precision passed via CLI.

    Returns:
        int: The effective precision.
    """
    if cli_value is not None:
        if cli_value < 53:
            raise ValueError(f"precision must be at least 53 bits, got {cli_value}")
        return cli_value
    return get_settings().precision


def _print_reports(reports: dict[str, VerificationReport]) -> bool:
    ok = True
    for name, report in reports.items():
        failures = report.failures()
        if failures:
            ok = False
            print(f"[mayachains] {name}: FAILED ({len(failures)} of {len(report.checks)} checks)", file=sys.stderr)
            for check in failures:
                where = f"[{check.index}]" if check.index is not None else ""
                print(f"  {check.name}{where}: residual numerator {check.residual}", file=sys.stderr)
        else:
            print(f"[mayachains] {name}: ok ({len(report.checks)} checks)", file=sys.stderr)
    return ok


# -----------------------------------------------------------------------------
# Subcommands
# -----------------------------------------------------------------------------
def cmd_enumerate(args: argparse.Namespace) -> int:
    shifts = admissible_shifts(args.p)
    if args.k is not None and args.k not in shifts:
        raise ValueError(f"k={args.k} is not an admissible shift for p={args.p}")
    print(f"p={args.p} shifts: {', '.join(map(str, shifts))}")
    for k in shifts if args.k is None else [args.k]:
        signatures = enumerate_signatures(args.p, k)
        if args.bound is None:
            print(f"k={k}: " + " ".join(str(s) for s in signatures))
            continue
        print(f"k={k}:")
        for s in signatures:
            print(f"  {s}: {count_normalized_diagrams(s, args.bound)}")
    return EXIT_OK


def cmd_solve(args: argparse.Namespace) -> int:
    doc = solve_document(
        Signature.parse(args.sig),
        parse_ints(args.n, "n-tuple"),
        parse_ints(args.perm, "permutation"),
        verify=args.verify,
        allow_any_perm=args.allow_any_perm,
    )
    text = doc.model_dump_json(indent=2)
    if args.out:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
        print(f"[mayachains] wrote {args.out}", file=sys.stderr)
    else:
        print(text)
    if args.verify and not _print_reports(doc.verification or {}):
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def cmd_wronskian(args: argparse.Namespace) -> int:
    if args.indices is not None:
        if args.sig or args.n:
            raise ValueError("use either --indices or --sig/--n, not both")
        indices = parse_ints(args.indices, "index list")
        if any(t < 0 for t in indices):
            raise ValueError(f"Hermite indices must be non-negative: {indices}")
        p = cached_hermite_wronskian(indices, use_cache=not args.no_cache)
    elif args.sig and args.n:
        spec = WronskianFamilySpec(Signature.parse(args.sig), tuple(parse_ints(args.n, "n-tuple")))
        indices = list(spec.indices())
        p = family_polynomial(spec, use_cache=not args.no_cache)
    else:
        raise ValueError("give --indices or both --sig and --n")
    label = "Wr(" + ",".join(f"H_{t}" for t in indices) + ")" if indices else "1"
    print(label)
    print(f"degree: {p.degree()}")
    print(poly_text(p))
    return EXIT_OK


def cmd_roots(args: argparse.Namespace) -> int:
    spec, rs, path = roots_run(
        Signature.parse(args.sig),
        parse_ints(args.n, "n-tuple"),
        precision=_effective_precision(args.precision),
        fmt=args.format,
        out=Path(args.out) if args.out else None,
        use_cache=not args.no_cache,
    )
    print(
        f"[mayachains] {spec.label()}: {rs.degree} roots "
        f"(origin multiplicity {rs.origin_multiplicity}, {rs.precision_bits} bits) → {path}"
    )
    if not rs.converged:
        print(f"[mayachains] {len(rs.unconverged)} roots did not converge", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    text = Path(args.file).read_text(encoding="utf-8")
    doc = SolveDocument.model_validate_json(text)
    return EXIT_OK if _print_reports(verify_document(doc)) else EXIT_VERIFY_FAILED


def cmd_serve(args: argparse.Namespace) -> int:
    return _launch_uvicorn(args.port, args.reload)


# -----------------------------------------------------------------------------
# Entry points
# -----------------------------------------------------------------------------
def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mayachains",
        description="Cyclic Maya diagrams, rational dressing chains and A_2n-Painlevé solutions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="List admissible shifts and signatures.")
    p.add_argument("--p", type=int, required=True, help="Odd cycle length.")
    p.add_argument("--k", type=int, default=None, help="Restrict to one shift.")
    p.add_argument("--bound", type=int, default=None, help="Count normalized diagrams with entries ≤ bound.")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("solve", help="Build and optionally verify a rational solution.")
    p.add_argument("--sig", required=True, help="Signature, e.g. 1,1,3.")
    p.add_argument("--n", required=True, help="p−1 non-negative integers, e.g. 3,1,1,2.")
    p.add_argument("--perm", required=True, help="0-based one-line permutation, e.g. 4,1,2,3,0.")
    p.add_argument("--verify", action="store_true", help="Check every identity exactly.")
    p.add_argument("--allow-any-perm", action="store_true", help="Do not require the last entry to be 0.")
    p.add_argument("--out", default=None, help="Write the JSON document here instead of stdout.")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("wronskian", help="Print an exact Hermite Wronskian.")
    p.add_argument("--indices", default=None, help="Hermite degrees, e.g. 1,2,4.")
    p.add_argument("--sig", default=None)
    p.add_argument("--n", default=None)
    p.add_argument("--no-cache", action="store_true")
    p.set_defaults(func=cmd_wronskian)

    p = sub.add_parser("roots", help="Zeros of a family polynomial.")
    p.add_argument("--sig", required=True)
    p.add_argument("--n", required=True)
    p.add_argument("--precision", type=int, default=None, help="Bits (default 128 or MAYACHAINS_PRECISION).")
    p.add_argument("--format", choices=FORMATS, default="csv")
    p.add_argument("--out", default=None, help="Output path (default: data/outputs/<label>.<format>).")
    p.add_argument("--no-cache", action="store_true")
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("verify", help="Re-check a stored solve document.")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("serve", help="Run the HTTP API.")
    p.add_argument("--port", type=int, default=int(os.getenv("API_PORT", "8000")))
    p.add_argument("--reload", action="store_true", help="Enable auto-reload for development.")
    p.set_defaults(func=cmd_serve)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse ``argv`` and dispatch to a subcommand.

    Returns:
        int: 0 on success, 1 on a failed verification, 2 on a usage error.
    """
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())


def _launch_uvicorn(port: int, reload: bool) -> int:
    print(f"[mcapi] launching Uvicorn on port {port}")
    completed = subprocess.run(
        [
            sys.executable,
            "-m",
            "uvicorn",
            "mayachains.mc.api:app",
            "--port",
            str(port)
        ] + (["--reload"] if reload else []),
        check=False,
    )
    return completed.returncode


def run_api():
    """
    Launch the MayaChains FastAPI server using Uvicorn.
    """
    parser = argparse.ArgumentParser(
        prog="mcapi",
        description="Run MayaChains FastAPI server"
    )
    parser.add_argument(
        "--port",
        type=int,
        default=int(os.getenv("API_PORT", "8000"))
    )
    parser.add_argument(
        "--reload",
        action="store_true",
        help="Enable auto-reload for development."
    )
    args = parser.parse_args()
    sys.exit(_launch_uvicorn(args.port, args.reload))
