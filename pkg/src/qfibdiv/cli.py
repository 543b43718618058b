"""Command-line front end.

Exit codes: 0 success, 1 counterexample found, 2 usage error, 3 internal error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .errors import BoundTooLarge, DomainError, ParseError, QFibError, UnknownClaim
from .polyint import IntPoly, pretty, serialize
from .qcore import cyclo_spectrum, cyclotomic, q_binom, q_int
from .qfib import fib, fib_sum, parse_family
from .verify import BOUND_PROFILES, ClaimId, parse_claim, scan_conjecture, verify_claim, verify_instance

log = logging.getLogger("qfibdiv")

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

_CONJ_NAMES = {"conj31": ClaimId.CONJ_3_1, "conj32": ClaimId.CONJ_3_2}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("pretty", "coeffs", "json"), default="pretty")

    parser = _Parser(prog="qfibdiv", description="q-Fibonacci divisibility toolkit")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    compute = sub.add_parser("compute", help="compute a polynomial")
    what = compute.add_subparsers(dest="what", required=True, parser_class=_Parser)

    p = what.add_parser("fib", parents=[fmt], help="member of a q-Fibonacci family")
    p.add_argument("--family", required=True, help="F, G or fr")
    p.add_argument("--r", type=int, default=0)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("recurrence", "sum"), default="recurrence")

    p = what.add_parser("qbinom", parents=[fmt], help="Gaussian binomial [N;K]")
    p.add_argument("N", type=int)
    p.add_argument("K", type=int)

    p = what.add_parser("cyclotomic", parents=[fmt], help="cyclotomic polynomial Phi_N")
    p.add_argument("N", type=int)

    p = what.add_parser("qint", parents=[fmt], help="q-integer [N]_{q^M}")
    p.add_argument("N", type=int)
    p.add_argument("--m", type=int, default=1)

    p = what.add_parser("spectrum", parents=[fmt], help="cyclotomic divisors of a family member")
    p.add_argument("--family", required=True)
    p.add_argument("--r", type=int, default=0)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-d", type=int, default=None)

    p = sub.add_parser("verify", parents=[fmt], help="verify a claim over a finite range")
    p.add_argument("claim", help="claim id, or 'all'")
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--bound-profile", choices=sorted(BOUND_PROFILES), default=None)
    p.add_argument("--instance", default=None, help="JSON parameters of a single instance to re-run")
    p.add_argument("--override", action="store_true", help="allow bounds above the soft limit")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-timing", action="store_true", help="emit elapsed_ms as null")

    p = sub.add_parser("scan", parents=[fmt], help="scan a conjecture")
    p.add_argument("conjecture", choices=sorted(_CONJ_NAMES))
    p.add_argument("--max-6n", type=int, required=True)
    p.add_argument("--max-r", type=int, default=3)
    p.add_argument("--override", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-timing", action="store_true")
    return parser


def _emit_poly(poly: IntPoly, fmt: str, meta: dict) -> None:
    if fmt == "pretty":
        print(pretty(poly))
    elif fmt == "coeffs":
        print(serialize(poly))
    else:
        print(json.dumps(meta | {"coeffs": list(poly.coeffs)}))


def _compute(args) -> int:
    fmt = args.format
    if args.what == "fib":
        family = parse_family(args.family, args.r)
        if args.n < 0:
            raise DomainError("n must be nonnegative")
        poly = fib_sum(family, args.n) if args.method == "sum" else fib(family, args.n)
        _emit_poly(poly, fmt, {"family": str(family), "n": args.n})
    elif args.what == "qbinom":
        _emit_poly(q_binom(args.N, args.K), fmt, {"qbinom": [args.N, args.K]})
    elif args.what == "cyclotomic":
        _emit_poly(cyclotomic(args.N), fmt, {"cyclotomic": args.N})
    elif args.what == "qint":
        _emit_poly(q_int(args.N, args.m), fmt, {"qint": args.N, "m": args.m})
    else:
        family = parse_family(args.family, args.r)
        max_d = args.n if args.max_d is None else args.max_d
        spectrum = sorted(cyclo_spectrum(fib(family, args.n), max_d))
        if fmt == "pretty":
            print(" ".join(map(str, spectrum)))
        elif fmt == "coeffs":
            print("[" + ",".join(map(str, spectrum)) + "]")
        else:
            print(json.dumps({"family": str(family), "n": args.n, "max_d": max_d, "spectrum": spectrum}))
    return EXIT_OK


def _emit_reports(reports, fmt: str, timing: bool, single: bool) -> None:
    if fmt == "pretty":
        for rep in reports:
            ms = f", {rep.elapsed_ms:.0f} ms" if timing and rep.elapsed_ms is not None else ""
            print(f"{rep.claim}: {rep.status} ({rep.instances_checked} checked; {rep.range}{ms})")
            for f in rep.failures:
                print(f"  FAIL {json.dumps(f.params, sort_keys=True)}: expected {f.expected}, got {f.actual}")
            for note in rep.notes:
                print(f"  note: {note}")
        return
    payload = [rep.to_dict(timing) for rep in reports]
    if single:
        payload = payload[0]
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(json.dumps(payload, separators=(",", ":")))


def _verify(args) -> int:
    timing = not args.no_timing
    if args.claim.lower() == "all":
        profile = args.bound_profile or "quick"
        reports = []
        for claim, bound in BOUND_PROFILES[profile].items():
            log.info("verifying %s up to %d", claim, bound)
            reports.append(verify_claim(claim, bound, jobs=args.jobs))
        single = False
    else:
        claim = parse_claim(args.claim)
        if args.instance is not None:
            try:
                params = json.loads(args.instance)
            except json.JSONDecodeError as exc:
                raise DomainError(f"--instance is not valid JSON: {exc}") from None
            reports = [verify_instance(claim, params)]
        else:
            bound = args.bound
            if bound is None and args.bound_profile:
                bound = BOUND_PROFILES[args.bound_profile][claim]
            reports = [verify_claim(claim, bound, override=args.override, jobs=args.jobs)]
        single = True
    _emit_reports(reports, args.format, timing, single)
    return EXIT_COUNTEREXAMPLE if any(r.failures for r in reports) else EXIT_OK


def _scan(args) -> int:
    report = scan_conjecture(
        _CONJ_NAMES[args.conjecture], args.max_6n, args.max_r, override=args.override, jobs=args.jobs
    )
    _emit_reports([report], args.format, not args.no_timing, True)
    return EXIT_COUNTEREXAMPLE if report.failures else EXIT_OK


def run(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except _UsageError as exc:
        print(f"qfibdiv: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        if args.command == "compute":
            return _compute(args)
        if args.command == "verify":
            return _verify(args)
        return _scan(args)
    except (DomainError, UnknownClaim, BoundTooLarge, ParseError) as exc:
        print(f"qfibdiv: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except QFibError as exc:
        print(f"qfibdiv: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as exc:  # noqa: BLE001
        log.exception("unexpected failure")
        print(f"qfibdiv: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
