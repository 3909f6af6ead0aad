"""Command-line interface.

Subcommands: enumerate, count, verify, validate, map, section, fiber, park,
act, involute.  Chains are written ``"(3 8)(5 7)(1 8)(3 7)"`` or as JSON
``{"n": 8, "steps": [[3, 8], ...]}``; pairs use ``--a 1,3,7,1 --b
1,3,5,6,7`` or JSON ``{"n": 8, "a": [...], "b": [...]}``.  Exit status is 0
on success, 1 on domain errors (including a failed ``verify``), 2 on usage
errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .chains import CapExceeded, Chain, DEFAULT_CAP, enumerate_sigma, involute, validate
from .counting import count_formula
from .action import apply_generator, apply_permutation
from .parking import ParkingInput, park_trace
from .perms import Permutation
from .surjection import PairAB, fiber, gamma, section, verify

__all__ = ["run", "main"]


class UsageError(Exception):
    """A bad flag combination, reported with exit status 2."""


def _ints(text: str) -> tuple[int, ...]:
    return tuple(int(tok) for tok in text.split(",") if tok.strip())


def _format_ints(values) -> str:
    return ",".join(str(x) for x in values)


def _chain_from_args(args: argparse.Namespace) -> Chain:
    raw = args.chain.strip()
    if raw.startswith("{"):
        chain = Chain.from_json(json.loads(raw))
        if args.n is not None and args.n != chain.n:
            raise UsageError(f"-n {args.n} contradicts the chain JSON (n={chain.n})")
        return chain
    if args.n is None:
        raise UsageError("-n is required when --chain is given in text form")
    return Chain.parse(raw, args.n)


def _pair_from_args(args: argparse.Namespace) -> PairAB:
    if args.pair is not None:
        if args.a is not None or args.b is not None:
            raise UsageError("--pair excludes --a/--b")
        return PairAB.from_json(json.loads(args.pair))
    if args.b is None:
        raise UsageError("either --pair or --b is required")
    if args.n is None:
        raise UsageError("-n is required with --a/--b")
    return PairAB(args.n, _ints(args.a or ""), frozenset(_ints(args.b)))


def _print_chain(chain: Chain, fmt: str) -> None:
    print(json.dumps(chain.to_json()) if fmt == "json" else str(chain))


def _print_pair(pair: PairAB, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(pair.to_json()))
    else:
        print(f"a={_format_ints(pair.a)} b={_format_ints(sorted(pair.b))}")


def _cmd_count(args: argparse.Namespace) -> int:
    print(count_formula(args.n, args.k))
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    for chain in enumerate_sigma(args.n, args.k, args.cap):
        _print_chain(chain, args.format)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    report = verify(args.n, args.cap)
    if args.format == "json":
        print(json.dumps(report.to_json()))
    else:
        def mark(ok: bool) -> str:
            return "ok" if ok else "FAIL"

        print(f"{'k':>3} {'formula':>10} {'enumerated':>10} {'counts':>7} {'sections':>9} {'fibres':>7}")
        for row in report.rows:
            print(
                f"{row.k:>3} {row.formula:>10} {row.enumerated:>10} "
                f"{mark(row.counts_match):>7} {mark(row.sections_ok):>9} {mark(row.fibers_ok):>7}"
            )
        print("PASS" if report.passed else "FAIL")
    return 0 if report.passed else 1


def _cmd_validate(args: argparse.Namespace) -> int:
    report = validate(_chain_from_args(args))
    if args.format == "json":
        print(json.dumps(report.to_json()))
    else:
        def mark(ok: bool) -> str:
            return "yes" if ok else "no"

        print(f"member: {mark(report.is_member)}")
        print(f"geodesic: {mark(report.is_geodesic)}")
        print(f"below: {mark(report.is_below)}")
        print(f"nondecreasing: {mark(report.is_nondecreasing)}")
    return 0


def _cmd_map(args: argparse.Namespace) -> int:
    _print_chain(gamma(_pair_from_args(args)), args.format)
    return 0


def _cmd_section(args: argparse.Namespace) -> int:
    _print_pair(section(_chain_from_args(args)), args.format)
    return 0


def _cmd_fiber(args: argparse.Namespace) -> int:
    for pair in fiber(_chain_from_args(args)):
        _print_pair(pair, args.format)
    return 0


def _cmd_park(args: argparse.Namespace) -> int:
    if args.b is None:
        raise UsageError("--b (open spaces) is required")
    inp = ParkingInput(args.n, _ints(args.a or ""), frozenset(_ints(args.b)))
    outcome, visits = park_trace(inp)
    if args.format == "json":
        payload = outcome.to_json()
        if args.trace:
            payload["trace"] = [
                {"entry": v.entry, "probed": list(v.probed), "parked": v.parked}
                for v in visits
            ]
        print(json.dumps(payload))
    else:
        if args.trace:
            for idx, v in enumerate(visits, start=1):
                probed = " ".join(str(x) for x in v.probed)
                print(f"car {idx}: enters after {v.entry}, probes {probed}, parks at {v.parked}")
        print(f"spaces: {_format_ints(outcome.spaces)}")
        print(f"residue: {outcome.residue}")
    return 0


def _parse_position_permutation(text: str, k: int) -> Permutation:
    if "(" in text:
        return Permutation.parse(text, k)
    return Permutation(_ints(text))


def _cmd_act(args: argparse.Namespace) -> int:
    chain = _chain_from_args(args)
    if args.generator is not None:
        result = apply_generator(chain, args.generator)
    else:
        p = _parse_position_permutation(args.perm, len(chain))
        result = apply_permutation(chain, p)
    _print_chain(result, args.format)
    return 0


def _cmd_involute(args: argparse.Namespace) -> int:
    _print_chain(involute(_chain_from_args(args)), args.format)
    return 0


def _add_common(sub: argparse.ArgumentParser, *, n_required: bool = False) -> None:
    sub.add_argument("-n", type=int, required=n_required, default=None,
                     help="ground-set size")
    sub.add_argument("--format", choices=("text", "json"), default="text",
                     help="output format (default text)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="minfact",
        description="Prefixes of minimal transposition factorizations of the n-cycle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="closed-form count of k-prefixes")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser("enumerate", help="list every k-prefix, one per line")
    _add_common(p, n_required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP,
                   help="refuse enumerations larger than this (default 10^7)")
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("verify", help="check counts and fibre structure for all k < n")
    _add_common(p, n_required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("validate", help="report the membership conditions of a chain")
    _add_common(p)
    p.add_argument("--chain", required=True, help="chain text or JSON")
    p.set_defaults(handler=_cmd_validate)

    p = sub.add_parser("map", help="map a pair (A, B) to its chain")
    _add_common(p)
    p.add_argument("--a", default=None, help="comma-separated sequence A")
    p.add_argument("--b", default=None, help="comma-separated set B")
    p.add_argument("--pair", default=None, help="pair as JSON")
    p.set_defaults(handler=_cmd_map)

    p = sub.add_parser("section", help="the residue-1 pair of a chain's fibre")
    _add_common(p)
    p.add_argument("--chain", required=True)
    p.set_defaults(handler=_cmd_section)

    p = sub.add_parser("fiber", help="all n pairs mapping to a chain")
    _add_common(p)
    p.add_argument("--chain", required=True)
    p.set_defaults(handler=_cmd_fiber)

    p = sub.add_parser("park", help="run the circular parking process")
    _add_common(p, n_required=True)
    p.add_argument("--a", default=None, help="comma-separated entry points")
    p.add_argument("--b", default=None, help="comma-separated open spaces")
    p.add_argument("--trace", action="store_true", help="print one line per car")
    p.set_defaults(handler=_cmd_park)

    p = sub.add_parser("act", help="act on a chain by a position permutation")
    _add_common(p)
    p.add_argument("--chain", required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("-l", "--generator", type=int, default=None,
                       help="apply the single adjacent transposition (l, l+1)")
    group.add_argument("--perm", default=None,
                       help="position permutation, cycle notation or one-line")
    p.set_defaults(handler=_cmd_act)

    p = sub.add_parser("involute", help="reverse a chain and reflect its entries")
    _add_common(p)
    p.add_argument("--chain", required=True)
    p.set_defaults(handler=_cmd_involute)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (CapExceeded, ValueError, KeyError) as exc:
        # JSONDecodeError and missing JSON keys land here as well
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
