"""Command line front end.

Subcommands: count, table, enum, map, series, check.  Exit codes are
part of the contract: 0 success, 1 a verification sweep found a
violation, 2 malformed usage or arguments, 3 an exhaustive search bound
was exceeded, 4 the input was rejected as not belonging to the domain
(for example a composition that is not semi-m-Pell handed to map).

Compositions print as (1,2) and run forms as (1^3,2), with the
multiplicity omitted when it is 1; the same syntax, minus the
parentheses, is accepted as input by the map subcommand.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional, Sequence, Tuple

from .bijection import from_oc, roundtrip_check, to_oc
from .congruence import (
    check_mod3,
    check_mod4_base,
    check_mod4_general,
    check_ob_parity,
    check_oddness,
    check_partial_sum_mod3,
    check_special_cases,
)
from .enumeration import (
    SearchBoundExceeded,
    enumerate_oc,
    enumerate_sp,
    oracle_agreement,
)
from .recurrence import (
    CountCache,
    check_plateau_identity,
    check_scaling_identity,
    load_count_cache,
    save_count_cache,
    sp,
    sp_table,
)
from .report import CongruenceReport, merge_reports
from .series import functional_equation_residual, qm_series

CHECK_FAMILIES = (
    "oddness",
    "mod4",
    "mod4-general",
    "mod3",
    "partial-sum",
    "ob-parity",
    "plateau",
    "scaling",
    "special-cases",
    "roundtrip",
    "oracle",
    "funceq",
)


def format_composition(parts: Sequence[int]) -> str:
    return "(" + ",".join(str(p) for p in parts) + ")"


def format_runform(runs: Sequence[Tuple[int, int]]) -> str:
    body = ",".join(str(b) if u == 1 else f"{b}^{u}" for b, u in runs)
    return "(" + body + ")"


def _tokens(text: str) -> List[str]:
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    if not text:
        return []
    return text.split(",")


def parse_composition(text: str) -> Tuple[int, ...]:
    parts = []
    for token in _tokens(text):
        try:
            value = int(token)
        except ValueError:
            raise ValueError(f"bad part {token!r}") from None
        if value < 1:
            raise ValueError(f"parts must be positive, got {value}")
        parts.append(value)
    return tuple(parts)


def parse_runform(text: str) -> Tuple[Tuple[int, int], ...]:
    runs = []
    for token in _tokens(text):
        base_text, sep, mult_text = token.partition("^")
        try:
            base = int(base_text)
            mult = int(mult_text) if sep else 1
        except ValueError:
            raise ValueError(f"bad run {token!r}") from None
        if base < 1 or mult < 1:
            raise ValueError(f"bad run {token!r}")
        runs.append((base, mult))
    return tuple(runs)


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def _modulus(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 2:
        raise argparse.ArgumentTypeError("modulus must be at least 2")
    return value


def cmd_count(args: argparse.Namespace) -> int:
    if args.cache:
        caches = load_count_cache(args.cache) if os.path.exists(args.cache) else {}
        cache = caches.get(args.m) or CountCache(args.m)
        value = sp(args.n, args.m, cache)
        caches[args.m] = cache
        save_count_cache(args.cache, caches)
    else:
        value = sp(args.n, args.m)
    if args.json:
        print(json.dumps({"n": args.n, "m": args.m, "sp": str(value)}))
    else:
        print(f"sp({args.n},{args.m}) = {value}")
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    if args.m_min > args.m_max:
        raise ValueError("m_min exceeds m_max")
    moduli = range(args.m_min, args.m_max + 1)
    rows = sp_table(args.n_max, moduli)
    print("\t".join(["n"] + [str(n) for n in range(1, args.n_max + 1)]))
    for m, row in zip(moduli, rows):
        print("\t".join([f"m={m}"] + [str(v) for v in row]))
    return 0


def cmd_enum(args: argparse.Namespace) -> int:
    if args.side == "sp":
        for comp in enumerate_sp(args.n, args.m):
            print(format_composition(comp))
    else:
        for runs in enumerate_oc(args.n, args.m):
            print(format_runform(runs))
    return 0


def cmd_map(args: argparse.Namespace) -> int:
    if args.direction == "to-oc":
        composition = parse_composition(args.parts)
        try:
            print(format_runform(to_oc(composition, args.m)))
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 4
    else:
        runform = parse_runform(args.parts)
        try:
            print(format_composition(from_oc(runform, args.m)))
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 4
    return 0


def cmd_series(args: argparse.Namespace) -> int:
    q = qm_series(args.m, args.order)
    for n, coefficient in enumerate(q.coeffs):
        print(f"{n} {coefficient}")
    return 0


def _pick(value: Optional[int], default: int) -> int:
    return default if value is None else value


def _funceq_report(m: int, order: int) -> CongruenceReport:
    report = CongruenceReport("funceq", {"m": m, "order": order})
    residual = functional_equation_residual(m, order)
    for n, coefficient in enumerate(residual.coeffs):
        report.record(f"n={n}", coefficient, 0)
    return report


def cmd_check(args: argparse.Namespace) -> int:
    family = args.family
    m = args.m
    if family in ("mod4", "ob-parity") and m not in (None, 2):
        raise ValueError(f"{family} is a base-two family; omit --m or pass 2")
    if family == "special-cases" and m is not None:
        raise ValueError("special-cases has fixed moduli; omit --m")
    if family == "oddness":
        report = check_oddness(_pick(args.nmax, 1000), _pick(m, 2))
    elif family == "mod4":
        report = check_mod4_base(_pick(args.nmax, 500))
    elif family == "mod4-general":
        report = check_mod4_general(_pick(m, 2), _pick(args.jmax, 200))
    elif family == "mod3":
        report = check_mod3(_pick(m, 4), _pick(args.jmax, 100))
    elif family == "partial-sum":
        report = check_partial_sum_mod3(_pick(m, 4), _pick(args.jmax, 100))
    elif family == "ob-parity":
        report = check_ob_parity(_pick(args.nmax, 1000))
    elif family == "plateau":
        report = check_plateau_identity(_pick(args.vmax, 100), _pick(m, 2))
    elif family == "scaling":
        modulus = _pick(m, 2)
        report = check_scaling_identity(modulus, _pick(args.jmax, 12), _pick(args.vmax, modulus))
    elif family == "special-cases":
        report = check_special_cases(_pick(args.jmax, 200))
    elif family == "roundtrip":
        modulus = _pick(m, 2)
        n_max = _pick(args.nmax, 20)
        reports = [roundtrip_check(n, modulus) for n in range(n_max + 1)]
        report = merge_reports("roundtrip", {"m": modulus, "n_max": n_max}, reports)
    elif family == "oracle":
        report = oracle_agreement(_pick(m, 2), _pick(args.nmax, 20), args.side)
    else:
        report = _funceq_report(_pick(m, 2), _pick(args.order, 256))
    for line in report.lines():
        print(line)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semipell",
        description="Count, enumerate and verify semi-m-Pell compositions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="print sp(n, m)")
    p.add_argument("n", type=_nonneg)
    p.add_argument("m", type=_modulus)
    p.add_argument("--cache", metavar="PATH", help="read and update a persistent count cache")
    p.add_argument("--json", action="store_true", help="emit one JSON record instead of text")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="tab-separated counts, rows per modulus")
    p.add_argument("n_max", type=_nonneg)
    p.add_argument("m_min", type=_modulus)
    p.add_argument("m_max", type=_modulus)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("enum", help="list all objects of one weight")
    p.add_argument("n", type=_nonneg)
    p.add_argument("m", type=_modulus)
    p.add_argument("--side", choices=("sp", "oc"), default="sp")
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("map", help="apply the bijection to one object")
    p.add_argument("parts", help="comma-separated parts, or runs like 1^3,2 with from-oc")
    p.add_argument("m", type=_modulus)
    p.add_argument("--direction", choices=("to-oc", "from-oc"), default="to-oc")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("series", help="coefficients of the counting series")
    p.add_argument("m", type=_modulus)
    p.add_argument("order", type=_nonneg)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("check", help="run one verification sweep")
    p.add_argument("family", choices=CHECK_FAMILIES)
    p.add_argument("--m", type=_modulus, default=None)
    p.add_argument("--nmax", type=_nonneg, default=None)
    p.add_argument("--jmax", type=_nonneg, default=None)
    p.add_argument("--vmax", type=_nonneg, default=None)
    p.add_argument("--order", type=_nonneg, default=None)
    p.add_argument("--side", choices=("sp", "oc", "both"), default="both",
                   help="which oracle comparison to run (oracle family only)")
    p.set_defaults(func=cmd_check)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except SearchBoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
