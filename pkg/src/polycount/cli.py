"""Command-line front end.

Subcommands: count, table, extend, and verify {strip, diagonal, corollary,
weights, quadrants, identities}.  Exit codes: 0 all checks pass, 1 a check
failed, 2 usage error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .cache import load_entry, resolve_cache_dir, save_entry
from .errors import ParameterError, ResourceLimitError
from .exact import binom
from .lattice import (
    DEFAULT_STATE_CAP,
    LatticeSpec,
    brute_force_count,
    count_configurations,
    count_polynomial,
)
from .recurrences import (
    DiagonalSeed,
    extend_diagonal,
    seed_from_enumeration,
    verify_diagonal,
    verify_diagonal_corollary,
    verify_strip,
    window_residuals,
)
from .reports import Report
from .weights import (
    RhsModel,
    accumulate_lhs,
    accumulate_rhs,
    build_weight_grid,
    rhs_closed_form,
    verify_quadrant_lemmas,
    verify_rhs_column_sums,
)
from . import identities

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _parse_range(text: str) -> list[int]:
    """Inclusive 'a..b' range, or a single integer."""
    if ".." in text:
        lo_s, hi_s = text.split("..", 1)
        lo, hi = int(lo_s), int(hi_s)
        if hi < lo:
            raise argparse.ArgumentTypeError(f"empty range {text}")
        return list(range(lo, hi + 1))
    return [int(text)]


def _emit_report(report: Report, args, command: str, started: float) -> int:
    doc = {
        "command": command,
        "params": {
            k: str(v)
            for k, v in sorted(vars(args).items())
            if k not in ("func", "format") and v is not None
        },
        **report.to_dict(),
        "wall_time": round(time.time() - started, 6),
    }
    if args.format == "json":
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for c in report.checks:
            d = c.to_dict()
            params = " ".join(f"{k}={v}" for k, v in d["params"].items())
            line = f"{d['status']:4s} {d['name']} {params}"
            if d["status"] == "FAIL":
                line += f" expected={d['expected']} actual={d['actual']}"
            elif d["actual"] not in ("ok", "") and len(d["actual"]) <= 48:
                line += f" value={d['actual']}"
            print(line)
        summ = report.summary()
        print(
            f"# {summ['passed']} passed, {summ['failed']} failed, "
            f"{summ['skipped']} skipped"
        )
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def cmd_count(args) -> int:
    spec = LatticeSpec(n=args.n, m=args.m, k=args.k)
    if args.all_s:
        table = count_polynomial(spec, state_cap=args.state_cap)
        counts = table.counts
        if args.format == "json":
            print(json.dumps({
                "k": spec.k, "n": spec.n, "m": spec.m,
                "counts": [str(c) for c in counts],
            }, sort_keys=True))
        elif args.format == "csv":
            print("n,m,s,count")
            for sv, cv in enumerate(counts):
                print(f"{spec.n},{spec.m},{sv},{cv}")
        else:
            print(" ".join(str(c) for c in counts))
        return EXIT_OK
    if args.s is None:
        raise ParameterError("one of --s or --all-s is required")
    if args.method == "brute":
        value = brute_force_count(spec, args.s)
    else:
        value = count_configurations(spec, args.s, state_cap=args.state_cap)
    if args.format == "json":
        print(json.dumps({
            "k": spec.k, "n": spec.n, "m": spec.m, "s": args.s, "count": str(value),
        }, sort_keys=True))
    elif args.format == "csv":
        print("n,m,s,count")
        print(f"{spec.n},{spec.m},{args.s},{value}")
    else:
        print(value)
    return EXIT_OK


def cmd_table(args) -> int:
    cache_dir = resolve_cache_dir(args.cache_dir)
    entries = []
    for n in range(1, args.n_max + 1):
        for m in range(1, args.m_max + 1):
            table = count_polynomial(LatticeSpec(n=n, m=m, k=args.k),
                                     state_cap=args.state_cap)
            save_entry(cache_dir, table)
            entries.append(table)
    if args.format == "csv":
        lines = ["n,m,s,count"]
        for table in entries:
            for sv, cv in enumerate(table.counts):
                lines.append(f"{table.spec.n},{table.spec.m},{sv},{cv}")
        payload = "\n".join(lines) + "\n"
    else:
        from .cache import entry_payload

        payload = json.dumps([entry_payload(t) for t in entries], sort_keys=True,
                             indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    return EXIT_OK


def _verify_strip(args, report_args) -> Report:
    merged = Report(title="strip recurrence")
    for n in args.n:
        for sv in args.s:
            sub = verify_strip(args.k, n, sv, args.m, state_cap=args.state_cap)
            merged.checks.extend(sub.checks)
    return merged


def _diag_points(args) -> list[tuple[int, int]]:
    ms = args.m if args.m is not None else args.n
    return [(n, m) for n in args.n for m in ms]


def cmd_verify(args) -> int:
    started = time.time()
    if args.target == "strip":
        report = _verify_strip(args, args)
    elif args.target == "diagonal":
        report = Report(title="diagonal recurrence")
        for sv in args.s:
            sub = verify_diagonal(args.k, sv, _diag_points(args),
                                  state_cap=args.state_cap,
                                  enforce_range=not args.unsafe_range)
            report.checks.extend(sub.checks)
    elif args.target == "corollary":
        report = Report(title="diagonal corollary")
        for sv in args.s:
            sub = verify_diagonal_corollary(args.k, sv, _diag_points(args),
                                            state_cap=args.state_cap,
                                            enforce_range=not args.unsafe_range)
            report.checks.extend(sub.checks)
    elif args.target == "weights":
        report = Report(title="weight grid")
        for sv in args.s:
            grid = build_weight_grid(sv)
            cells = accumulate_lhs(grid)
            bad = []
            for ii in range(2 * sv + 1):
                for jj in range(2 * sv + 1):
                    want = 2 * (-1) ** ii * binom(2 * sv, ii) if ii == jj else 0
                    if cells[ii][jj] != want:
                        bad.append((ii, jj, cells[ii][jj], want))
            report.record("cancellation", {"s": sv}, "diagonal 2(-1)^i C(2s,i), zero elsewhere",
                          "ok" if not bad else str(bad[:4]), passed=not bad)
            model = RhsModel(lam=args.lam, eta=args.eta, n=args.anchor_n)
            total = accumulate_rhs(grid, model)
            report.record(
                "rhs-total",
                {"s": sv, "lambda": str(args.lam), "eta": str(args.eta),
                 "anchor_n": args.anchor_n},
                str(rhs_closed_form(sv, args.lam)),
                str(total),
            )
            sub = verify_rhs_column_sums(sv)
            report.checks.extend(sub.checks)
    elif args.target == "quadrants":
        report = Report(title="quadrant lemmas")
        for sv in args.s:
            sub = verify_quadrant_lemmas(sv)
            report.checks.extend(sub.checks)
    elif args.target == "identities":
        report = identities.run_registry(args.filter)
    else:  # pragma: no cover - argparse restricts choices
        raise ParameterError(f"unknown verify target {args.target}")
    return _emit_report(report, args, f"verify {args.target}", started)


def cmd_extend(args) -> int:
    cache_dir = resolve_cache_dir(args.cache_dir)
    k, s = args.k, args.s
    w = 2 * s
    seed_counts = []
    for off in range(w - 1, -1, -1):
        n, m = args.anchor_n - off, args.anchor_m - off
        table = load_entry(cache_dir, k, n, m)
        if table is not None:
            seed_counts.append(table.count(s))
        else:
            seed_counts.append(
                count_configurations(LatticeSpec(n=n, m=m, k=k), s,
                                     state_cap=args.state_cap)
            )
    seed = DiagonalSeed(k=k, s=s, anchor_n=args.anchor_n, anchor_m=args.anchor_m,
                        counts=tuple(seed_counts))
    extended = extend_diagonal(seed, args.steps)
    residuals = window_residuals(seed, extended)
    crosschecked = []
    if not args.no_crosscheck:
        for idx, value in enumerate(extended, start=1):
            n, m = args.anchor_n + idx, args.anchor_m + idx
            try:
                direct = count_configurations(LatticeSpec(n=n, m=m, k=k), s,
                                              state_cap=args.state_cap)
            except ResourceLimitError:
                break  # beyond direct enumeration's reach
            if direct != value:
                print(
                    f"extension mismatch at ({n},{m}): recurrence {value} "
                    f"!= enumeration {direct}",
                    file=sys.stderr,
                )
                return EXIT_CHECK_FAILED
            crosschecked.append(idx)
    if any(residuals):
        print(f"nonzero recurrence residuals: {residuals}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    if args.format == "json":
        print(json.dumps({
            "k": k, "s": s, "anchor_n": args.anchor_n, "anchor_m": args.anchor_m,
            "extended": [str(v) for v in extended],
            "crosschecked_steps": crosschecked,
            "residuals": residuals,
        }, sort_keys=True))
    else:
        for idx, value in enumerate(extended, start=1):
            n, m = args.anchor_n + idx, args.anchor_m + idx
            print(f"a({n},{m}) = {value}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polycount",
        description="Exact rod-covering counts on open rectangular lattices, "
                    "with recurrence and identity verification.",
    )
    parser.add_argument("--state-cap", type=int, default=DEFAULT_STATE_CAP,
                        help="cap on the k**width transfer state space")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count configurations of s rods")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int)
    p.add_argument("--all-s", action="store_true")
    p.add_argument("--method", choices=("transfer", "brute"), default="transfer")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="tabulate counts and populate the cache")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--format", choices=("json", "csv"), default="csv")
    p.add_argument("--cache-dir")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="verify recurrences, weights, identities")
    p.add_argument("target", choices=(
        "strip", "diagonal", "corollary", "weights", "quadrants", "identities"))
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--s", type=_parse_range, default=[1])
    p.add_argument("--n", type=_parse_range, default=None)
    p.add_argument("--m", type=_parse_range, default=None)
    p.add_argument("--lambda", dest="lam", type=Fraction, default=Fraction(2))
    p.add_argument("--eta", type=Fraction, default=Fraction(-1))
    p.add_argument("--anchor-n", type=int, default=30)
    p.add_argument("--filter", default="*")
    p.add_argument("--unsafe-range", action="store_true",
                   help="report (without asserting) outside the proven range")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("extend", help="extend counts along a diagonal")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--anchor-n", type=int, required=True)
    p.add_argument("--anchor-m", type=int, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--no-crosscheck", action="store_true")
    p.add_argument("--cache-dir")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_extend)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        if args.target in ("strip", "diagonal", "corollary") and args.n is None:
            parser.error(f"verify {args.target} requires --n")
        if args.target == "strip" and args.m is None:
            parser.error("verify strip requires --m")
    try:
        return args.func(args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
