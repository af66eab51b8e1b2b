"""Command-line front end.

Exit codes: 0 for success (including query answers like ``false``),
1 when a verification check FAILs, 2 for usage or I/O errors.
Query subcommands print plain decimal values one per line; ``verify``
and ``report`` emit the verdict report format.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import cdset, suite
from .degrees import DegreeEngine
from .groups import GroupTag
from .verdict import Status, render_report

CACHE_ENV = "CHARDEG_CACHE_DIR"
DEFAULT_MAX_N = 80


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chardeg",
        description="Exact character degrees of S_n, A_n and their double "
                    "covers, with verification checks over them.")
    parser.add_argument("--cache-dir", default=os.environ.get(CACHE_ENV) or None,
                        help=f"degree-set cache directory (default ${CACHE_ENV})")
    parser.add_argument("--no-cache", action="store_true",
                        help="ignore the cache directory entirely")
    parser.add_argument("--workers", type=int, default=os.cpu_count() or 1,
                        help="worker processes for degree scans")
    parser.add_argument("--max-n", type=int, default=DEFAULT_MAX_N,
                        help="refuse degrees above this cap (runaway guard)")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_group_n(p, covers=True):
        kinds = ["S", "A"] + (["2S", "2A"] if covers else [])
        p.add_argument("--group", required=True, choices=kinds)
        p.add_argument("--n", required=True, type=int)

    p = sub.add_parser("compute", help="compute a degree set and write it as CDSET")
    add_group_n(p)
    p.add_argument("--out", required=True)
    p.add_argument("--mult", action="store_true", help="include multiplicities")

    p = sub.add_parser("mindeg", help="the k smallest nontrivial degrees")
    add_group_n(p)
    p.add_argument("--k", required=True, type=int)

    p = sub.add_parser("member", help="is a value a character degree? prints true/false")
    add_group_n(p)
    p.add_argument("--value", required=True, type=int)

    p = sub.add_parser("quotient-set", help="degrees of A_n divisible by an index, divided by it")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--index", required=True, type=int)

    p = sub.add_parser("spin", help="faithful degrees of a double cover")
    p.add_argument("--group", required=True, choices=["2S", "2A"])
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--mult", action="store_true", help="print 'degree count' per line")

    p = sub.add_parser("verify", help="run one named check and report")
    p.add_argument("--check", required=True, choices=sorted(suite.CHECKS))
    p.add_argument("--n-max", type=int, default=40, help="range cap for the check")
    p.add_argument("--out", help="write the report here instead of stdout")

    p = sub.add_parser("report", help="run every check and report")
    p.add_argument("--n-cap", type=int, default=40)
    p.add_argument("--out", help="write the report here instead of stdout")

    return parser


def _engine(args) -> DegreeEngine:
    cache_dir = None if args.no_cache else args.cache_dir
    return DegreeEngine(cache_dir=cache_dir, workers=max(1, args.workers))


def _check_cap(args, n: int) -> None:
    if n > args.max_n:
        raise UsageError(f"n={n} exceeds the cap {args.max_n} (raise with --max-n)")


class UsageError(Exception):
    pass


def _emit_report(verdicts, out: str | None) -> int:
    text = render_report(verdicts)
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    failed = any(v.status is Status.FAIL for v in verdicts)
    return 1 if failed else 0


def _dispatch(args) -> int:
    if args.subcommand in ("compute", "mindeg", "member", "spin"):
        _check_cap(args, args.n)
        tag = GroupTag.parse(args.group, args.n)
        engine = _engine(args)
        if args.subcommand == "compute":
            if tag.is_cover:
                ds = engine.faithful_degree_set(tag)
                if not args.mult:
                    ds = ds.without_multiplicity()
            else:
                ds = engine.degree_set(tag, with_multiplicity=args.mult)
            cdset.write(ds, args.out)
            return 0
        if args.subcommand == "mindeg":
            for d in engine.minimal_degrees(tag, args.k).entries:
                print(d)
            return 0
        if args.subcommand == "member":
            print("true" if engine.is_degree(tag, args.value) else "false")
            return 0
        ds = engine.faithful_degree_set(tag)
        for d, m in zip(ds.degrees, ds.multiplicities):
            print(f"{d} {m}" if args.mult else d)
        return 0

    if args.subcommand == "quotient-set":
        _check_cap(args, args.n)
        for v in _engine(args).quotient_set(args.n, args.index).values:
            print(v)
        return 0

    if args.subcommand == "verify":
        _check_cap(args, args.n_max)
        verdict = suite.run_check(args.check, _engine(args), args.n_max)
        return _emit_report([verdict], args.out)

    if args.subcommand == "report":
        _check_cap(args, args.n_cap)
        return _emit_report(suite.run_all(_engine(args), args.n_cap), args.out)

    raise AssertionError(f"unhandled subcommand {args.subcommand}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except (UsageError, ValueError, KeyError) as exc:
        print(f"chardeg: {exc}", file=sys.stderr)
        return 2
    except cdset.CdsetError as exc:
        print(f"chardeg: corrupt degree cache: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"chardeg: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
