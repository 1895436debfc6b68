"""Command-line front end.

    dyndict run SCRIPT [--engine dawg|ac|oracle|all] [--stats]
    dyndict match --dict FILE --text FILE [--engine ...] [--stats]
    dyndict bench --family lemma2 [--sigma N --m N --rounds N]
    dyndict bench --family theorem3 [--x N --k N]

Exit codes: 0 success, 1 engines diverged, 2 usage or script error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bench import bench_lemma2, bench_theorem3
from .errors import DyndictError, ParseError
from .session import ENGINES, Session, parse_script


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dyndict", description="Dynamic dictionary matching")
    parser.add_argument("--stats", action="store_true", help="print cumulative counters at the end")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--engine", choices=ENGINES, default="all")
        p.add_argument("--nma", choices=("linkcut", "naive"), default="linkcut")
        p.add_argument("--stats", action="store_true", default=argparse.SUPPRESS)

    run = sub.add_parser("run", help="run an update/match script")
    run.add_argument("script", type=Path)
    common(run)

    match = sub.add_parser("match", help="match a text file against a dictionary file")
    match.add_argument("--dict", dest="dict_file", type=Path, required=True)
    match.add_argument("--text", dest="text_file", type=Path, required=True)
    common(match)

    bench = sub.add_parser("bench", help="run an adversarial update family")
    bench.add_argument("--family", choices=("lemma2", "theorem3"), required=True)
    bench.add_argument("--sigma", type=int, default=5)
    bench.add_argument("--m", type=int, default=6)
    bench.add_argument("--rounds", type=int, default=3)
    bench.add_argument("--x", type=int, default=3)
    bench.add_argument("--k", type=int, default=3)
    bench.add_argument("--stats", action="store_true", default=argparse.SUPPRESS)
    return parser


def _read_dictionary(path: Path) -> list[bytes]:
    lines = path.read_bytes().split(b"\n")
    return [line for line in lines if line]


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout.buffer
    try:
        if args.command == "bench":
            if args.family == "lemma2":
                res = bench_lemma2(args.sigma, args.m, args.rounds)
            else:
                res = bench_theorem3(args.x, args.k)
            out.write(res.to_tsv().encode() + b"\n")
            return 0

        session = Session(args.engine, args.nma, out)
        if args.command == "run":
            code = session.run(parse_script(args.script.read_bytes()), args.script.parent)
        else:
            for p in _read_dictionary(args.dict_file):
                session.insert(p)
            session.emit_hits(session.match(args.text_file.read_bytes()))
            code = 1 if session.divergences else 0
    except ParseError as exc:
        print(f"dyndict: {exc}", file=sys.stderr)
        return 2
    except (DyndictError, OSError) as exc:
        print(f"dyndict: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    if getattr(args, "stats", False):
        out.write(b"stats\ttotal\t" + session.total_stats.format().encode() + b"\n")
    for d in session.divergences:
        print(f"dyndict: divergence at {d}", file=sys.stderr)
    out.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
