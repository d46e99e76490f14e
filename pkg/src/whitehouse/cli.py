"""Command line entry point: ``whitehouse verify|tables|dump``."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import verify as V


def parse_range(text: str) -> list[int]:
    """'2..5', '4', or '2,3,5'."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..", 1)
            lo, hi = int(lo), int(hi)
            if lo > hi:
                raise argparse.ArgumentTypeError(f"empty range {part}")
            out.extend(range(lo, hi + 1))
        elif part:
            out.append(int(part))
    if not out or min(out) < 1:
        raise argparse.ArgumentTypeError(f"bad n range {text!r}")
    return sorted(set(out))


def parse_checks(text: str) -> list[str]:
    if text == "all":
        return list(V.CHECKS)
    names = [c.strip() for c in text.split(",") if c.strip()]
    bad = [c for c in names if c not in V.FUNCS]
    if bad:
        raise argparse.ArgumentTypeError(f"unknown checks {bad}; choose from {', '.join(V.CHECKS)}")
    return names


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="whitehouse",
                                description="Exact verification of Eulerian and lifted Eulerian representations.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the verification suite")
    v.add_argument("--checks", type=parse_checks, default=list(V.CHECKS),
                   help=f"comma-separated list or 'all' ({', '.join(V.CHECKS)})")
    v.add_argument("--n", type=parse_range, default=list(V.DEFAULT_RANGE),
                   help="n values, e.g. 2..5 (default) or 3,4")
    v.add_argument("--long", action="store_true", help=f"allow n >= {V.LONG_N}")
    v.add_argument("--out", type=Path, help="directory for the report file")
    v.add_argument("--cache", help="cache directory (default: $WHITEHOUSE_CACHE_DIR, else none)")
    v.add_argument("--format", choices=["json", "csv", "text"], default="json")
    v.add_argument("--jobs", type=int, default=1, help="run distinct n in parallel processes")

    t = sub.add_parser("tables", help="CSV character table of S_n")
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--out", type=Path)

    d = sub.add_parser("dump", help="JSON-lines bases and characters of U^n, M_n or V^n")
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--algebra", choices=["U", "M", "V"], default="U")
    d.add_argument("--out", type=Path)
    return p


def _emit(text: str, out: Path | None, name: str):
    if out is None:
        sys.stdout.write(text)
        return None
    out.mkdir(parents=True, exist_ok=True)
    path = out / name
    path.write_text(text)
    return path


def cmd_verify(args) -> int:
    code, reports = V.run_all(args.n, args.checks, long=args.long, cache_dir=args.cache,
                              jobs=args.jobs)
    fmt = {"json": (V.format_jsonl, "report.jsonl"),
           "csv": (V.format_csv, "report.csv"),
           "text": (V.format_summary, "report.txt")}[args.format]
    text = fmt[0](reports)
    if args.out is not None:
        _emit(text, args.out, fmt[1])
        sys.stdout.write(V.format_summary(reports))
    else:
        sys.stdout.write(text)
    return code


def cmd_tables(args) -> int:
    from .characters import table_csv
    if args.n < 1:
        raise SystemExit("n must be positive")
    _emit(table_csv(args.n), args.out, f"characters_S{args.n}.csv")
    return 0


def cmd_dump(args) -> int:
    from . import ot_algebra, whitehouse_map
    if args.algebra == "V":
        if args.n < 2:
            raise SystemExit("V needs n >= 2")
        text = whitehouse_map.dumps(args.n)
    else:
        text = ot_algebra.dumps(args.n, args.algebra)
    _emit(text + "\n", args.out, f"{args.algebra}{args.n}.jsonl")
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    return {"verify": cmd_verify, "tables": cmd_tables, "dump": cmd_dump}[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
