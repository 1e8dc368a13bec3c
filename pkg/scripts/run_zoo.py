"""Run every check on the builtin zoo and print one status line per polytope.

Usage: python scripts/run_zoo.py [--out DIR] [--checks all]
Writes one report per polytope when --out is given.
"""
import argparse
import sys
import time
from pathlib import Path

from edgesimple.generators import builtin_zoo
from edgesimple.jsonio import dump_json
from edgesimple.report import analyze, parse_checks


def slug(label: str) -> str:
    return "".join(ch if ch.isalnum() else "_" for ch in label).strip("_")


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", type=Path)
    ap.add_argument("--checks", default="all")
    args = ap.parse_args()
    checks = parse_checks(args.checks)
    if args.out:
        args.out.mkdir(parents=True, exist_ok=True)
    failures = 0
    for p in builtin_zoo():
        t0 = time.perf_counter()
        rep = analyze(p, checks)
        counts = {}
        for e in rep.body["checks"]:
            key = e["status"].split("(")[0]
            counts[key] = counts.get(key, 0) + 1
        failures += len(rep.failed)
        line = f"{p.label:28s} h={tuple(rep.body['h'])!s:22s} {counts} {time.perf_counter() - t0:.2f}s"
        if rep.failed:
            line += f"  FAILED: {', '.join(rep.failed)}"
        print(line)
        if args.out:
            dump_json(rep.to_json(), args.out / f"{slug(p.label)}.json")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
