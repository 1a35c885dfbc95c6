"""Replay the classification claims over a catalog and save the report.

    python scripts/replay_catalog.py --max-order 200 --out report.json
"""
import argparse
import os
import sys

from isgraph.theorems import CatalogConfig, build_catalog, run_verification


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-order", type=int, default=200)
    ap.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    ap.add_argument("--out", default="catalog_report.json")
    args = ap.parse_args()
    cat = build_catalog(CatalogConfig(max_order=args.max_order))
    rep = run_verification(cat, jobs=args.jobs)
    with open(args.out, "w") as fh:
        fh.write(rep.dumps())
    sys.stdout.write(rep.to_text())
    return 0


if __name__ == "__main__":
    sys.exit(main())
