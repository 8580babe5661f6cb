"""Recompute every reference table and write text and JSON copies.

    python scripts/reproduce_tables.py --out results/

4C takes a couple of minutes; set NICHOLS_CACHE_DIR to reuse snapshots.
"""

import argparse
import json
import logging
import sys
from pathlib import Path

from nichols.cli import load_algebra
from nichols.tables import TABLES, AlgebraSource, all_tables


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--out", default="results")
    p.add_argument("--which", default=",".join(TABLES))
    p.add_argument("--allow-large", action="store_true")
    args = p.parse_args(argv)
    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s")

    src = AlgebraSource(loader=lambda name: load_algebra(name, args.allow_large), allow_large=args.allow_large)
    tables = all_tables(src, args.which.split(","))
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    text = "\n\n".join(t.render() for t in tables)
    (out / "tables.txt").write_text(text + "\n", encoding="utf-8")
    (out / "tables.json").write_text(json.dumps([t.to_json() for t in tables], indent=2, default=sorted) + "\n",
                                     encoding="utf-8")
    print(text)
    return 0 if all(t.all_match for t in tables) else 1


if __name__ == "__main__":
    sys.exit(main())
