"""Time fresh builds of the desk-scale catalog algebras.

    python scripts/benchmark_builds.py --names 3A,4A,4B --repeat 3
"""

import argparse
import json
import statistics
import sys
import time

from nichols.catalog import ALGEBRAS, DESK, build_named


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--names", default=",".join(DESK))
    p.add_argument("--repeat", type=int, default=1)
    p.add_argument("--json", action="store_true")
    args = p.parse_args(argv)

    rows = []
    for name in args.names.split(","):
        times = []
        for _ in range(args.repeat):
            t0 = time.perf_counter()
            A = build_named(name)
            times.append(time.perf_counter() - t0)
        rows.append({"algebra": name, "dim": A.dim, "expected": ALGEBRAS[name].dim,
                     "median_s": round(statistics.median(times), 3), "runs": args.repeat})
        if not args.json:
            r = rows[-1]
            print(f"{name:4} dim={r['dim']:6} expected={r['expected']:6} median={r['median_s']:.3f}s", flush=True)
    if args.json:
        print(json.dumps(rows, indent=2))
    return 0 if all(r["dim"] == r["expected"] for r in rows) else 1


if __name__ == "__main__":
    sys.exit(main())
