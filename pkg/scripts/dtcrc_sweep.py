"""Sweep the DT crepant resolution check and write one JSON record per leg triple.

    python scripts/dtcrc_sweep.py --n 2 --s 1 --max-size 2 --window=-4,4 --dv 4 --out sweep.json
"""
import argparse
import json
import time
from fractions import Fraction

from orbivertex.cli import dtcrc_jobs, parse_window
from orbivertex.correspondence import dtcrc_check
from orbivertex.weights import EquivWeights


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--n", type=int, default=2)
    ap.add_argument("--s", default="1")
    ap.add_argument("--max-size", type=int, default=2)
    ap.add_argument("--window", default="-4,4")
    ap.add_argument("--dv", type=int, default=4)
    ap.add_argument("--out")
    a = ap.parse_args()
    w = EquivWeights(Fraction(a.s), a.n)
    window = parse_window(a.window)
    records = []
    for rp, rm, lam, *_ in dtcrc_jobs(a.n, w.s, a.max_size, window, a.dv):
        t = time.time()
        rep = dtcrc_check(rp, rm, lam, w, window, a.dv)
        doc = rep.to_json()
        doc["seconds"] = round(time.time() - t, 2)
        records.append(doc)
        print(f"{'ok  ' if rep.passed else 'FAIL'} {json.dumps(rep.legs.to_json())} mismatches={len(rep.mismatches)}",
              flush=True)
    bad = sum(not r["passed"] for r in records)
    print(f"{len(records) - bad}/{len(records)} passed")
    if a.out:
        with open(a.out, "w") as fh:
            json.dump(records, fh, indent=1)


if __name__ == "__main__":
    main()
