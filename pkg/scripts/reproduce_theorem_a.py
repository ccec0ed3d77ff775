"""Sweep every expected maximal locus in a genus range and report which
(source, target) pairs fail to certify.

    python3 scripts/reproduce_theorem_a.py --max-g 100 --out results/theorem_a.json
"""
import argparse
import time
from pathlib import Path

from bnloci.sweeps import theorem_a_sweep


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--min-g", type=int, default=3)
    ap.add_argument("--max-g", type=int, default=100)
    ap.add_argument("--out", type=Path)
    args = ap.parse_args()

    start = time.perf_counter()
    rep = theorem_a_sweep(args.min_g, args.max_g)
    elapsed = time.perf_counter() - start
    s = rep.summary

    print(f"genus {args.min_g}..{args.max_g}: {s['loci']} loci, {s['rows']} pairs, {elapsed:.2f}s")
    print(f"verdicts: {s['verdict_counts']}")
    for q in s["pair_exceptions"]:
        g, r, d, rp, dp = q
        print(f"  fails: ({g},{r},{d}) -> ({rp},{dp})")
    for f in s["source_hypothesis_failures"]:
        print(f"  source hypotheses fail at {tuple(f['locus'])}: {f['note']}")
    print(f"verdict: {s['verdict']}")

    if args.out:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(rep.to_json())


if __name__ == "__main__":
    main()
