"""Certify non-containment for loci just below d_max and write a CSV table."""
import argparse
import sys
from collections import Counter

from bnloci.sweeps import nonmax_sweep


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-g", type=int, default=200)
    ap.add_argument("--csv", default="-", help="output path, '-' for stdout")
    args = ap.parse_args()

    rep = nonmax_sweep(args.max_g)
    text = rep.to_csv()
    if args.csv == "-":
        sys.stdout.write(text)
    else:
        with open(args.csv, "w") as fh:
            fh.write(text)

    per_rank = Counter((row["r"], row["rp"]) for row in rep.rows)
    print(f"{len(rep.rows)} rows, verdict {rep.summary['verdict']}", file=sys.stderr)
    for (r, rp), n in sorted(per_rank.items())[:10]:
        print(f"  r={r} r'={rp}: {n}", file=sys.stderr)


if __name__ == "__main__":
    main()
