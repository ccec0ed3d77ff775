"""Dump the vertices of the decomposition search region for one lattice,
plus the integer candidates found inside it."""
import argparse

from bnloci.picard_lattice import PicardLatticeParams, check_rigidity, decomposition_candidates, region_vertices


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("g", type=int)
    ap.add_argument("r", type=int)
    ap.add_argument("d", type=int)
    args = ap.parse_args()

    p = PicardLatticeParams(args.g, args.r, args.d)
    print(region_vertices(p).to_csv(), end="")
    for c in decomposition_candidates(p):
        print(f"cand,{c.x},{c.y}")
    print(f"# {check_rigidity(p).status.value}")


if __name__ == "__main__":
    main()
