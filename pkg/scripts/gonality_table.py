"""Print the genera where a fixed-gonality general curve may carry an
unexpected linear series, for both gonality modes."""
import argparse

from bnloci.sweeps import gonality_scan


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-g", type=int, default=200)
    args = ap.parse_args()

    for mode in ("max_gonality", "submax_gonality"):
        rep = gonality_scan(args.max_g, mode)
        genera = rep.summary["exceptional_genera"]
        print(f"{mode:>16}: {genera}")
        for row in rep.rows:
            if row["g"] in genera and row["verdict"] == "carried":
                print(f"{'':>18}g={row['g']} k={row['d']} -> g^{row['rp']}_{row['dp']}  rho_k={row['rho_k']}")


if __name__ == "__main__":
    main()
