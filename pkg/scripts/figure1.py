"""Print the arm/leg tables of h and f at one perimeter side by side, paired by duality."""

import argparse

from fixedperim import core


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--a", type=int, default=2)
    p.add_argument("--n", type=int, default=9)
    args = p.parse_args()

    h = core.refinement_table("H", args.d, args.a, args.n)
    print(f"{'h: alpha':>9} {'lambda':>6}   {'f: alpha':>9} {'lambda':>6}   count")
    for cell in h.cells:
        ap, lp = core.duality_map(args.d, args.a, cell.alpha, cell.lambda_)
        assert core.f_refined(args.d, args.a, ap, lp) == cell.count
        print(f"{cell.alpha:>9} {cell.lambda_:>6}   {ap:>9} {lp:>6}   {cell.count}")
    print(f"total {h.total} = {core.f_total(args.d, args.a, args.n)}")


if __name__ == "__main__":
    main()
