"""Scan l_d^(a)(n) <= l_d^(a+1)(n) over a range of d and write one JSON line per (d, a)."""

import argparse
import json

from fixedperim.analysis import scan_a_shift_conjecture


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--d-max", type=int, default=12)
    p.add_argument("--n-max", type=int, default=300)
    args = p.parse_args()

    for d in range(1, args.d_max + 1):
        for a in range(1, (d + 1) // 2 + 1):
            rep = scan_a_shift_conjecture(d, a, args.n_max)
            assert rep.verify()
            row = rep.to_dict()
            row["count"] = len(rep.exceptions)
            # a run of exceptions reaching n_max suggests the inequality fails for all large n
            row["open_ended"] = bool(rep.exceptions) and rep.exceptions[-1] == args.n_max
            row["exceptions"] = row["exceptions"][:20]
            print(json.dumps(row))


if __name__ == "__main__":
    main()
