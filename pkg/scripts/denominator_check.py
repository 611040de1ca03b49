"""Compare q^a/(1-(q+q^d)) and q^a/(1-(q+q^(d+1))) with brute-force counts."""

import argparse

from fixedperim.enumeration import oracle_count
from fixedperim.series import expand_h_univariate, expand_h_univariate_printed


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--d-max", type=int, default=4)
    p.add_argument("--n-max", type=int, default=12)
    args = p.parse_args()

    for d in range(1, args.d_max + 1):
        for a in range(1, d + 2):
            good = expand_h_univariate(d, a, args.n_max)
            printed = expand_h_univariate_printed(d, a, args.n_max)
            truth = [oracle_count("H", d, a, n) for n in range(1, args.n_max + 1)]
            ok = all(good.coefficient(n) == t for n, t in enumerate(truth, 1))
            bad = [n for n, t in enumerate(truth, 1) if printed.coefficient(n) != t]
            print(f"d={d} a={a}  q+q^(d+1): {'ok' if ok else 'MISMATCH'}  "
                  f"q+q^d first mismatch: {bad[0] if bad else '-'}")


if __name__ == "__main__":
    main()
