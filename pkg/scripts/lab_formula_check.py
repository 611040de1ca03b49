"""Where does the printed a-or-b binomial expression match the true count?"""

import argparse

from fixedperim.analysis import lab_formula_diagnostic


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--d-max", type=int, default=6)
    p.add_argument("--n-max", type=int, default=60)
    args = p.parse_args()

    longest = 0
    for d in range(1, args.d_max + 1):
        for a in range(1, d + 3):
            for b in range(1, d + 3):
                diag = lab_formula_diagnostic(d, a, b, args.n_max)
                run = 0
                while run < len(diag.matches) and diag.matches[run] == run + 1:
                    run += 1
                longest = max(longest, run)
                later = [n for n in diag.matches if n > run]
                print(f"d={d} a={a} b={b}: matches n=1..{run}"
                      + (f", also {later[:6]}" if later else "")
                      + ("  (agrees everywhere)" if diag.agrees_everywhere else ""))
    print(f"longest initial agreement: n <= {longest}")


if __name__ == "__main__":
    main()
