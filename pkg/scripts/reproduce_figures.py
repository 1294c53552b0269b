"""Write the coefficient-ratio tables (figure data) for s = 4 and s = 5 as CSV."""

import argparse
from pathlib import Path

from poincare.compare import limit_check, ratio_table


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path("figures"))
    ap.add_argument("--degrees", type=int, nargs="+", default=[4, 5])
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for s in args.degrees:
        tab = ratio_table(s)
        path = args.out / f"ratio_s{s}.csv"
        path.write_text(tab.to_csv())
        print(f"{path}: theta from {tab.thetas[0]:.6f} to {tab.thetas[-1]:.6f}")
        print("  last row:", " ".join(f"{v:.4g}" for v in tab.values[-1]))
        eps = [1e-2, 1e-4, 1e-6]
        for i in range(s):
            print(f"  i={i} ratio at pi/(s+1) - eps:", " ".join(f"{v:.3e}" for v in limit_check(s, i, eps)))


if __name__ == "__main__":
    main()
