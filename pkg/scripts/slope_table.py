"""Slope table for the odd and even spin moduli spaces.

For each genus in the requested range, prints the exact lambda slope of
the normalized effective combination on both spin spaces, the solved
scalar in front of the Brill-Noether pullback, whether the Brill-Noether
class applies (g+1 composite), and the resulting general-type verdict
against the slope-13 threshold of the canonical class.

Usage:
    python scripts/slope_table.py [--gmin 4] [--gmax 30] [--json]
"""

import argparse
import json

from thetachar.picard import bn_applicable, general_type_test, slope_combination


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--gmin", type=int, default=4)
    parser.add_argument("--gmax", type=int, default=30)
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args()
    if not 4 <= args.gmin <= args.gmax:
        parser.error("need 4 <= gmin <= gmax")

    rows = []
    for g in range(args.gmin, args.gmax + 1):
        row = {"g": g, "bn_applicable": bn_applicable(g)}
        for label, space in (("odd", "Sbar_minus"), ("even", "Sbar_plus")):
            res = slope_combination(g, space)
            row[f"{label}_slope"] = str(res.lambda_slope)
            row[f"{label}_c"] = str(res.c_coefficient)
            row[f"{label}_verdict"] = general_type_test(g, space)
        rows.append(row)

    if args.json:
        print(json.dumps(rows, indent=2))
        return

    head = (f"{'g':>3} {'bn?':>4} {'odd slope':>10} {'odd verdict':>14} "
            f"{'even slope':>10} {'even verdict':>14}")
    print(head)
    print("-" * len(head))
    for row in rows:
        print(
            f"{row['g']:>3} {'yes' if row['bn_applicable'] else 'no':>4} "
            f"{row['odd_slope']:>10} {row['odd_verdict']:>14} "
            f"{row['even_slope']:>10} {row['even_verdict']:>14}"
        )


if __name__ == "__main__":
    main()
