#!/usr/bin/env python3
"""Walk through the rank refinement story for one n: table, histogram, classes.

Example:
    python scripts/rank_refinement_demo.py 6 --kind u
"""

import argparse

from qrank.quadruples import RANK_TABLE_COLUMNS, class_counts, rank_counts, rank_table
from qrank.rankgen import ru_bivariate, rv_bivariate


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("n", type=int)
    parser.add_argument("--kind", choices=("u", "v"), default="u")
    parser.add_argument("--full-table", action="store_true",
                        help="print every quadruple, not just the summary")
    args = parser.parse_args()

    rows = rank_table(args.n, args.kind)
    print(f"{args.kind}({args.n}) = {len(rows)} partition quadruples")
    if args.full_table:
        print("  " + "  ".join(RANK_TABLE_COLUMNS))
        for row in rows:
            d = row.as_dict()
            print("  " + "  ".join(str(d[c]) for c in RANK_TABLE_COLUMNS))

    hist = dict(sorted(rank_counts(args.n, args.kind).items()))
    print(f"rank histogram: {hist}")

    biv = ru_bivariate(args.n + 1) if args.kind == "u" else rv_bivariate(args.n + 1)
    print(f"bivariate coefficient of q^{args.n}: {biv.coefficient(args.n)}")

    for ell in (3, 5, 7):
        counts = class_counts(args.n, args.kind, ell)
        tag = "equal" if len(set(counts)) == 1 else "unequal"
        print(f"rank mod {ell}: {counts} ({tag})")


if __name__ == "__main__":
    main()
