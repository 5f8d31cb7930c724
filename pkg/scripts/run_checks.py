#!/usr/bin/env python3
"""Run the verification registry and print a report table.

Examples:
    python scripts/run_checks.py
    python scripts/run_checks.py --profile fast
    python scripts/run_checks.py --only THM12:RU7,INFRA:AS-Lemma4 --prec 200
"""

import argparse
import sys

from qrank.verify import PROFILES, run_all


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--profile", choices=PROFILES, default="default")
    parser.add_argument("--only", default=None, help="comma-separated check names")
    parser.add_argument("--prec", type=int, default=None)
    args = parser.parse_args()
    only = [n.strip() for n in args.only.split(",")] if args.only else None
    reports = run_all(profile=args.profile, only=only, prec=args.prec)
    width = max(len(r.name) for r in reports)
    for r in reports:
        line = f"{r.status:<4} {r.name:<{width}} prec={r.prec:<4} {r.runtime_ms:9.1f} ms"
        if r.first_failure:
            line += f"  first failure: {r.first_failure}"
        print(line)
    failures = sum(1 for r in reports if r.status == "FAIL")
    print(f"{len(reports)} checks, {failures} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
