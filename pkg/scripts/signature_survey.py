#!/usr/bin/env python3
"""Signature sign of X_{s,t} across the odd coprime grid.

Non-positive cases are listed separately; they all sit at small degree.
"""

from __future__ import annotations

import argparse
from collections import Counter

from braidcover.catalog import search_pairs, signature_survey


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max", type=int, default=15, help="bound on s and t")
    args = ap.parse_args()

    survey = signature_survey(search_pairs(args.max, args.max, odd_only=True, coprime_only=True))
    by_sign = Counter(e.sign for e in survey)
    print(f"pairs: {len(survey)}  positive: {by_sign[1]}  zero: {by_sign[0]}  negative: {by_sign[-1]}")
    flagged = [e for e in survey if e.flagged]
    for e in flagged:
        print(f"  non-positive: (s,t)=({e.s},{e.t}) n={e.n} sign={e.sign:+d}")
    if flagged:
        print(f"largest flagged degree: {max(e.n for e in flagged)}")
    smallest_positive = min((e.n for e in survey if e.sign > 0), default=None)
    print(f"smallest positive degree: {smallest_positive}")


if __name__ == "__main__":
    main()
