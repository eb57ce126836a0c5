#!/usr/bin/env python3
"""Tabulate X_{s,t} / Y_{s,t}: equal Chern numbers, predicted pi_1 of each cover."""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from braidcover.catalog import search_pairs


@dataclass(frozen=True)
class Config:
    max_s: int = 7
    max_t: int = 7
    odd_only: bool = True
    coprime_only: bool = True


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-s", type=int, default=Config.max_s)
    ap.add_argument("--max-t", type=int, default=Config.max_t)
    ap.add_argument("--all", action="store_true", help="drop the odd/coprime filters")
    args = ap.parse_args()
    cfg = Config(args.max_s, args.max_t, not args.all, not args.all)

    reports = search_pairs(cfg.max_s, cfg.max_t, odd_only=cfg.odd_only, coprime_only=cfg.coprime_only)
    print(f"{'s':>3} {'t':>3} {'n':>6} {'c1^2/n!':>12} {'c2/n!':>12}  {'pi1(X)':<14} {'pi1(Y)':<14} equal distinct")
    for r in reports:
        print(
            f"{r.spec.s:>3} {r.spec.t:>3} {r.degree:>6} {str(r.x.reduced_c1sq):>12} {str(r.x.reduced_c2):>12}"
            f"  {str(r.pi1_x):<14} {str(r.pi1_y):<14} {str(r.chern_equal):<5} {r.groups_distinct}"
        )
    print(f"{len(reports)} pairs, all Chern-equal: {all(r.chern_equal for r in reports)}")


if __name__ == "__main__":
    main()
