#!/usr/bin/env python3
"""Local Van Kampen models y^2 = x^nu: presentation, squares quotient, Galois kernel."""

from __future__ import annotations

from braidcover.braid import BraidWord
from braidcover.cosets import group_order
from braidcover.presentation import abelianize
from braidcover.vankampen import (
    GeometricMap,
    MonodromyFactor,
    MonodromyFactorization,
    affine_galois_pi1,
    projective_galois_pi1,
    quotient_by_generator_squares,
    vk_presentation,
)

NAMES = {1: "branch", 2: "node", 3: "cusp"}


def main() -> None:
    psi = GeometricMap.uniform(2)
    for nu, name in NAMES.items():
        F = MonodromyFactorization(2, (MonodromyFactor.half_twist_power(nu, 2, BraidWord(2)),))
        P = vk_presentation(F)
        affine = affine_galois_pi1(F, psi)
        proj = projective_galois_pi1(F, psi)
        print(f"{name:>6}: {P}")
        print(f"        H1 = {abelianize(P)}, |squares quotient| = {group_order(quotient_by_generator_squares(P))}")
        print(f"        affine kernel H1 = {affine.invariants} (order {affine.order}), "
              f"projective kernel H1 = {proj.invariants} (order {proj.order})")


if __name__ == "__main__":
    main()
