"""Reidemeister-Schreier presentations of kernels and point stabilisers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence

from .braid import Permutation
from .presentation import GroupPresentation, tietze_simplify
from .words import Letters, free_reduce, invert


class NotAHomomorphism(ValueError):
    pass


class IntransitiveImage(ValueError):
    pass


def word_image(word: Sequence[int], images: Sequence[Permutation]) -> Permutation:
    out = Permutation.identity(images[0].degree if images else 0)
    for x in word:
        out = out * (images[x - 1] if x > 0 else images[-x - 1].inverse())
    return out


def check_homomorphism(P: GroupPresentation, images: Sequence[Permutation]) -> None:
    if len(images) != P.generator_count:
        raise NotAHomomorphism(
            f"{len(images)} generator images for {P.generator_count} generators"
        )
    if len({im.degree for im in images}) > 1:
        raise NotAHomomorphism("generator images have different degrees")
    for r in P.relators:
        if not word_image(r, images).is_identity():
            raise NotAHomomorphism(f"relator {list(r)} does not map to the identity")


def is_transitive(images: Sequence[Permutation], degree: int) -> bool:
    seen, stack = {1}, [1]
    while stack:
        i = stack.pop()
        for im in images:
            for j in (im(i), im.inverse()(i)):
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
    return len(seen) == degree


def generated_group(images: Sequence[Permutation], degree: int) -> list[Permutation]:
    """Elements of <images>, in breadth-first order over generators 1, -1, 2, -2, ..."""
    ident = Permutation.identity(degree)
    elems, index = [ident], {ident: 0}
    letters = [im for g in images for im in (g, g.inverse())]
    i = 0
    while i < len(elems):
        for g in letters:
            h = elems[i] * g
            if h not in index:
                index[h] = len(elems)
                elems.append(h)
        i += 1
    return elems


@dataclass
class SchreierSystem:
    """Coset action, Schreier transversal and generators for a finite-index subgroup.

    ``action[c][2*(j-1)]`` is coset ``c`` times generator ``j``; the inverse
    column follows it. ``generators[k]`` is the word rep(c) x_j rep(c x_j)^-1
    in the parent group for the k-th nontrivial Schreier generator.
    """

    parent: GroupPresentation
    action: list[list[int]]
    transversal: list[Letters]
    generators: list[Letters]
    raw: GroupPresentation

    @property
    def index(self) -> int:
        return len(self.action)


def _col(x: int) -> int:
    return 2 * (x - 1) if x > 0 else 2 * (-x - 1) + 1


def schreier_system(
    P: GroupPresentation,
    images: Sequence[Permutation],
    subgroup: Literal["kernel", "stabilizer"] = "kernel",
) -> SchreierSystem:
    check_homomorphism(P, images)
    degree = images[0].degree if images else 1
    if not is_transitive(images, degree):
        raise IntransitiveImage("generator images do not act transitively")
    g = P.generator_count
    gens = [im for h in images for im in (h, h.inverse())]

    if subgroup == "kernel":
        elems = generated_group(images, degree)
        where = {e: i for i, e in enumerate(elems)}
        action = [[where[e * h] for h in gens] for e in elems]
    elif subgroup == "stabilizer":
        action = [[h(i) - 1 for h in gens] for i in range(1, degree + 1)]
    else:
        raise ValueError(f"unknown subgroup kind {subgroup!r}")

    n = len(action)
    transversal: list[Letters | None] = [None] * n
    transversal[0] = ()
    order = [0]
    for c in order:
        for j in range(1, g + 1):
            for x in (j, -j):
                d = action[c][_col(x)]
                if transversal[d] is None:
                    transversal[d] = transversal[c] + (x,)
                    order.append(d)

    label: dict[tuple[int, int], int] = {}
    words: list[Letters] = []
    for c in range(n):
        for j in range(1, g + 1):
            w = free_reduce(transversal[c] + (j,) + invert(transversal[action[c][_col(j)]]))
            if w:
                words.append(w)
                label[(c, j)] = len(words)

    relators = []
    for c in range(n):
        for r in P.relators:
            out, e = [], c
            for x in r:
                if x > 0:
                    if (e, x) in label:
                        out.append(label[(e, x)])
                    e = action[e][_col(x)]
                else:
                    d = action[e][_col(x)]
                    if (d, -x) in label:
                        out.append(-label[(d, -x)])
                    e = d
            relators.append(tuple(out))
    raw = GroupPresentation(len(words), tuple(relators))
    return SchreierSystem(P, action, transversal, words, raw)


def reidemeister_schreier(
    P: GroupPresentation,
    images: Sequence[Permutation],
    subgroup: Literal["kernel", "stabilizer"] = "kernel",
    simplify: bool = True,
) -> GroupPresentation:
    """Presentation of the kernel (or a point stabiliser) of P -> Sym(degree)."""
    raw = schreier_system(P, images, subgroup).raw
    return tietze_simplify(raw) if simplify else raw
