"""Finitely presented groups: presentations, abelianization, Tietze moves."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import prod
from typing import Iterable, Sequence

from .braid import FreeWord
from .smith import smith_normal_form
from .words import Letters, canonical_relator, exponent_sums, free_reduce, invert


@dataclass(frozen=True)
class GroupPresentation:
    generator_count: int
    relators: tuple[Letters, ...] = ()

    def __post_init__(self):
        if self.generator_count < 0:
            raise ValueError("generator_count must be >= 0")
        rels = []
        for r in self.relators:
            if isinstance(r, FreeWord):
                r = r.letters
            r = tuple(int(x) for x in r)
            for x in r:
                if x == 0 or abs(x) > self.generator_count:
                    raise ValueError(
                        f"relator letter {x} outside +-1..{self.generator_count}"
                    )
            rels.append(free_reduce(r))
        object.__setattr__(self, "relators", tuple(rels))

    def with_relators(self, extra: Iterable[Sequence[int]]) -> GroupPresentation:
        return GroupPresentation(self.generator_count, self.relators + tuple(map(tuple, extra)))

    def total_length(self) -> int:
        return sum(len(r) for r in self.relators)

    def relator_words(self) -> list[FreeWord]:
        return [FreeWord(self.generator_count, r) for r in self.relators]

    def to_json(self) -> dict:
        return {"generators": self.generator_count, "relators": [list(r) for r in self.relators]}

    @classmethod
    def from_json(cls, data: dict) -> GroupPresentation:
        if not isinstance(data, dict) or "generators" not in data:
            raise ValueError("presentation JSON needs a 'generators' field")
        g = data["generators"]
        if not isinstance(g, int) or isinstance(g, bool) or g < 0:
            raise ValueError("'generators' must be a nonnegative integer")
        rels = data.get("relators", [])
        if not isinstance(rels, list) or not all(
            isinstance(r, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in r)
            for r in rels
        ):
            raise ValueError("'relators' must be a list of lists of signed integers")
        for r in rels:
            if any(x == 0 for x in r):
                raise ValueError("generator index 0 in a relator; generators are 1-based")
        return cls(g, tuple(tuple(r) for r in rels))

    def __str__(self):
        names = _names(self.generator_count)

        def word(r):
            return "".join(names[abs(x) - 1] + ("" if x > 0 else "^-1") for x in r) or "1"

        return "< {} | {} >".format(", ".join(names), ", ".join(word(r) for r in self.relators))


def _names(k: int) -> list[str]:
    if k <= 26:
        return [chr(ord("a") + i) for i in range(k)]
    return [f"x{i}" for i in range(1, k + 1)]


@dataclass(frozen=True)
class AbelianInvariants:
    """Z^free_rank + Z/d1 + ... + Z/dk with d1 | d2 | ... | dk, every di >= 2."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        t = tuple(int(d) for d in self.torsion)
        if self.free_rank < 0:
            raise ValueError("free_rank must be >= 0")
        if any(d < 2 for d in t):
            raise ValueError(f"torsion factors must be >= 2: {t}")
        if any(t[i + 1] % t[i] for i in range(len(t) - 1)):
            raise ValueError(f"torsion factors do not form a divisibility chain: {t}")
        object.__setattr__(self, "torsion", t)

    @classmethod
    def from_diagonal(cls, diagonal: Iterable[int], generator_count: int) -> AbelianInvariants:
        diag = [abs(d) for d in diagonal]
        nonzero = [d for d in diag if d]
        return cls(generator_count - len(nonzero), tuple(d for d in nonzero if d > 1))

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def order(self) -> int:
        if self.free_rank:
            raise ValueError("group is infinite (free_rank > 0)")
        return prod(self.torsion)

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    def __str__(self):
        parts = [("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")] if self.free_rank else []
        for d, k in Counter(self.torsion).items():
            parts.append(f"(Z/{d})^{k}" if k > 1 else f"Z/{d}")
        return " + ".join(parts) or "0"


def relation_matrix(P: GroupPresentation) -> list[list[int]]:
    return [exponent_sums(r, P.generator_count) for r in P.relators]


def abelianize(P: GroupPresentation) -> AbelianInvariants:
    snf = smith_normal_form(relation_matrix(P), cols=P.generator_count)
    return AbelianInvariants.from_diagonal(snf.diagonal, P.generator_count)


@dataclass
class TietzeResult:
    presentation: GroupPresentation
    # images[j] expresses original generator j + 1 in the new generators
    images: list[Letters] = field(default_factory=list)


def _clean(relators: Iterable[Letters]) -> list[Letters]:
    seen = set()
    for r in relators:
        c = canonical_relator(r)
        if c:
            seen.add(c)
    return sorted(seen, key=lambda r: (len(r), [(abs(x), x < 0) for x in r]))


def _subst(word: Sequence[int], g: int, value: Letters) -> Letters:
    out: list[int] = []
    for x in word:
        if x == g:
            out.extend(value)
        elif x == -g:
            out.extend(invert(value))
        else:
            out.append(x)
    return free_reduce(out)


def tietze_reduce(P: GroupPresentation) -> TietzeResult:
    """Drop trivial/duplicate relators and eliminate defined generators.

    A generator occurring exactly once in a relator r is eliminated when r
    has length <= 2, or when substituting it does not increase the total
    relator length. Among candidates the shortest relator wins, then the
    highest-numbered generator.
    """
    rels = _clean(P.relators)
    alive = list(range(1, P.generator_count + 1))
    value: dict[int, Letters] = {g: (g,) for g in alive}

    while True:
        occurrences = Counter(abs(x) for r in rels for x in r)
        best = None
        for idx, r in enumerate(rels):
            local = Counter(abs(x) for x in r)
            for g, cnt in local.items():
                if cnt != 1:
                    continue
                L = len(r)
                others = occurrences[g] - 1
                delta = -L + others * (L - 2)
                if L > 2 and delta > 0:
                    continue
                key = (L, delta, -g)
                if best is None or key < best[0]:
                    best = (key, idx, g)
        if best is None:
            break
        _, idx, g = best
        r = rels[idx]
        pos = next(i for i, x in enumerate(r) if abs(x) == g)
        rest = r[pos + 1:] + r[:pos]
        # r ~ g^e * rest = 1
        sol = invert(rest) if r[pos] > 0 else rest
        rels = _clean(_subst(s, g, sol) for k, s in enumerate(rels) if k != idx)
        for h in value:
            value[h] = _subst(value[h], g, sol)
        alive.remove(g)

    renum = {g: i for i, g in enumerate(alive, 1)}

    def rename(w):
        return tuple(renum[x] if x > 0 else -renum[-x] for x in w)

    new = GroupPresentation(len(alive), tuple(rename(r) for r in rels))
    images = [rename(value[g]) for g in range(1, P.generator_count + 1)]
    return TietzeResult(new, images)


def tietze_simplify(P: GroupPresentation) -> GroupPresentation:
    return tietze_reduce(P).presentation
