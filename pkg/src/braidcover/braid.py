"""Braid words on p strands, their permutation images and the Artin action.

Conventions
-----------
* Letter ``i`` is the Artin generator sigma_i, ``-i`` its inverse; a braid word
  is read left to right.
* The Artin action is a left action on the free group F_p = <x_1..x_p>:
  sigma_i sends x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i and fixes the rest,
  and ``artin_action(a * b, v) == artin_action(a, artin_action(b, v))``.
* Permutations multiply left to right: ``(p * q)(i) == q(p(i))``, so
  ``permutation_image(a * b) == permutation_image(a) * permutation_image(b)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .words import Letters, format_letters, free_reduce, invert, parse_letters


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: Letters = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError(f"strand count must be >= 1, got {self.strands}")
        letters = tuple(int(x) for x in self.letters)
        for x in letters:
            if not 1 <= abs(x) <= self.strands - 1:
                raise ValueError(
                    f"generator index {x} outside 1..{self.strands - 1} "
                    f"for {self.strands} strands"
                )
        object.__setattr__(self, "letters", free_reduce(letters))

    @classmethod
    def parse(cls, text: str, strands: int) -> BraidWord:
        return cls(strands, parse_letters(text))

    @classmethod
    def identity(cls, strands: int) -> BraidWord:
        return cls(strands, ())

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return compose(self, other)

    def __pow__(self, k: int) -> BraidWord:
        base = self if k >= 0 else self.inverse()
        return BraidWord(self.strands, base.letters * abs(k))

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, invert(self.letters))

    def conjugate_by(self, q: BraidWord) -> BraidWord:
        """Return ``q * self * q^-1``."""
        return q * self * q.inverse()

    def __str__(self):
        return format_letters(self.letters) or "e"


@dataclass(frozen=True)
class FreeWord:
    rank: int
    letters: Letters = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError(f"rank must be >= 0, got {self.rank}")
        letters = tuple(int(x) for x in self.letters)
        for x in letters:
            if not 1 <= abs(x) <= self.rank:
                raise ValueError(f"generator index {x} outside 1..{self.rank}")
        object.__setattr__(self, "letters", free_reduce(letters))

    @classmethod
    def generator(cls, j: int, rank: int) -> FreeWord:
        return cls(rank, (j,))

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: FreeWord) -> FreeWord:
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")
        return FreeWord(self.rank, self.letters + other.letters)

    def inverse(self) -> FreeWord:
        return FreeWord(self.rank, invert(self.letters))

    def __str__(self):
        return format_letters(self.letters) or "e"


@dataclass(frozen=True)
class Permutation:
    """Bijection of {1..degree}; ``image[i - 1]`` is the image of ``i``."""

    image: tuple[int, ...]

    def __post_init__(self):
        image = tuple(int(x) for x in self.image)
        if sorted(image) != list(range(1, len(image) + 1)):
            raise ValueError(f"not a permutation of 1..{len(image)}: {image}")
        object.__setattr__(self, "image", image)

    @property
    def degree(self) -> int:
        return len(self.image)

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(tuple(range(1, degree + 1)))

    @classmethod
    def transposition(cls, i: int, j: int, degree: int) -> Permutation:
        img = list(range(1, degree + 1))
        img[i - 1], img[j - 1] = j, i
        return cls(tuple(img))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> Permutation:
        img = list(range(1, degree + 1))
        for cyc in cycles:
            for k, a in enumerate(cyc):
                img[a - 1] = cyc[(k + 1) % len(cyc)]
        return cls(tuple(img))

    def __call__(self, i: int) -> int:
        return self.image[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return Permutation(tuple(other.image[x - 1] for x in self.image))

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, x in enumerate(self.image, 1):
            inv[x - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.image, 1))

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for i in range(1, self.degree + 1):
            if i in seen or self(i) == i:
                continue
            cyc, j = [], i
            while j not in seen:
                seen.add(j)
                cyc.append(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def is_transposition(self) -> bool:
        cyc = self.cycles()
        return len(cyc) == 1 and len(cyc[0]) == 2

    def __str__(self):
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles()) or "()"


def sigma(i: int, strands: int) -> BraidWord:
    return BraidWord(strands, (i,))


def compose(w1: BraidWord, w2: BraidWord) -> BraidWord:
    if w1.strands != w2.strands:
        raise ValueError(f"strand mismatch: {w1.strands} vs {w2.strands}")
    return BraidWord(w1.strands, w1.letters + w2.letters)


def permutation_image(w: BraidWord) -> Permutation:
    img = list(range(1, w.strands + 1))
    # track which strand sits at each position
    for x in w.letters:
        i = abs(x)
        img[i - 1], img[i] = img[i], img[i - 1]
    # position -> strand table; invert to strand -> final position
    out = [0] * w.strands
    for pos, strand in enumerate(img, 1):
        out[strand - 1] = pos
    return Permutation(tuple(out))


def model_branch_monodromy(nu: int) -> BraidWord:
    """Monodromy of y^2 = x^nu around the origin: the half-twist to the nu."""
    if nu < 1:
        raise ValueError(f"nu must be >= 1, got {nu}")
    return BraidWord(2, (1,) * nu)


def full_twist(p: int) -> BraidWord:
    """The central full twist (sigma_1 ... sigma_{p-1})^p."""
    if p < 2:
        raise ValueError(f"full twist needs p >= 2, got {p}")
    return BraidWord(p, tuple(range(1, p)) * p)


def _generator_image(letter: int, j: int) -> Letters:
    i = abs(letter)
    if letter > 0:
        if j == i:
            return (i, i + 1, -i)
        if j == i + 1:
            return (i,)
    else:
        if j == i:
            return (i + 1,)
        if j == i + 1:
            return (-(i + 1), i, i + 1)
    return (j,)


def _substitute(letters: Sequence[int], images: Sequence[Letters]) -> Letters:
    out: list[int] = []
    for x in letters:
        out.extend(images[x - 1] if x > 0 else invert(images[-x - 1]))
    return free_reduce(out)


def artin_automorphism(beta: BraidWord) -> list[Letters]:
    """Images of x_1..x_p under the action of ``beta``."""
    p = beta.strands
    images = [(j,) for j in range(1, p + 1)]
    # images of phi_{b1..bk} = images of phi_{b1..b(k-1)} substituted into phi_{bk}
    for b in beta.letters:
        images = [_substitute(_generator_image(b, j), images) for j in range(1, p + 1)]
    return images


def artin_action(beta: BraidWord, v: FreeWord) -> FreeWord:
    if beta.strands != v.rank:
        raise ValueError(f"rank mismatch: braid on {beta.strands} strands, word of rank {v.rank}")
    return FreeWord(v.rank, _substitute(v.letters, artin_automorphism(beta)))


def braids_equal(w1: BraidWord, w2: BraidWord) -> bool:
    """Word problem in B_p, decided by the faithful Artin representation."""
    if w1.strands != w2.strands:
        raise ValueError(f"strand mismatch: {w1.strands} vs {w2.strands}")
    if w1.letters == w2.letters:
        return True
    if permutation_image(w1) != permutation_image(w2):
        return False
    return artin_automorphism(w1) == artin_automorphism(w2)
