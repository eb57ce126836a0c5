"""Signed-integer words: free reduction and cyclic canonical forms.

A letter ``j > 0`` stands for generator ``j`` and ``-j`` for its inverse.
Every word type in the package (braid words, free words, relators) is a
tuple of such letters.
"""

from __future__ import annotations

from typing import Iterable, Sequence

Letters = tuple[int, ...]


def free_reduce(letters: Iterable[int]) -> Letters:
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def invert(letters: Sequence[int]) -> Letters:
    return tuple(-x for x in reversed(letters))


def cyclic_reduce(letters: Sequence[int]) -> Letters:
    w = free_reduce(letters)
    i, j = 0, len(w)
    while j - i >= 2 and w[i] == -w[j - 1]:
        i += 1
        j -= 1
    return w[i:j]


def _letter_key(x: int) -> tuple[int, int]:
    # a < A < b < B < ...
    return (abs(x), 0 if x > 0 else 1)


def canonical_relator(letters: Sequence[int]) -> Letters:
    """Least representative of a relator up to rotation and inversion.

    Two relators with the same canonical form have the same normal closure,
    which is what lets presentations drop duplicate relations.
    """
    w = cyclic_reduce(letters)
    if not w:
        return ()
    best = None
    for cand in (w, invert(w)):
        for i in range(len(cand)):
            rot = cand[i:] + cand[:i]
            key = [_letter_key(x) for x in rot]
            if best is None or key < best[0]:
                best = (key, rot)
    return best[1]


def exponent_sums(letters: Sequence[int], rank: int) -> list[int]:
    row = [0] * rank
    for x in letters:
        row[abs(x) - 1] += 1 if x > 0 else -1
    return row


def parse_letters(text: str) -> Letters:
    """Parse whitespace-separated signed integers, e.g. ``"1 1 -2"``."""
    out = []
    for tok in text.split():
        x = int(tok)
        if x == 0:
            raise ValueError("letter 0 is not allowed; generators are 1-based")
        out.append(x)
    return tuple(out)


def format_letters(letters: Sequence[int]) -> str:
    return " ".join(str(x) for x in letters)
