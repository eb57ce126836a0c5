"""Todd-Coxeter coset enumeration (HLT strategy)."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .presentation import GroupPresentation
from .words import Letters, cyclic_reduce, free_reduce


class CosetEnumerationExceeded(RuntimeError):
    """The coset bound was reached. This does not prove the index is infinite."""

    def __init__(self, limit: int):
        super().__init__(f"coset enumeration exceeded {limit} cosets")
        self.limit = limit


def _col(x: int) -> int:
    return 2 * (x - 1) if x > 0 else 2 * (-x - 1) + 1


@dataclass(frozen=True)
class CosetTable:
    """Complete, standardised coset table.

    ``rows[c][2*(j-1)]`` is coset ``c`` times generator ``j``, and
    ``rows[c][2*(j-1)+1]`` is coset ``c`` times its inverse. Coset 0 is the
    subgroup itself. ``defined`` counts every coset created during the run.
    """

    generator_count: int
    rows: tuple[tuple[int, ...], ...]
    defined: int
    complete: bool = True

    @property
    def index(self) -> int:
        return len(self.rows)

    def act(self, coset: int, word: Sequence[int]) -> int:
        for x in word:
            coset = self.rows[coset][_col(x)]
        return coset


def todd_coxeter(
    P: GroupPresentation,
    subgroup_gens: Sequence[Sequence[int]] = (),
    max_cosets: int = 100_000,
) -> CosetTable:
    """Enumerate the cosets of <subgroup_gens> in P.

    With no subgroup generators the index is the group order. Raises
    ``CosetEnumerationExceeded`` once more than ``max_cosets`` cosets have
    been defined.
    """
    if max_cosets < 1:
        raise ValueError("max_cosets must be >= 1")
    ncols = 2 * P.generator_count
    inv = [c ^ 1 for c in range(ncols)]
    relators = [[_col(x) for x in cyclic_reduce(r)] for r in P.relators]
    relators = [r for r in relators if r]
    subgens = [[_col(x) for x in free_reduce(w)] for w in subgroup_gens]

    table: list[list[int | None]] = [[None] * ncols]
    parent = [0]

    def rep(c: int) -> int:
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    def define(c: int, x: int) -> int:
        if len(table) >= max_cosets:
            raise CosetEnumerationExceeded(max_cosets)
        d = len(table)
        table.append([None] * ncols)
        parent.append(d)
        table[c][x] = d
        table[d][inv[x]] = c
        return d

    def merge(k: int, l: int, queue: list[int]) -> None:
        k, l = rep(k), rep(l)
        if k == l:
            return
        if l < k:
            k, l = l, k
        parent[l] = k
        queue.append(l)

    def coincidence(a: int, b: int) -> None:
        queue: list[int] = []
        merge(a, b, queue)
        i = 0
        while i < len(queue):
            e = queue[i]
            i += 1
            for x in range(ncols):
                f = table[e][x]
                if f is None:
                    continue
                table[f][inv[x]] = None
                e1, f1 = rep(e), rep(f)
                if table[e1][x] is not None:
                    merge(f1, table[e1][x], queue)
                elif table[f1][inv[x]] is not None:
                    merge(e1, table[f1][inv[x]], queue)
                else:
                    table[e1][x] = f1
                    table[f1][inv[x]] = e1

    def scan_and_fill(c: int, word: list[int]) -> None:
        f = b = c
        i, j = 0, len(word) - 1
        while True:
            while i <= j and table[f][word[i]] is not None:
                f = table[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return
            while j >= i and table[b][inv[word[j]]] is not None:
                b = table[b][inv[word[j]]]
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if i == j:
                table[f][word[i]] = b
                table[b][inv[word[i]]] = f
                return
            define(f, word[i])

    for w in subgens:
        if w:
            scan_and_fill(0, w)
    c = 0
    while c < len(table):
        if parent[c] == c:
            for r in relators:
                scan_and_fill(c, r)
                if parent[c] != c:
                    break
            if parent[c] == c:
                for x in range(ncols):
                    if table[c][x] is None:
                        define(c, x)
        c += 1

    # standardise: renumber live cosets in breadth-first order from coset 0
    order = {0: 0}
    queue = deque([0])
    while queue:
        e = queue.popleft()
        for x in range(ncols):
            f = rep(table[e][x])
            if f not in order:
                order[f] = len(order)
                queue.append(f)
    rows = [None] * len(order)
    for e, k in order.items():
        rows[k] = tuple(order[rep(table[e][x])] for x in range(ncols))
    return CosetTable(P.generator_count, tuple(rows), defined=len(table))


def group_order(P: GroupPresentation, max_cosets: int = 100_000) -> int:
    return todd_coxeter(P, (), max_cosets).index


def coset_word(table: CosetTable, coset: int) -> Letters:
    """A word carrying coset 0 to ``coset`` (shortest in BFS order)."""
    back: dict[int, Letters] = {0: ()}
    queue = deque([0])
    while queue:
        e = queue.popleft()
        if e == coset:
            return back[e]
        for j in range(1, table.generator_count + 1):
            for x in (j, -j):
                f = table.rows[e][_col(x)]
                if f not in back:
                    back[f] = back[e] + (x,)
                    queue.append(f)
    raise ValueError(f"coset {coset} not reachable")
