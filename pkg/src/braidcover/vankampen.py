"""From braid monodromy factorizations to fundamental groups.

A factorization of degree p gives the presentation of pi_1(C^2 - S) on the
p free generators of a generic fibre, with one relator beta(x_j) x_j^-1 per
factor braid beta and generator x_j. Quotienting by the squares of the
generators and taking the kernel of the map to S_n (Reidemeister-Schreier)
gives pi_1 of the affine part of the Galois cover; adding x_1 x_2 ... x_p = 1
first gives the projective cover.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import factorial

from .braid import BraidWord, FreeWord, Permutation, artin_automorphism, braids_equal, full_twist
from .cosets import CosetEnumerationExceeded, todd_coxeter
from .presentation import AbelianInvariants, GroupPresentation, abelianize
from .schreier import check_homomorphism, generated_group, reidemeister_schreier, word_image
from .words import canonical_relator, free_reduce

log = logging.getLogger(__name__)

KIND_EXPONENT = {"branch": 1, "node": 2, "cusp": 3}
KINDS = (*KIND_EXPONENT, "general")


class NotSurjective(ValueError):
    pass


@dataclass(frozen=True)
class MonodromyFactor:
    """The braid Q * core^exponent * Q^-1, with core = sigma_1 unless given.

    ``core`` is only allowed for kind "general"; it lets a factor be any
    braid (a full twist, say) rather than a half-twist power.
    """

    conjugator: BraidWord
    exponent: int = 1
    kind: str = "general"
    core: BraidWord | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown factor kind {self.kind!r}; expected one of {KINDS}")
        if not isinstance(self.exponent, int) or self.exponent < 1:
            raise ValueError(f"exponent must be a positive integer, got {self.exponent}")
        if self.kind in KIND_EXPONENT and self.exponent != KIND_EXPONENT[self.kind]:
            raise ValueError(
                f"kind {self.kind!r} needs exponent {KIND_EXPONENT[self.kind]}, got {self.exponent}"
            )
        if self.core is not None:
            if self.kind != "general":
                raise ValueError("an explicit core braid requires kind 'general'")
            if self.core.strands != self.conjugator.strands:
                raise ValueError("core and conjugator strand counts differ")
        elif self.conjugator.strands < 2:
            raise ValueError("a half-twist factor needs at least 2 strands")

    @property
    def strands(self) -> int:
        return self.conjugator.strands

    @classmethod
    def half_twist_power(cls, nu: int, strands: int, conjugator: BraidWord | None = None):
        kind = {1: "branch", 2: "node", 3: "cusp"}.get(nu, "general")
        return cls(conjugator or BraidWord.identity(strands), nu, kind)

    @classmethod
    def of_braid(cls, beta: BraidWord) -> MonodromyFactor:
        return cls(BraidWord.identity(beta.strands), 1, "general", beta)

    def braid(self) -> BraidWord:
        core = self.core if self.core is not None else BraidWord(self.strands, (1,))
        return (core ** self.exponent).conjugate_by(self.conjugator)

    def to_json(self) -> dict:
        out = {"conjugator": list(self.conjugator.letters), "exponent": self.exponent, "kind": self.kind}
        if self.core is not None:
            out["braid"] = list(self.core.letters)
        return out


@dataclass(frozen=True)
class MonodromyFactorization:
    degree: int
    factors: tuple[MonodromyFactor, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        for f in self.factors:
            if f.strands != self.degree:
                raise ValueError(f"factor on {f.strands} strands in a degree {self.degree} factorization")

    def braids(self) -> list[BraidWord]:
        return [f.braid() for f in self.factors]

    def product(self) -> BraidWord:
        out = BraidWord.identity(self.degree)
        for b in self.braids():
            out = out * b
        return out

    def to_json(self) -> dict:
        return {"degree": self.degree, "factors": [f.to_json() for f in self.factors]}

    @classmethod
    def from_json(cls, data: dict) -> MonodromyFactorization:
        if not isinstance(data, dict) or not isinstance(data.get("degree"), int):
            raise ValueError("factorization JSON needs an integer 'degree'")
        p = data["degree"]
        if p < 1:
            raise ValueError("'degree' must be >= 1")
        factors = []
        for k, f in enumerate(data.get("factors", [])):
            if not isinstance(f, dict):
                raise ValueError(f"factor {k} is not an object")
            conj = f.get("conjugator", [])
            exponent = f.get("exponent", 1)
            if not isinstance(exponent, int) or isinstance(exponent, bool) or exponent < 1:
                raise ValueError(f"factor {k}: exponent must be a positive integer (nu >= 1)")
            kind = f.get("kind", "general")
            core = f.get("braid")
            factors.append(
                MonodromyFactor(
                    BraidWord(p, tuple(_int_list(conj, f"factor {k} conjugator"))),
                    exponent,
                    kind,
                    None if core is None else BraidWord(p, tuple(_int_list(core, f"factor {k} braid"))),
                )
            )
        return cls(p, tuple(factors))


def _int_list(value, what: str) -> list[int]:
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
        raise ValueError(f"{what} must be a list of signed integers")
    if any(x == 0 for x in value):
        raise ValueError(f"{what}: letter 0 is not allowed; generators are 1-based")
    return value


@dataclass(frozen=True)
class GeometricMap:
    """psi: one transposition of {1..sheets} per generator Gamma_j."""

    sheets: int
    images: tuple[Permutation, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        for k, im in enumerate(self.images, 1):
            if im.degree != self.sheets:
                raise ValueError(f"image {k} has degree {im.degree}, expected {self.sheets}")
            if not im.is_transposition():
                raise ValueError(f"image {k} = {im} is not a transposition")

    @classmethod
    def uniform(cls, p: int, sheets: int = 2) -> GeometricMap:
        t = Permutation.transposition(1, 2, sheets)
        return cls(sheets, (t,) * p)

    def to_json(self) -> dict:
        return {"sheets": self.sheets, "images": [list(im.cycles()[0]) for im in self.images]}

    @classmethod
    def from_json(cls, data: dict) -> GeometricMap:
        if not isinstance(data, dict) or not isinstance(data.get("sheets"), int):
            raise ValueError("map JSON needs an integer 'sheets'")
        n = data["sheets"]
        if n < 2:
            raise ValueError("'sheets' must be >= 2")
        images = []
        for k, pair in enumerate(data.get("images", []), 1):
            if not (isinstance(pair, list) and len(pair) == 2 and all(isinstance(x, int) for x in pair)):
                raise ValueError(f"image {k} must be a pair [i, j]")
            i, j = pair
            if i == j or not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"image {k} = {pair} is not a transposition of 1..{n}")
            images.append(Permutation.transposition(i, j, n))
        return cls(n, tuple(images))


def vk_relations(f: MonodromyFactor, p: int) -> list[FreeWord]:
    """Relators beta(x_j) x_j^-1, j = 1..p, up to rotation/inversion, trivial ones dropped."""
    if f.strands != p:
        raise ValueError(f"factor on {f.strands} strands, expected {p}")
    images = artin_automorphism(f.braid())
    seen: dict = {}
    for j, im in enumerate(images, 1):
        r = canonical_relator(im + (-j,))
        if r:
            seen.setdefault(r, None)
    return [FreeWord(p, r) for r in seen]


def vk_presentation(F: MonodromyFactorization) -> GroupPresentation:
    seen: dict = {}
    for f in F.factors:
        for r in vk_relations(f, F.degree):
            seen.setdefault(r.letters, None)
    return GroupPresentation(F.degree, tuple(seen))


def projective_closure(P: GroupPresentation) -> GroupPresentation:
    return P.with_relators([tuple(range(1, P.generator_count + 1))])


def quotient_by_generator_squares(P: GroupPresentation) -> GroupPresentation:
    return P.with_relators([(j, j) for j in range(1, P.generator_count + 1)])


@dataclass
class GaloisPi1:
    presentation: GroupPresentation
    invariants: AbelianInvariants
    index: int
    # certified by coset enumeration; None when the bound was hit
    order: int | None = None
    projective: bool = False
    parent: GroupPresentation | None = field(default=None, repr=False)

    def to_json(self) -> dict:
        return {
            "projective": self.projective,
            "index": self.index,
            "presentation": self.presentation.to_json(),
            "abelianization": self.invariants.to_json(),
            "order": None if self.order is None else str(self.order),
        }


def _check_map(P: GroupPresentation, psi: GeometricMap) -> None:
    check_homomorphism(P, psi.images)
    size = len(generated_group(psi.images, psi.sheets))
    if size != factorial(psi.sheets):
        raise NotSurjective(f"image of psi has order {size}, not {psi.sheets}! = {factorial(psi.sheets)}")


def galois_pi1(
    F: MonodromyFactorization,
    psi: GeometricMap,
    projective: bool = False,
    max_cosets: int = 100_000,
    strict: bool = False,
) -> GaloisPi1:
    """pi_1 of the Galois cover as ker(psi) in the squares quotient.

    The kernel's order is certified by coset enumeration when its
    abelianization is finite; with ``strict`` a hit coset bound raises
    instead of leaving ``order`` as None.
    """
    P = vk_presentation(F)
    if projective:
        P = projective_closure(P)
    Q = quotient_by_generator_squares(P)
    _check_map(Q, psi)
    kernel = reidemeister_schreier(Q, psi.images)
    invariants = abelianize(kernel)
    order = None
    if invariants.free_rank == 0:
        if strict:
            order = todd_coxeter(kernel, (), max_cosets).index
        else:
            try:
                order = todd_coxeter(kernel, (), max_cosets).index
            except CosetEnumerationExceeded:
                log.info("kernel order not certified within %d cosets", max_cosets)
    return GaloisPi1(kernel, invariants, factorial(psi.sheets), order, projective, Q)


def affine_galois_pi1(F: MonodromyFactorization, psi: GeometricMap, max_cosets: int = 100_000) -> GaloisPi1:
    return galois_pi1(F, psi, projective=False, max_cosets=max_cosets)


def projective_galois_pi1(F: MonodromyFactorization, psi: GeometricMap, max_cosets: int = 100_000) -> GaloisPi1:
    return galois_pi1(F, psi, projective=True, max_cosets=max_cosets)


def validate_factorization(F: MonodromyFactorization) -> bool:
    """True iff the ordered product of the factors is the full twist."""
    if F.degree < 2:
        return not F.factors
    return braids_equal(F.product(), full_twist(F.degree))


def find_geometric_map(P: GroupPresentation, sheets: int) -> GeometricMap | None:
    """First assignment of transpositions (lexicographic) that respects P and is onto S_n."""
    p = P.generator_count
    transpositions = [
        Permutation.transposition(i, j, sheets) for i in range(1, sheets + 1) for j in range(i + 1, sheets + 1)
    ]
    # check each relator as soon as its largest generator is assigned
    by_last: dict[int, list] = {}
    for r in P.relators:
        if r:
            by_last.setdefault(max(abs(x) for x in r), []).append(r)
    chosen: list[Permutation] = []

    def search(j: int) -> GeometricMap | None:
        if j > p:
            if len(generated_group(chosen, sheets)) == factorial(sheets):
                return GeometricMap(sheets, tuple(chosen))
            return None
        for t in transpositions:
            chosen.append(t)
            if all(word_image(r, chosen).is_identity() for r in by_last.get(j, ())):
                found = search(j + 1)
                if found is not None:
                    return found
            chosen.pop()
        return None

    if sheets < 2 or p == 0:
        return None
    return search(1)


def monodromy_preserves_product(F: MonodromyFactorization) -> bool:
    """Every factor braid fixes x_1 x_2 ... x_p in the free group."""
    prod_word = tuple(range(1, F.degree + 1))
    for b in F.braids():
        images = artin_automorphism(b)
        w: list[int] = []
        for x in prod_word:
            w.extend(images[x - 1])
        if free_reduce(w) != prod_word:
            return False
    return True


def psi_of_product(psi: GeometricMap, F: MonodromyFactorization) -> tuple[Permutation, Permutation]:
    """psi(x_1...x_p) and psi(beta(x_1...x_p)) for beta the product of all factors."""
    prod_word = tuple(range(1, F.degree + 1))
    images = artin_automorphism(F.product())
    moved: list[int] = []
    for x in prod_word:
        moved.extend(images[x - 1])
    return word_image(prod_word, psi.images), word_image(free_reduce(moved), psi.images)


def conjugate_factorization(F: MonodromyFactorization, q: BraidWord) -> MonodromyFactorization:
    """Replace every factor f by q f q^-1."""
    factors = []
    for f in F.factors:
        factors.append(MonodromyFactor(q * f.conjugator, f.exponent, f.kind, f.core))
    return MonodromyFactorization(F.degree, tuple(factors))


__all__ = [
    "GaloisPi1",
    "GeometricMap",
    "MonodromyFactor",
    "MonodromyFactorization",
    "NotSurjective",
    "affine_galois_pi1",
    "conjugate_factorization",
    "find_geometric_map",
    "galois_pi1",
    "monodromy_preserves_product",
    "projective_closure",
    "projective_galois_pi1",
    "psi_of_product",
    "quotient_by_generator_squares",
    "validate_factorization",
    "vk_presentation",
    "vk_relations",
]
