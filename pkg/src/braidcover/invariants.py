"""Exact Chern numbers of Galois covers of embedded surfaces.

Notation: n = deg X, E the hyperplane class, K the canonical class, and
m = deg S for the branch curve S of a generic projection X -> CP^2. S has
d nodes and rho cusps; its dual curve has degree mu; R is the ramification
curve. Everything is an exact Python int or Fraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from functools import lru_cache
from math import factorial


@lru_cache(maxsize=None)
def nfact(n: int) -> int:
    return factorial(n)


def decimal_string(x: int) -> str:
    # str(int) refuses more than sys.get_int_max_str_digits() digits; Decimal does not
    return format(Decimal(x), "f")


@dataclass(frozen=True)
class HirzebruchEmbedding:
    """F_k embedded by the divisor aC + bE_0 (C a fibre, E_0 the section with E_0^2 = k)."""

    k: int
    a: int
    b: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError(f"k must be >= 0, got {self.k}")
        if self.a < 1 or self.b < 1:
            raise ValueError(f"need a, b >= 1, got a={self.a}, b={self.b}")

    @property
    def degree(self) -> int:
        return 2 * self.a * self.b + self.b * self.b * self.k

    @property
    def hyperplane_dot_canonical(self) -> int:
        return -2 * self.a - 2 * self.b - self.b * self.k


@dataclass(frozen=True)
class BaseSurfaceData:
    n: int
    EK: int
    c1sq_base: int = 8
    c2_base: int = 4

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"degree n must be >= 1, got {self.n}")
        if (self.n + self.EK) % 2:
            raise ValueError(f"E.(E+K) = {self.n + self.EK} is odd; adjunction needs it even")

    @property
    def g_E(self) -> int:
        # adjunction: 2g - 2 = E.(E + K)
        return (self.n + self.EK + 2) // 2

    @property
    def e_E(self) -> int:
        return 2 - 2 * self.g_E


@dataclass(frozen=True)
class BranchCurveNumerics:
    m: int
    mu: int
    d: int
    rho: int
    g_R: int

    @property
    def e_R(self) -> int:
        return 2 - 2 * self.g_R

    def plucker_holds(self) -> bool:
        m = self.m
        return (
            m * (m - 1) == self.mu + 2 * self.d + 3 * self.rho
            and 2 * self.g_R == (m - 1) * (m - 2) - 2 * self.d - 2 * self.rho
        )


@dataclass(frozen=True)
class CoverInvariants:
    n: int
    m: int
    reduced_c1sq: Fraction
    reduced_c2: Fraction

    @property
    def n_factorial_scale(self) -> int:
        return nfact(self.n)

    @property
    def c1sq(self) -> int:
        return _exact(self.reduced_c1sq * self.n_factorial_scale, "c1^2")

    @property
    def c2(self) -> int:
        return _exact(self.reduced_c2 * self.n_factorial_scale, "c2")

    @property
    def reduced_signature(self) -> Fraction:
        """signature / n!, i.e. (c1^2 - 2 c2) / (3 n!)."""
        return (self.reduced_c1sq - 2 * self.reduced_c2) / 3

    @property
    def signature(self) -> int:
        num = self.c1sq - 2 * self.c2
        assert num % 3 == 0, "c1^2 - 2 c2 not divisible by 3"
        return num // 3

    @property
    def signature_sign(self) -> int:
        s = self.reduced_signature
        return (s > 0) - (s < 0)

    @property
    def minimal_general_type(self) -> bool:
        return self.m > 6

    def chern_key(self) -> tuple:
        return (self.n, self.reduced_c1sq, self.reduced_c2)


def _exact(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise ValueError(f"{what} = {x} is not an integer")
    return x.numerator


def hirzebruch_base(emb: HirzebruchEmbedding) -> BaseSurfaceData:
    return BaseSurfaceData(emb.degree, emb.hyperplane_dot_canonical)


def branch_curve_numerics(base: BaseSurfaceData) -> BranchCurveNumerics:
    """Solve the branch-curve numerics from (n, E.K, c1^2(X), c2(X)).

    R = K + 3E gives m = E.R and e(R) = -R.(R + K); the Lefschetz pencil gives
    mu = c2(X) + n - 2 e(E); the two Plucker formulas then fix d and rho.
    """
    n, EK, K2 = base.n, base.EK, base.c1sq_base
    m = EK + 3 * n
    e_R = -(2 * K2 + 9 * EK + 9 * n)
    if e_R % 2:
        raise ValueError(f"e(R) = {e_R} is odd")
    g_R = (2 - e_R) // 2
    mu = base.c2_base + n - 2 * base.e_E
    two_d_three_rho = m * (m - 1) - mu
    d_plus_rho = (m - 1) * (m - 2) // 2 - g_R
    rho = two_d_three_rho - 2 * d_plus_rho
    d = d_plus_rho - rho
    if min(d, rho, mu) < 0:
        raise ValueError(f"negative branch-curve numerics: mu={mu}, d={d}, rho={rho}")
    return BranchCurveNumerics(m, mu, d, rho, g_R)


def cover_chern(n: int, bc: BranchCurveNumerics) -> CoverInvariants:
    m, d, rho = bc.m, bc.d, bc.rho
    red_c1sq = Fraction((m - 6) ** 2, 4)
    red_c2 = Fraction(m * (m - 3), 2) + 3 - Fraction(3 * d, 4) - Fraction(4 * rho, 3)
    inv = CoverInvariants(n, m, red_c1sq, red_c2)
    _ = inv.c1sq + inv.c2  # raises on non-integral values
    return inv


def pipeline_stages(emb: HirzebruchEmbedding) -> tuple[BaseSurfaceData, BranchCurveNumerics, CoverInvariants]:
    base = hirzebruch_base(emb)
    bc = branch_curve_numerics(base)
    return base, bc, cover_chern(base.n, bc)


def full_pipeline(emb: HirzebruchEmbedding) -> CoverInvariants:
    return pipeline_stages(emb)[2]


def invariants_record(emb: HirzebruchEmbedding) -> dict:
    """Flat JSON-ready record; big integers as decimal strings."""
    base, bc, inv = pipeline_stages(emb)
    return {
        "k": emb.k,
        "a": emb.a,
        "b": emb.b,
        "n": base.n,
        "EK": base.EK,
        "g_E": base.g_E,
        "e_E": base.e_E,
        "m": bc.m,
        "mu": bc.mu,
        "d": bc.d,
        "rho": bc.rho,
        "g_R": bc.g_R,
        "e_R": bc.e_R,
        "c1sq": decimal_string(inv.c1sq),
        "c2": decimal_string(inv.c2),
        "signature": decimal_string(inv.signature),
        "c1sq_reduced": str(inv.reduced_c1sq),
        "c2_reduced": str(inv.reduced_c2),
        "signature_reduced": str(inv.reduced_signature),
        "signature_sign": inv.signature_sign,
        "minimal_general_type": inv.minimal_general_type,
    }
