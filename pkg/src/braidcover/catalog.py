"""Pairs of Galois covers with equal Chern numbers and different pi_1.

X_{s,t} is the Galois cover of F_0 embedded by (s+t)C + 2tE_0 and Y_{s,t}
that of F_1 embedded by sC + 2tE_0. Both embeddings have the same degree
and the same E.K, so the covers share c1^2 and c2. Their fundamental groups
are predicted as (n - 2) copies of Z/gcd(a, b).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt
from typing import Callable, Iterable

from .invariants import (
    BranchCurveNumerics,
    CoverInvariants,
    HirzebruchEmbedding,
    decimal_string,
    full_pipeline,
    pipeline_stages,
)
from .presentation import AbelianInvariants

GCD_RULE = "hirzebruch-gcd"
ODD_COPRIME_RULE = "odd-coprime"
K3_RULE = "k3-conjectural"


@dataclass(frozen=True)
class PairSpec:
    s: int
    t: int

    def __post_init__(self):
        if self.s < 1 or self.t < 1:
            raise ValueError(f"need s, t >= 1, got s={self.s}, t={self.t}")

    @property
    def s_odd(self) -> bool:
        return self.s % 2 == 1

    @property
    def t_odd(self) -> bool:
        return self.t % 2 == 1

    @property
    def coprime(self) -> bool:
        return gcd(self.s, self.t) == 1

    @property
    def x_embedding(self) -> HirzebruchEmbedding:
        return HirzebruchEmbedding(0, self.s + self.t, 2 * self.t)

    @property
    def y_embedding(self) -> HirzebruchEmbedding:
        return HirzebruchEmbedding(1, self.s, 2 * self.t)


@dataclass(frozen=True)
class PredictedPi1:
    copies: int
    modulus: int
    rule: str
    conjectural: bool = False

    @property
    def invariants(self) -> AbelianInvariants:
        if self.modulus == 1 or self.copies <= 0:
            return AbelianInvariants()
        return AbelianInvariants(0, (self.modulus,) * self.copies)

    @property
    def order(self) -> int:
        return self.modulus ** max(self.copies, 0)

    def to_json(self) -> dict:
        return {
            "modulus": self.modulus,
            "copies": self.copies,
            "order": decimal_string(self.order),
            "order_power": f"{self.modulus}^{max(self.copies, 0)}",
            "invariants": self.invariants.to_json(),
            "rule": self.rule,
            "conjectural": self.conjectural,
        }

    def __str__(self):
        if self.modulus == 1:
            return "0"
        return f"(Z/{self.modulus})^{self.copies}"


def pi1_predictor(emb: HirzebruchEmbedding, rule: str = GCD_RULE) -> PredictedPi1:
    """(n - 2) copies of Z/gcd(a, b), n the embedding degree."""
    return PredictedPi1(emb.degree - 2, gcd(emb.a, emb.b), rule)


def pi1_order(inv: AbelianInvariants) -> int:
    return inv.order()


@dataclass(frozen=True)
class ExampleReport:
    spec: PairSpec
    x: CoverInvariants | None
    y: CoverInvariants | None
    pi1_x: PredictedPi1
    pi1_y: PredictedPi1
    degree: int
    conjectural: bool = False
    x_branch: BranchCurveNumerics | None = None

    @property
    def chern_equal(self) -> bool:
        if self.x is None or self.y is None:
            return False
        return self.x.c1sq == self.y.c1sq and self.x.c2 == self.y.c2

    @property
    def groups_distinct(self) -> bool:
        return self.pi1_x.invariants != self.pi1_y.invariants

    @property
    def signature_sign(self) -> int | None:
        return None if self.x is None else self.x.signature_sign

    def row(self) -> dict:
        """CSV/markdown row; big values as decimal strings."""
        x = self.x
        return {
            "s": self.spec.s,
            "t": self.spec.t,
            "n": self.degree,
            "m": x.m if x else "",
            "d": self.x_branch.d if self.x_branch else "",
            "rho": self.x_branch.rho if self.x_branch else "",
            "c1sq_reduced": str(x.reduced_c1sq) if x else "",
            "c2_reduced": str(x.reduced_c2) if x else "",
            "signature_sign": x.signature_sign if x else "",
            "cX": self.pi1_x.modulus,
            "cY": self.pi1_y.modulus,
            "pi1X_order": decimal_string(self.pi1_x.order),
            "pi1Y_order": decimal_string(self.pi1_y.order),
            "chern_equal": self.chern_equal,
            "groups_distinct": self.groups_distinct,
        }

    def to_json(self) -> dict:
        out = {"s": self.spec.s, "t": self.spec.t, "n": self.degree}
        for name, inv in (("X", self.x), ("Y", self.y)):
            if inv is not None:
                out[name] = {
                    "m": inv.m,
                    "c1sq": decimal_string(inv.c1sq),
                    "c2": decimal_string(inv.c2),
                    "signature": decimal_string(inv.signature),
                    "c1sq_reduced": str(inv.reduced_c1sq),
                    "c2_reduced": str(inv.reduced_c2),
                    "signature_reduced": str(inv.reduced_signature),
                    "minimal_general_type": inv.minimal_general_type,
                }
        out["pi1_X"] = self.pi1_x.to_json()
        out["pi1_Y"] = self.pi1_y.to_json()
        out["chern_equal"] = self.chern_equal
        out["groups_distinct"] = self.groups_distinct
        out["signature_sign"] = self.signature_sign
        out["conjectural"] = self.conjectural
        return out

    def k3_json(self) -> dict:
        return {
            "a": self.spec.s,
            "b": self.spec.t,
            "n": self.degree,
            "pi1_X": self.pi1_x.to_json(),
            "pi1_Y": self.pi1_y.to_json(),
            "groups_distinct": self.groups_distinct,
            "conjectural": True,
        }


CSV_COLUMNS = (
    "s", "t", "n", "m", "d", "rho", "c1sq_reduced", "c2_reduced", "signature_sign",
    "cX", "cY", "pi1X_order", "pi1Y_order", "chern_equal", "groups_distinct",
)


def build_pair(spec: PairSpec) -> ExampleReport:
    ex, ey = spec.x_embedding, spec.y_embedding
    _, x_branch, x = pipeline_stages(ex)
    y = full_pipeline(ey)
    tag = GCD_RULE
    if spec.s_odd and spec.t_odd and spec.coprime:
        tag = ODD_COPRIME_RULE
    px, py = pi1_predictor(ex, tag), pi1_predictor(ey, tag)
    if tag == ODD_COPRIME_RULE:
        assert px.modulus == 2 and py.modulus == 1, (spec, px, py)
    return ExampleReport(spec, x, y, px, py, ex.degree, x_branch=x_branch)


def search_pairs(
    s_max: int,
    t_max: int,
    odd_only: bool = False,
    coprime_only: bool = False,
    where: Callable[[PairSpec], bool] | None = None,
) -> list[ExampleReport]:
    """All pairs with s <= s_max, t <= t_max passing the filters, sorted by (s + t, t)."""
    if s_max < 1 or t_max < 1:
        raise ValueError("bounds must be >= 1")
    specs = []
    for s in range(1, s_max + 1):
        for t in range(1, t_max + 1):
            spec = PairSpec(s, t)
            if odd_only and not (spec.s_odd and spec.t_odd):
                continue
            if coprime_only and not spec.coprime:
                continue
            if where is not None and not where(spec):
                continue
            specs.append(spec)
    specs.sort(key=lambda p: (p.s + p.t, p.t))
    return [build_pair(p) for p in specs]


def first_pair_exceeding(bound: int, t_max: int = 11, s_max: int = 1) -> ExampleReport | None:
    """First odd coprime pair (in search order) with |pi_1(X)| > bound."""
    for report in search_pairs(s_max, t_max, odd_only=True, coprime_only=True):
        if report.pi1_x.order > bound:
            return report
    return None


def _is_square(x: int) -> bool:
    return x >= 0 and isqrt(x) ** 2 == x


def k3_conjectural_pair(a: int, b: int) -> ExampleReport:
    """K3 surfaces of degree a^2 b^2 with minimal embedding degrees a^2 and b^2.

    Only the group prediction is made; Chern numbers of the covers are not
    computed. The result is always flagged conjectural.
    """
    if a == b:
        raise ValueError("a and b must be distinct")
    for v in (a, b):
        if v < 1 or v % 2 or not _is_square(v):
            raise ValueError(f"{v} is not a positive even perfect square")
    n = a * a * b * b
    px = PredictedPi1(n - 2, b, K3_RULE, conjectural=True)
    py = PredictedPi1(n - 2, a, K3_RULE, conjectural=True)
    return ExampleReport(PairSpec(a, b), None, None, px, py, n, conjectural=True)


@dataclass(frozen=True)
class SignatureEntry:
    s: int
    t: int
    n: int
    sign: int

    @property
    def flagged(self) -> bool:
        # positivity is expected for the whole family but fails for small n
        return self.sign <= 0


def signature_survey(reports: Iterable[ExampleReport]) -> list[SignatureEntry]:
    """Computed signature sign of X for each report, with non-positive cases flagged."""
    return [SignatureEntry(r.spec.s, r.spec.t, r.degree, r.signature_sign) for r in reports if r.x is not None]
