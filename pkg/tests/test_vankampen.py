import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidcover.braid import BraidWord, Permutation, full_twist
from braidcover.cosets import group_order
from braidcover.presentation import AbelianInvariants, GroupPresentation, abelianize, tietze_simplify
from braidcover.schreier import NotAHomomorphism, word_image
from braidcover.vankampen import (
    GeometricMap,
    MonodromyFactor,
    MonodromyFactorization,
    NotSurjective,
    affine_galois_pi1,
    conjugate_factorization,
    find_geometric_map,
    monodromy_preserves_product,
    projective_closure,
    projective_galois_pi1,
    psi_of_product,
    quotient_by_generator_squares,
    validate_factorization,
    vk_presentation,
    vk_relations,
)
from braidcover.words import exponent_sums
from conftest import braid_words

TREFOIL = (1, 2, 1, -2, -1, -2)


def local(nu, p=2, conj=()):
    return MonodromyFactorization(p, (MonodromyFactor.half_twist_power(nu, p, BraidWord(p, conj)),))


def rels(f):
    return [w.letters for w in vk_relations(f, f.strands)]


def test_canonical_local_relations():
    node, cusp, branch = (local(nu).factors[0] for nu in (2, 3, 1))
    assert rels(node) == [(1, 2, -1, -2)]
    assert rels(cusp) == [TREFOIL]
    # beta(G1) G1^-1 for beta = s1 is G1 G2 G1^-1 G1^-1 ~ G2 G1^-1, i.e. G1 = G2
    assert rels(branch) == [(1, -2)]


def test_factor_validation():
    with pytest.raises(ValueError):
        MonodromyFactor(BraidWord(2), 2, "cusp")
    with pytest.raises(ValueError):
        MonodromyFactor(BraidWord(2), 0, "general")
    with pytest.raises(ValueError):
        MonodromyFactorization(3, (MonodromyFactor(BraidWord(2), 1, "branch"),))
    with pytest.raises(ValueError):
        vk_relations(MonodromyFactor(BraidWord(2), 1, "branch"), 3)


def test_vk_presentation_examples():
    P = vk_presentation(local(3))
    assert P == GroupPresentation(2, (TREFOIL,))
    assert abelianize(P) == AbelianInvariants(1)

    D = MonodromyFactorization(3, (MonodromyFactor.of_braid(full_twist(3)),))
    Q = vk_presentation(D)
    assert abelianize(Q) == AbelianInvariants(3)
    for r in Q.relators:
        assert sum(abs(x) for x in exponent_sums(r, 3)) == 0

    assert vk_presentation(MonodromyFactorization(2)) == GroupPresentation(2)


def test_projective_closure_examples():
    assert tietze_simplify(projective_closure(GroupPresentation(2))) == GroupPresentation(1)
    assert abelianize(projective_closure(GroupPresentation(2))) == AbelianInvariants(1)
    trefoil = GroupPresentation(2, (TREFOIL,))
    assert tietze_simplify(projective_closure(trefoil)) == GroupPresentation(1, ((1, 1),))
    assert abelianize(projective_closure(trefoil)) == AbelianInvariants(0, (2,))
    assert abelianize(projective_closure(GroupPresentation(1))).is_trivial()


def test_squares_quotient_examples():
    trefoil = GroupPresentation(2, (TREFOIL,))
    assert group_order(quotient_by_generator_squares(trefoil)) == 6
    assert abelianize(quotient_by_generator_squares(GroupPresentation(2))) == AbelianInvariants(0, (2, 2))
    assert group_order(quotient_by_generator_squares(GroupPresentation(1))) == 2


PSI2 = GeometricMap.uniform(2)


def test_affine_galois_examples():
    cusp = affine_galois_pi1(local(3), PSI2)
    assert cusp.invariants == AbelianInvariants(0, (3,))
    assert cusp.order == 3 and cusp.index == 2
    node = affine_galois_pi1(local(2), PSI2)
    assert node.invariants == AbelianInvariants(0, (2,)) and node.order == 2
    branch = affine_galois_pi1(local(1), PSI2)
    assert branch.invariants.is_trivial() and branch.order == 1


def test_projective_galois_examples():
    assert projective_galois_pi1(local(1), PSI2).order == 1
    assert projective_galois_pi1(local(2), PSI2).order == 1


def test_projective_cusp_kernel_is_trivial():
    # <a, b | aba = bab, ab, a^2, b^2>: b = a^-1 turns aba = bab into a^2 = 1,
    # so the squares quotient is Z/2 and maps isomorphically onto S_2
    F = local(3)
    Q = quotient_by_generator_squares(projective_closure(vk_presentation(F)))
    assert group_order(Q) == 2
    res = projective_galois_pi1(F, PSI2)
    assert res.invariants.is_trivial() and res.order == 1


def test_smooth_quadric():
    # generic projection of a quadric surface: double cover branched over a conic
    F = MonodromyFactorization(2, (MonodromyFactor(BraidWord(2), 1, "branch"),) * 2)
    assert validate_factorization(F)
    assert abelianize(vk_presentation(F)) == AbelianInvariants(1)
    assert abelianize(projective_closure(vk_presentation(F))) == AbelianInvariants(0, (2,))
    assert projective_galois_pi1(F, PSI2).order == 1


def test_three_generic_lines():
    F = MonodromyFactorization(3, (
        MonodromyFactor(BraidWord(3), 2, "node"),
        MonodromyFactor(BraidWord(3, (2,)), 2, "node"),
        MonodromyFactor(BraidWord(3, (1, 2)), 2, "node"),
    ))
    assert validate_factorization(F)
    P = vk_presentation(F)
    assert abelianize(P) == AbelianInvariants(3)
    # one commutation-type relation per node
    assert len(P.relators) == 3


def test_map_errors():
    bad = GeometricMap(3, (Permutation.transposition(1, 2, 3), Permutation.transposition(1, 2, 3)))
    with pytest.raises(NotSurjective):
        affine_galois_pi1(local(3), bad)
    # node relation forces commuting images; (12), (13) do not commute
    noncommuting = GeometricMap(3, (Permutation.transposition(1, 2, 3), Permutation.transposition(1, 3, 3)))
    with pytest.raises(NotAHomomorphism):
        affine_galois_pi1(local(2), noncommuting)
    with pytest.raises(ValueError):
        GeometricMap(3, (Permutation.from_cycles([(1, 2, 3)], 3),))


def test_find_geometric_map():
    assert find_geometric_map(quotient_by_generator_squares(vk_presentation(local(3))), 2) == PSI2
    psi3 = find_geometric_map(quotient_by_generator_squares(vk_presentation(local(3))), 3)
    assert psi3 is not None
    # trefoil / squares = S_3 mapped onto S_3: the Galois cover kernel is trivial
    assert affine_galois_pi1(local(3), psi3).order == 1
    # a node cannot map onto S_3
    assert find_geometric_map(quotient_by_generator_squares(vk_presentation(local(2))), 3) is None


def test_validate_factorization_examples():
    D = MonodromyFactorization(3, (MonodromyFactor.of_braid(full_twist(3)),))
    assert validate_factorization(D)
    assert validate_factorization(local(2))
    assert not validate_factorization(local(1))


def test_json_round_trip():
    F = MonodromyFactorization(3, (
        MonodromyFactor(BraidWord(3, (2, -1)), 3, "cusp"),
        MonodromyFactor.of_braid(full_twist(3)),
    ))
    assert MonodromyFactorization.from_json(F.to_json()) == F
    assert GeometricMap.from_json(PSI2.to_json()) == PSI2
    with pytest.raises(ValueError):
        MonodromyFactorization.from_json({"degree": 2, "factors": [{"exponent": -1}]})


@st.composite
def factorizations(draw, max_p=5, max_factors=4):
    p = draw(st.integers(2, max_p))
    factors = []
    for _ in range(draw(st.integers(0, max_factors))):
        q = draw(braid_words(min_strands=p, max_strands=p, max_len=4))
        nu = draw(st.integers(1, 3))
        factors.append(MonodromyFactor.half_twist_power(nu, p, q))
    return MonodromyFactorization(p, tuple(factors))


@settings(max_examples=150)
@given(factorizations())
def test_relators_have_zero_exponent_sum(F):
    P = vk_presentation(F)
    for r in P.relators:
        assert sum(exponent_sums(r, F.degree)) == 0
    # (1, ..., 1) is orthogonal to every row of the relation matrix
    assert abelianize(P).free_rank >= 1


@settings(max_examples=100)
@given(st.data())
def test_global_conjugation_invariance(data):
    F = data.draw(factorizations(max_p=4))
    q = data.draw(braid_words(min_strands=F.degree, max_strands=F.degree, max_len=5))
    G = conjugate_factorization(F, q)
    assert abelianize(vk_presentation(G)) == abelianize(vk_presentation(F))


@settings(max_examples=100)
@given(factorizations())
def test_product_of_generators_is_fixed(F):
    assert monodromy_preserves_product(F)
    psi = GeometricMap.uniform(F.degree)
    before, after = psi_of_product(psi, F)
    assert before == after


@settings(max_examples=100)
@given(factorizations(max_p=4, max_factors=3))
def test_uniform_double_cover_map_always_respects_relations(F):
    # zero exponent sums make every relator even, hence trivial in S_2
    res = affine_galois_pi1(F, GeometricMap.uniform(F.degree), max_cosets=2000)
    assert res.index == 2


@settings(max_examples=60)
@given(factorizations(max_p=4, max_factors=3))
def test_found_maps_respect_relations(F):
    Q = quotient_by_generator_squares(vk_presentation(F))
    psi = find_geometric_map(Q, 3)
    if psi is not None:
        for r in Q.relators:
            assert word_image(r, psi.images).is_identity()
        assert all(im.is_transposition() for im in psi.images)
