from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidcover.braid import (
    BraidWord,
    FreeWord,
    Permutation,
    artin_action,
    braids_equal,
    compose,
    full_twist,
    model_branch_monodromy,
    permutation_image,
    sigma,
)
from conftest import braid_words, free_words


def burau(w: BraidWord, t=Fraction(2)):
    """Unreduced Burau matrix at a numeric t; a homomorphism, so equal braids agree."""
    p = w.strands
    out = [[Fraction(int(i == j)) for j in range(p)] for i in range(p)]
    for x in w.letters:
        i = abs(x) - 1
        g = [[Fraction(int(r == c)) for c in range(p)] for r in range(p)]
        if x > 0:
            g[i][i], g[i][i + 1], g[i + 1][i], g[i + 1][i + 1] = 1 - t, t, Fraction(1), Fraction(0)
        else:
            g[i][i], g[i][i + 1], g[i + 1][i], g[i + 1][i + 1] = Fraction(0), Fraction(1), 1 / t, 1 - 1 / t
        out = [[sum(out[r][k] * g[k][c] for k in range(p)) for c in range(p)] for r in range(p)]
    return out


def B(p, *letters):
    return BraidWord(p, letters)


def test_compose_examples():
    assert compose(B(2, 1), B(2, -1)).letters == ()
    assert compose(B(3, 1), B(3, 2)).letters == (1, 2)
    w = B(3, 1, 2) ** 3
    assert compose(w, w.inverse()).letters == ()


def test_compose_strand_mismatch():
    with pytest.raises(ValueError):
        compose(B(2, 1), B(3, 1))


def test_letter_out_of_range():
    with pytest.raises(ValueError):
        B(3, 3)
    with pytest.raises(ValueError):
        B(3, 0)


def test_permutation_image_examples():
    assert permutation_image(B(3, 1)) == Permutation.transposition(1, 2, 3)
    assert permutation_image(full_twist(3)).is_identity()
    for nu in range(1, 9):
        perm = permutation_image(model_branch_monodromy(nu))
        assert perm.is_identity() == (nu % 2 == 0)
        if nu % 2:
            assert perm == Permutation.transposition(1, 2, 2)


def test_permutation_image_of_full_twist_step_by_step():
    # (s1 s2)^3 on 3 strands: compose the transpositions by hand
    t12, t23 = Permutation.transposition(1, 2, 3), Permutation.transposition(2, 3, 3)
    acc = Permutation.identity(3)
    for _ in range(3):
        acc = acc * t12 * t23
    assert acc.is_identity()


@pytest.mark.parametrize("nu,expected", [(1, (1,)), (2, (1, 1)), (3, (1, 1, 1))])
def test_model_branch_monodromy(nu, expected):
    w = model_branch_monodromy(nu)
    assert w.strands == 2 and w.letters == expected


def test_full_twist_words():
    assert full_twist(2).letters == (1, 1)
    assert full_twist(3).letters == (1, 2, 1, 2, 1, 2)
    assert len(full_twist(3)) == 6
    for p in range(2, 7):
        assert permutation_image(full_twist(p)).is_identity()
    with pytest.raises(ValueError):
        full_twist(1)


def test_artin_action_examples():
    x1x2 = FreeWord(2, (1, 2))
    assert artin_action(BraidWord.identity(2), x1x2) == x1x2
    s1 = B(2, 1)
    assert artin_action(s1, FreeWord(2, (1,))).letters == (1, 2, -1)
    assert artin_action(s1, FreeWord(2, (2,))).letters == (1,)
    assert artin_action(s1, x1x2) == x1x2
    # s1^2: x1 -> (x1 x2) x1 (x1 x2)^-1
    assert artin_action(B(2, 1, 1), FreeWord(2, (1,))).letters == (1, 2, 1, -2, -1)


def test_artin_action_rank_mismatch():
    with pytest.raises(ValueError):
        artin_action(B(3, 1), FreeWord(2, (1,)))


def test_braids_equal_examples():
    assert braids_equal(B(3, 1, 2, 1), B(3, 2, 1, 2))
    assert not braids_equal(B(3, 1), B(3, 2))
    d = full_twist(3)
    assert braids_equal(d * B(3, 1), B(3, 1) * d)
    # the action agrees generator by generator for the braid relation
    for j in (1, 2, 3):
        x = FreeWord(3, (j,))
        assert artin_action(B(3, 1, 2, 1), x) == artin_action(B(3, 2, 1, 2), x)


def test_braids_equal_against_burau():
    pairs = [
        (B(3, 1, 2, 1), B(3, 2, 1, 2)),
        (full_twist(3) * B(3, 1), B(3, 1) * full_twist(3)),
        (B(4, 1, 3), B(4, 3, 1)),
    ]
    for a, b in pairs:
        assert braids_equal(a, b)
        assert burau(a) == burau(b)
    assert not braids_equal(B(4, 1, 2), B(4, 2, 1))
    assert burau(B(4, 1, 2)) != burau(B(4, 2, 1))


def test_far_commutation_and_non_commutation():
    assert braids_equal(B(5, 1, 4), B(5, 4, 1))
    assert not braids_equal(B(3, 1, 2), B(3, 2, 1))
    # same permutation image, different braid
    assert not braids_equal(B(2, 1, 1), BraidWord.identity(2))


def test_textual_format():
    assert BraidWord.parse("1 1 1", 2).letters == (1, 1, 1)
    assert BraidWord.parse("1 -2  2 3", 4).letters == (1, 3)
    with pytest.raises(ValueError):
        BraidWord.parse("0 1", 3)


@given(braid_words())
def test_compose_with_inverse_is_empty(w):
    assert compose(w, w.inverse()).letters == ()


@given(st.data())
def test_permutation_image_is_homomorphism(data):
    a = data.draw(braid_words())
    b = data.draw(braid_words(min_strands=a.strands, max_strands=a.strands))
    assert permutation_image(a * b) == permutation_image(a) * permutation_image(b)


@settings(max_examples=200)
@given(braid_words(max_len=15))
def test_artin_action_preserves_product(beta):
    prod = FreeWord(beta.strands, tuple(range(1, beta.strands + 1)))
    assert artin_action(beta, prod) == prod


@given(st.data())
def test_artin_action_is_an_action(data):
    a = data.draw(braid_words(max_len=8))
    b = data.draw(braid_words(min_strands=a.strands, max_strands=a.strands, max_len=8))
    v = data.draw(free_words(a.strands))
    assert artin_action(a * b, v) == artin_action(a, artin_action(b, v))


@given(st.data())
def test_artin_action_is_a_homomorphism_in_the_word(data):
    beta = data.draw(braid_words(max_len=8))
    u = data.draw(free_words(beta.strands))
    v = data.draw(free_words(beta.strands))
    assert artin_action(beta, u * v) == artin_action(beta, u) * artin_action(beta, v)


@given(braid_words(max_len=10))
def test_artin_images_permute_generators_up_to_conjugacy(beta):
    # the left action composes right to left, so x_j goes to a conjugate of
    # x_k with k given by the permutation of the reversed word
    perm = permutation_image(BraidWord(beta.strands, tuple(reversed(beta.letters))))
    for j in range(1, beta.strands + 1):
        img = artin_action(beta, FreeWord(beta.strands, (j,))).letters
        # a reduced conjugate w x_k w^-1 has odd length with x_k in the middle
        mid = img[len(img) // 2]
        assert len(img) % 2 == 1 and mid > 0
        assert mid == perm(j)


@pytest.mark.parametrize("p", [2, 3, 4, 5])
def test_full_twist_is_central(p):
    d = full_twist(p)
    for i in range(1, p):
        s = sigma(i, p)
        assert braids_equal(d * s, s * d)


@settings(max_examples=50)
@given(braid_words(max_strands=4, max_len=8))
def test_full_twist_central_random(w):
    d = full_twist(w.strands)
    assert braids_equal(d * w, w * d)
