"""Unit tests for braid words, the reduction oracle, and degree arithmetic."""

import random

import pytest

from braidcensus.perm import Permutation
from braidcensus.words import (
    alpha_word,
    band_beta_word,
    band_word,
    beta_word,
    cable_hom,
    commutator,
    conjugate,
    exponent_sum,
    free_reduce,
    half_twist_band,
    handle_reduce,
    inverse,
    is_trivial,
    power,
    progression_degrees,
    special_params,
    strand_permutation,
    two_generator_relators,
    word,
    words_equal,
)


def test_free_reduction_and_word_algebra():
    assert free_reduce((1, -1, 2, 3, -3, -2)) == ()
    assert inverse((1, 2, -3)) == (3, -2, -1)
    assert power((1, 2), -2) == (-2, -1, -2, -1)
    assert conjugate((2,), (1,)) == (1, 2, -1)
    assert commutator((1,), (2,)) == (-1, -2, 1, 2)
    assert exponent_sum((1, 1, -2, 3)) == 2


def test_reduction_oracle_decides_the_braid_relations():
    # far commutation and adjacent braiding reduce to the empty word
    assert is_trivial((1, 3, -1, -3))
    assert is_trivial((1, 2, 1, -2, -1, -2))
    # adjacent generators do not commute
    assert not is_trivial((1, 2, -1, -2))
    assert not is_trivial((1,))
    assert words_equal((1, 2, 1), (2, 1, 2))


def test_reduction_oracle_agrees_with_the_symmetric_projection():
    rng = random.Random(17)
    k = 5
    letters = [i for i in range(1, k)] + [-i for i in range(1, k)]
    for _ in range(200):
        w = tuple(rng.choice(letters) for _ in range(rng.randrange(1, 12)))
        assert is_trivial(w + inverse(w))
        if is_trivial(w):
            assert strand_permutation(w, k).is_identity()
    for _ in range(50):
        w = tuple(rng.choice(letters) for _ in range(8))
        assert exponent_sum(handle_reduce(w)) == exponent_sum(w)


def test_full_cycle_and_band_projections():
    for k in (3, 4, 5, 6):
        assert strand_permutation(alpha_word(k), k) == Permutation.from_cycles(
            [tuple(range(1, k + 1))], k
        )
        assert strand_permutation(beta_word(k), k) == Permutation.from_cycles(
            [(1,) + tuple(range(3, k + 1))], k
        )
    assert strand_permutation(band_word(2, 4), 5) == Permutation.from_cycles(
        [(2, 3, 4)], 5
    )
    assert band_beta_word(2, 4) == band_word(2, 4) + (2,)
    assert exponent_sum(half_twist_band(4)) == 6


def test_two_generator_relators_are_trivial():
    for k in range(3, 8):
        for name, lhs, rhs in two_generator_relators(k):
            assert words_equal(lhs, rhs), (k, name)


def test_degree_parameter_errors():
    with pytest.raises(ValueError):
        special_params(2, 10)
    with pytest.raises(ValueError):
        special_params(4, 12)


def test_degree_progressions_have_fixed_step():
    table = progression_degrees(5, 100)
    assert table[1][:3] == [5, 25, 45]
    assert table[2][:2] == [20, 40]
    assert table[3][:2] == [21, 41]
    assert table[4][:3] == [16, 36, 56]


def test_special_parameter_records_are_internally_consistent():
    for k in (3, 5, 6, 7):
        for n in range(2, 61):
            for rec in special_params(k, n):
                assert rec["n"] == n
                assert rec["l"] >= 1 or rec["case"] == 1
                assert rec["alpha_unit"] in ("a", "b")
                assert rec["beta_unit"] in ("a", "b")
                if rec["t_coprime_to"] is not None:
                    assert rec["t_coprime_to"] == k * (k - 1)


def test_cabling_words():
    # doubling a single strand pair: the doubled generator has exponent
    # sum 1 + m*m for m = 2
    assert exponent_sum(cable_hom(2, 2, (1,))[0]) == 5
    images = cable_hom(3, 2)
    assert len(images) == 2
    assert words_equal(
        images[0] + images[1] + images[0],
        images[1] + images[0] + images[1],
    )


def test_word_helper_validates_letters():
    with pytest.raises(ValueError):
        word((0,))
    assert word((1, -2)) == (1, -2)
