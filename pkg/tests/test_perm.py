"""Unit tests for the permutation layer."""

import itertools
import math
import random

import pytest

from braidcensus.perm import (
    CycleType,
    GeneratedGroup,
    Permutation,
    all_partitions,
    all_permutations,
    canonical_of_cycle_type,
    centralizer_generators,
    conjugacy_class_representatives,
    conjugacy_witness,
    disjoint_product,
    invariant_subsets,
    r_component,
    tuple_conjugacy_witness,
)


def test_cycle_text_parsing_and_composition_convention():
    a = Permutation.from_cycles("(1,2)", 3)
    b = Permutation.from_cycles("(2,3)", 3)
    # (a*b)(x) = a(b(x))
    assert (a * b)(3) == 1
    assert (b * a)(1) == 3
    assert a * a == Permutation.identity(3)


def test_inverse_power_and_conjugation():
    g = Permutation.from_cycles("(1,2,3,4,5)", 6)
    assert g * g.inv() == Permutation.identity(6)
    assert g**5 == Permutation.identity(6)
    assert g**-2 == (g.inv()) ** 2
    h = Permutation.from_cycles("(1,6)", 6)
    assert g.conj(h) == h * g * h.inv()
    assert g.conj(h).cycle_type() == g.cycle_type()


def test_cycle_string_roundtrip():
    g = Permutation.from_cycles("(1,4)(2,5,6)", 7)
    assert Permutation.from_cycles(g.cycle_string(), 7) == g
    assert g.order() == 6
    assert set(g.support()) == {1, 2, 4, 5, 6}
    assert set(g.fixed_points()) == {3, 7}


def test_cycle_type_is_conjugation_invariant():
    rng = random.Random(3)
    for n in range(2, 9):
        pts = list(range(1, n + 1))
        for _ in range(50):
            a_imgs, g_imgs = pts[:], pts[:]
            rng.shuffle(a_imgs)
            rng.shuffle(g_imgs)
            a, g = Permutation(a_imgs), Permutation(g_imgs)
            assert a.conj(g).cycle_type() == a.cycle_type()


def test_conjugacy_witness_exists_iff_types_agree():
    for n in (4, 5):
        reps = conjugacy_class_representatives(n)
        for a in reps:
            for b in reps:
                w = conjugacy_witness(a, b)
                if a.cycle_type() == b.cycle_type():
                    assert w is not None and a.conj(w) == b
                else:
                    assert w is None


def _brute_tuple_conjugacy(aa, bb, n):
    for g in all_permutations(n):
        if all(x.conj(g) == y for x, y in zip(aa, bb)):
            return g
    return None


def test_tuple_conjugacy_matches_brute_force():
    rng = random.Random(5)
    n = 5
    pts = list(range(1, n + 1))

    def rand():
        imgs = pts[:]
        rng.shuffle(imgs)
        return Permutation(imgs)

    for _ in range(60):
        aa = tuple(rand() for _ in range(3))
        g = rand()
        bb = tuple(x.conj(g) for x in aa)
        w = tuple_conjugacy_witness(aa, bb)
        assert w is not None
        assert all(x.conj(w) == y for x, y in zip(aa, bb))
        cc = tuple(rand() for _ in range(3))
        expected = _brute_tuple_conjugacy(aa, cc, n)
        found = tuple_conjugacy_witness(aa, cc)
        assert (found is None) == (expected is None)
        if found is not None:
            assert all(x.conj(found) == y for x, y in zip(aa, cc))


def test_centralizer_generators_span_the_full_centralizer():
    for n in (4, 5, 6):
        for a in conjugacy_class_representatives(n):
            generated = GeneratedGroup(n, centralizer_generators(a)).order()
            counts = {}
            for part in a.cycle_type():
                counts[part] = counts.get(part, 0) + 1
            counts[1] = n - sum(a.cycle_type())
            expected = 1
            for length, m in counts.items():
                expected *= length**m * math.factorial(m)
            assert generated == expected


def test_generated_group_orbits_order_and_primitivity():
    g = GeneratedGroup(
        5,
        [
            Permutation.from_cycles("(1,2)", 5),
            Permutation.from_cycles("(1,2,3,4,5)", 5),
        ],
    )
    assert g.is_transitive()
    assert g.order() == 120
    assert g.is_primitive()
    blocks = GeneratedGroup(
        6,
        [
            Permutation.from_cycles("(1,2)(3,4)", 6),
            Permutation.from_cycles("(1,3,5)(2,4,6)", 6),
        ],
    )
    assert blocks.is_transitive()
    assert not blocks.is_primitive()
    split = GeneratedGroup(5, [Permutation.from_cycles("(1,2,3)", 5)])
    assert sorted(sorted(o) for o in split.orbits()) == [
        [1, 2, 3],
        [4],
        [5],
    ]


def test_transposition_in_primitive_transitive_group_forces_everything():
    # Jordan's criterion, spot-checked by explicit closure at small degree.
    for n in (4, 5, 6, 7):
        for seed_cycle in [(1, 2, 3, n), tuple(range(1, n + 1))]:
            gens = [
                Permutation.from_cycles([(1, 2)], n),
                Permutation.from_cycles([seed_cycle], n),
            ]
            g = GeneratedGroup(n, gens)
            if g.is_transitive() and g.is_primitive():
                assert g.order() == math.factorial(n)


def test_invariant_subsets_examples():
    p = Permutation.from_cycles("(1,2,3)", 4)
    assert [sorted(s) for s in invariant_subsets(p, 1)] == [[4]]
    p = Permutation.from_cycles("(1,2)(3,4)", 4)
    assert sorted(sorted(s) for s in invariant_subsets(p, 2)) == [
        [1, 2],
        [3, 4],
    ]
    p = Permutation.from_cycles("(1,2)(3,4,5)", 6)
    assert sorted(sorted(s) for s in invariant_subsets(p, 3)) == [
        [1, 2, 6],
        [3, 4, 5],
    ]
    with pytest.raises(ValueError):
        invariant_subsets(p, 6)


def test_r_component_extraction():
    p = Permutation.from_cycles("(1,2)(3,4)(5,6,7)", 8)
    comp = r_component(p, 2)
    assert comp.t == 2
    assert sorted(sorted(c) for c in comp.cycles) == [[1, 2], [3, 4]]
    assert r_component(p, 4).t == 0


def test_class_representatives_cover_all_partitions():
    for n in (5, 6, 7):
        reps = conjugacy_class_representatives(n)
        assert len(reps) == len(all_partitions(n))
        assert len({r.cycle_type() for r in reps}) == len(reps)
        for r in reps:
            parts = tuple(p for p in r.cycle_type())
            assert canonical_of_cycle_type(parts, n) == r


def test_cycle_type_ordering_and_disjoint_product():
    t = CycleType((2, 3, 2))
    assert tuple(t) == (3, 2, 2)
    a = Permutation.from_cycles("(1,2)", 6)
    b = Permutation.from_cycles("(3,4,5)", 6)
    assert disjoint_product(a, b).cycle_type() == (3, 2)


def test_serialization_is_one_indexed():
    g = Permutation.from_cycles("(1,2)(3,4)", 4)
    assert g.to_json() == [2, 1, 4, 3]
    assert Permutation([2, 1, 4, 3]) == g
