"""Homomorphisms from the k-strand braid group into symmetric groups.

A homomorphism is recorded by the images of the Artin generators; the
defining relations (far commutation and the length-3 braiding) are
checked on construction unless explicitly deferred.
"""

from __future__ import annotations

from dataclasses import dataclass

from .perm import (
    GeneratedGroup,
    Permutation,
    disjoint_product,
    tuple_conjugacy_witness,
)
from .words import perm_image


@dataclass(frozen=True)
class BraidHom:
    """Images of the k-1 Artin generators in S(n)."""

    k: int
    n: int
    sigma: tuple

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("k must be >= 2")
        if len(self.sigma) != self.k - 1:
            raise ValueError("need %d generator images" % (self.k - 1))
        if any(g.degree != self.n for g in self.sigma):
            raise ValueError("generator image degree mismatch")
        if not self.satisfies_relations():
            raise ValueError("generator images violate the braid relations")

    def satisfies_relations(self):
        s = self.sigma
        for i in range(len(s)):
            for j in range(i + 2, len(s)):
                if s[i] * s[j] != s[j] * s[i]:
                    return False
        for i in range(len(s) - 1):
            if s[i] * s[i + 1] * s[i] != s[i + 1] * s[i] * s[i + 1]:
                return False
        return True

    def __call__(self, w):
        return perm_image(w, self.sigma)

    def alpha(self):
        """Image of the full cycle: product of all generator images in order."""
        result = Permutation.identity(self.n)
        for g in self.sigma:
            result = result * g
        return result

    def beta(self):
        return self.alpha() * self.sigma[0]

    def is_cyclic(self):
        """True when all generator images coincide (abelian image)."""
        return all(g == self.sigma[0] for g in self.sigma)

    def group(self):
        return GeneratedGroup(self.n, self.sigma)

    def is_transitive(self):
        return self.group().is_transitive()

    def is_trivial(self):
        return all(g.is_identity() for g in self.sigma)

    def conjugate(self, g):
        return BraidHom(self.k, self.n, tuple(s.conj(g) for s in self.sigma))

    def extend(self, n):
        """The same images viewed in S(n), fixing the added points."""
        return BraidHom(self.k, n, tuple(s.extend(n) for s in self.sigma))

    def to_json(self):
        return {
            "k": self.k,
            "n": self.n,
            "sigma": [s.to_json() for s in self.sigma],
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            int(data["k"]),
            int(data["n"]),
            tuple(Permutation(im) for im in data["sigma"]),
        )


def from_sigma1_alpha(k, n, sigma1, alpha):
    """Reconstruct a homomorphism from the images of the first generator
    and of the full cycle, or return None when no homomorphism fits.

    The i-th generator image must be the (i-1)-fold cycle-conjugate of the
    first, and the generator images must multiply back to the cycle image.
    """
    sigma = [sigma1]
    for _ in range(k - 2):
        sigma.append(sigma[-1].conj(alpha))
    product = Permutation.identity(n)
    for g in sigma:
        product = product * g
    if product != alpha:
        return None
    try:
        return BraidHom(k, n, tuple(sigma))
    except ValueError:
        return None


def from_alpha_beta(k, n, alpha, beta):
    """Reconstruct a homomorphism from the full-cycle and successor images."""
    return from_sigma1_alpha(k, n, alpha.inv() * beta, alpha)


def cyclic_hom(k, g):
    """The homomorphism sending every generator to the same permutation."""
    return BraidHom(k, g.degree, tuple([g] * (k - 1)))


def product_hom(h1, h2):
    """Componentwise product acting on the disjoint union of the two point sets."""
    if h1.k != h2.k:
        raise ValueError("strand counts differ")
    return BraidHom(
        h1.k,
        h1.n + h2.n,
        tuple(disjoint_product(a, b) for a, b in zip(h1.sigma, h2.sigma)),
    )


def compose_word_map(h, words):
    """Precompose h with the map sending generator i to words[i-1]."""
    return BraidHom(len(words) + 1, h.n, tuple(h(w) for w in words))


def are_conjugate(h1, h2):
    """Conjugacy of homomorphisms by a single permutation of the points."""
    if (h1.k, h1.n) != (h2.k, h2.n):
        return False
    if h1.is_cyclic() != h2.is_cyclic():
        return False
    if h1.is_cyclic():
        return h1.sigma[0].cycle_type() == h2.sigma[0].cycle_type()
    return tuple_conjugacy_witness(h1.sigma, h2.sigma) is not None


def conjugacy_classes(homs):
    """Group a list of homomorphisms into conjugacy classes (list of lists)."""
    classes = []
    for h in homs:
        for cls in classes:
            if are_conjugate(cls[0], h):
                cls.append(h)
                break
        else:
            classes.append([h])
    return classes


# Named homomorphisms.


def standard_hom(k, n=None):
    """Generator i goes to the transposition (i, i+1)."""
    n = k if n is None else n
    return BraidHom(
        k, n, tuple(Permutation.from_cycles([(i, i + 1)], n) for i in range(1, k))
    )


def _cyc(text, n):
    return Permutation.from_cycles(text, n)


def exceptional_hom_six():
    """The transitive non-standard class on six strands and six points."""
    h = from_sigma1_alpha(
        6, 6, _cyc("(1,2)(3,4)(5,6)", 6), _cyc("(1,2,3)(4,5)", 6)
    )
    assert h is not None
    return h


def exceptional_homs_four():
    """The three transitive non-cyclic non-standard classes on four strands."""
    specs = [
        ("(1,2,3,4)", "(1,2)"),
        ("(1,3,2,4)", "(1,2,3,4)"),
        ("(1,2,3)", "(1,2)(3,4)"),
    ]
    out = []
    for s1, a in specs:
        h = from_sigma1_alpha(4, 4, _cyc(s1, 4), _cyc(a, 4))
        assert h is not None
        out.append(h)
    return out


def three_strand_catalog():
    """All transitive non-cyclic classes from three strands into S(4)..S(7),
    keyed by (n, index), each given by full-cycle and successor images."""
    table = {
        (4, 1): ("(1,2,3)", "(1,4)"),
        (4, 2): ("(1,2,3)", "(1,2)(3,4)"),
        (5, 1): ("(1,2,3)", "(1,4)(2,5)"),
        (6, 1): ("(1,2,3)(4,5,6)", "(1,2)(3,4)(5,6)"),
        (6, 2): ("(1,2,3)(4,5,6)", "(1,4)(2,6)(3,5)"),
        (6, 3): ("(1,2,3)(4,5,6)", "(1,2)(3,4)"),
        (6, 4): ("(1,2,3)(4,5,6)", "(1,4)(2,5)"),
        (6, 5): ("(1,2,3)(4,5,6)", "(1,2)"),
        (6, 6): ("(1,2,3)(4,5,6)", "(1,4)"),
        (6, 7): ("(1,2,3)", "(1,4)(2,5)(3,6)"),
        (7, 1): ("(1,2,3)(4,5,6)", "(1,4)(2,7)"),
        (7, 2): ("(1,2,3)(4,5,6)", "(1,2)(3,4)(5,7)"),
        (7, 3): ("(1,2,3)(4,5,6)", "(1,4)(2,5)(3,7)"),
    }
    out = {}
    for (n, idx), (a, b) in table.items():
        h = from_alpha_beta(3, n, _cyc(a, n), _cyc(b, n))
        assert h is not None
        out[(n, idx)] = h
    return out


def four_strand_five_points():
    """The unique transitive non-cyclic class from four strands into S(5)."""
    h = from_alpha_beta(4, 5, _cyc("(1,4)(2,5)", 5), _cyc("(3,5,4)", 5))
    assert h is not None
    return h


def four_strand_six_points():
    """The transitive classes from four strands into S(6) with distinct
    first and third generator images, by explicit generator triples."""
    specs = [
        ("(1,2)(3,4)(5,6)", "(1,5)(2,3)(4,6)", "(1,3)(2,4)(5,6)"),
        ("(1,2,4,3)", "(1,5,4,6)", "(3,4,2,1)"),
        ("(1,2)(3,4)", "(2,5)(4,6)", "(1,4)(2,3)"),
        ("(4,3,2,1)(5,6)", "(4,6,2,5)(1,3)", "(1,2,3,4)(5,6)"),
    ]
    return [
        BraidHom(4, 6, tuple(_cyc(s, 6) for s in spec)) for spec in specs
    ]


def five_strand_six_points():
    """The unique transitive non-cyclic class from five strands into S(6)."""
    specs = [
        "(1,2)(3,4)(5,6)",
        "(1,5)(2,3)(4,6)",
        "(1,3)(2,4)(5,6)",
        "(1,2)(3,5)(4,6)",
    ]
    return BraidHom(5, 6, tuple(_cyc(s, 6) for s in specs))


def six_strand_ten_points():
    """A transitive non-cyclic example on six strands and ten points."""
    specs = [
        "(1,2)(3,4)(5,6)",
        "(1,7)(3,8)(5,9)",
        "(3,6)(4,5)(7,10)",
        "(1,3)(2,4)(7,8)",
        "(3,5)(4,6)(8,9)",
    ]
    return BraidHom(6, 10, tuple(_cyc(s, 10) for s in specs))


def strand_collapse_words(k=4):
    """Words realizing the strand-merging map from four to three strands:
    the outer generators merge, the middle one survives."""
    if k != 4:
        raise ValueError("only the four-strand collapse is provided")
    return [(1,), (2,), (1,)]


def transposition_pair_hom(k):
    """Generator i goes to (1,2)(i+2,i+3), an intransitive non-cyclic map."""
    n = k + 2
    return BraidHom(
        k,
        n,
        tuple(
            _cyc("(1,2)(%d,%d)" % (i + 2, i + 3), n) for i in range(1, k)
        ),
    )


def doubled_standard_classes(k):
    """The four pairwise non-conjugate lifts of the standard map to 2k points.

    Each class projects onto the standard map under the pairing
    {2i-1, 2i} -> i; they differ by twisting with one-dimensional classes.
    """
    n2 = 2 * k

    def plain(i):
        return [(2 * i - 1, 2 * i + 1), (2 * i, 2 * i + 2)]

    def crossed(i):
        return [(2 * i - 1, 2 * i + 2, 2 * i, 2 * i + 1)]

    def off_block(i):
        return [
            (2 * j - 1, 2 * j) for j in range(1, k + 1) if j not in (i, i + 1)
        ]

    variants = [
        lambda i: plain(i),
        lambda i: crossed(i),
        lambda i: plain(i) + off_block(i),
        lambda i: crossed(i) + off_block(i),
    ]
    return [
        BraidHom(
            k,
            n2,
            tuple(
                Permutation.from_cycles(make(i), n2) for i in range(1, k)
            ),
        )
        for make in variants
    ]


def six_point_outer_map():
    """The outer automorphism of S(6) as an explicit dictionary.

    Determined by sending (1,2) to (1,2)(3,4)(5,6) and the 6-cycle
    (1,...,6) to (1,2,3)(4,5); built by expressing each element as a word
    in those two generators.
    """
    t = _cyc("(1,2)", 6)
    c = _cyc("(1,2,3,4,5,6)", 6)
    ft = _cyc("(1,2)(3,4)(5,6)", 6)
    fc = _cyc("(1,2,3)(4,5)", 6)
    ident = Permutation.identity(6)
    table = {ident: ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for gen, img in ((t, ft), (c, fc)):
                h = gen * g
                if h not in table:
                    table[h] = img * table[g]
                    nxt.append(h)
        frontier = nxt
    assert len(table) == 720
    return table


def apply_outer_six(h):
    """Postcompose a homomorphism into S(6) with the outer automorphism."""
    if h.n != 6:
        raise ValueError("the outer automorphism lives on six points")
    table = six_point_outer_map()
    return BraidHom(h.k, 6, tuple(table[s] for s in h.sigma))
