"""Permutation arithmetic and small permutation-group utilities.

Permutations are immutable bijections of {1..n}, stored as a tuple of
images (position i-1 holds the image of i).  Composition is fixed once
and for all as (a * b)(x) = a(b(x)); conjugation g a g^-1 is consistent
with that choice.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass


class Permutation:
    """A bijection of {1..n}, 1-indexed."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(x) for x in images)
        n = len(images)
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError("images must be a bijection of {1..%d}: %r" % (n, images))
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def degree(self):
        return len(self.images)

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, cycles, n):
        """Build from cycle notation: text "(1,2)(3,4)" or a list of tuples."""
        if isinstance(cycles, str):
            parsed = []
            for part in re.findall(r"\(([^()]*)\)", cycles):
                part = part.strip()
                if part:
                    parsed.append(tuple(int(x) for x in re.split(r"[,\s]+", part)))
            cycles = parsed
        images = list(range(1, n + 1))
        for cyc in cycles:
            if len(set(cyc)) != len(cyc):
                raise ValueError("repeated point in cycle %r" % (cyc,))
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                if not 1 <= a <= n:
                    raise ValueError("point %d out of range 1..%d" % (a, n))
                images[a - 1] = b
        return cls(images)

    def __call__(self, x):
        return self.images[x - 1]

    def __mul__(self, other):
        """(a * b)(x) = a(b(x))."""
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        im = self.images
        return Permutation(im[y - 1] for y in other.images)

    def inv(self):
        out = [0] * self.degree
        for x, y in enumerate(self.images, start=1):
            out[y - 1] = x
        return Permutation(out)

    def __pow__(self, e):
        if e < 0:
            return self.inv() ** (-e)
        result = Permutation.identity(self.degree)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conj(self, g):
        """g * self * g^-1."""
        return g * self * g.inv()

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __lt__(self, other):
        return self.images < other.images

    def __repr__(self):
        return "Permutation(%r)" % (list(self.images),)

    def is_identity(self):
        return all(y == x for x, y in enumerate(self.images, start=1))

    def cycles(self, include_fixed=False):
        """Disjoint cycles, each starting at its minimum, sorted by minimum."""
        seen = [False] * self.degree
        out = []
        for start in range(1, self.degree + 1):
            if seen[start - 1]:
                continue
            cyc = [start]
            seen[start - 1] = True
            x = self(start)
            while x != start:
                cyc.append(x)
                seen[x - 1] = True
                x = self(x)
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_type(self):
        return CycleType(len(c) for c in self.cycles())

    def order(self):
        o = 1
        for c in self.cycles():
            o = _lcm(o, len(c))
        return o

    def support(self):
        return frozenset(x for x in range(1, self.degree + 1) if self(x) != x)

    def fixed_points(self):
        return frozenset(x for x in range(1, self.degree + 1) if self(x) == x)

    def is_even(self):
        return sum(len(c) - 1 for c in self.cycles()) % 2 == 0

    def contains_cycles_of(self, other):
        """True if every cycle of other occurs verbatim among this one's cycles."""
        mine = {frozenset(c): _rotate_min(c) for c in self.cycles()}
        for c in other.cycles():
            key = frozenset(c)
            if key not in mine or mine[key] != _rotate_min(c):
                return False
        return True

    def cycle_string(self):
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cycs)

    def restrict(self, points):
        """Restriction to an invariant set, relabeled order-preservingly to {1..m}."""
        pts = sorted(points)
        index = {p: i + 1 for i, p in enumerate(pts)}
        for p in pts:
            if self(p) not in index:
                raise ValueError("set is not invariant")
        return Permutation(index[self(p)] for p in pts)

    def extend(self, n):
        """The same permutation viewed inside S(n), n >= degree."""
        if n < self.degree:
            raise ValueError("cannot shrink degree")
        return Permutation(self.images + tuple(range(self.degree + 1, n + 1)))

    def shift(self, offset, n):
        """Move the action to points {offset+1 .. offset+degree} inside S(n)."""
        if offset + self.degree > n:
            raise ValueError("shifted permutation does not fit in S(%d)" % n)
        images = list(range(1, n + 1))
        for x in range(1, self.degree + 1):
            images[offset + x - 1] = self(x) + offset
        return Permutation(images)

    def to_json(self):
        return list(self.images)


def _lcm(a, b):
    import math

    return a * b // math.gcd(a, b) if a and b else max(a, b)


def _rotate_min(cyc):
    i = cyc.index(min(cyc))
    return cyc[i:] + cyc[:i]


class CycleType(tuple):
    """Multiset of cycle lengths >= 2, sorted descending."""

    def __new__(cls, parts):
        parts = sorted((int(p) for p in parts), reverse=True)
        if any(p < 2 for p in parts):
            raise ValueError("cycle-type parts must be >= 2")
        return super().__new__(cls, parts)

    def order(self):
        o = 1
        for p in self:
            o = _lcm(o, p)
        return o


@dataclass(frozen=True)
class RComponent:
    """All r-cycles of a permutation, with their joint support."""

    r: int
    cycles: tuple
    support: frozenset

    @property
    def t(self):
        return len(self.cycles)


def cycle_type(p):
    return p.cycle_type()


def r_component(p, r):
    if r < 2:
        raise ValueError("r must be >= 2")
    cycs = tuple(c for c in p.cycles() if len(c) == r)
    supp = frozenset(x for c in cycs for x in c)
    return RComponent(r=r, cycles=cycs, support=supp)


def conjugacy_witness(a, b):
    """Some g with g a g^-1 = b, or None if the cycle types differ.

    Cycles are aligned longest-first, ties broken by minimum element,
    so the witness is deterministic.
    """
    if a.degree != b.degree:
        raise ValueError("degree mismatch")
    if a.cycle_type() != b.cycle_type():
        return None

    def keyed(p):
        cycs = p.cycles(include_fixed=True)
        return sorted(cycs, key=lambda c: (-len(c), min(c)))

    images = [0] * a.degree
    for ca, cb in zip(keyed(a), keyed(b)):
        for x, y in zip(ca, cb):
            images[x - 1] = y
    g = Permutation(images)
    assert a.conj(g) == b
    return g


def tuple_conjugacy_witness(aa, bb):
    """Some g with g aa[i] g^-1 = bb[i] for all i, or None.

    Backtracking on the point map with constraint propagation through
    every pair (aa[i], bb[i]).
    """
    if len(aa) != len(bb):
        raise ValueError("tuple length mismatch")
    if not aa:
        raise ValueError("empty tuple")
    n = aa[0].degree
    if any(p.degree != n for p in aa + bb):
        raise ValueError("degree mismatch")

    # Fast necessary check plus per-point candidate pruning data.
    def cycle_len_profile(perms, x):
        return tuple(len_of_cycle(p, x) for p in perms)

    def len_of_cycle(p, x):
        l, y = 1, p(x)
        while y != x:
            l += 1
            y = p(y)
        return l

    prof_a = {x: cycle_len_profile(aa, x) for x in range(1, n + 1)}
    prof_b = {}
    for x in range(1, n + 1):
        prof_b.setdefault(cycle_len_profile(bb, x), []).append(x)
    if sorted(prof_a.values()) != sorted(
        k for k, v in prof_b.items() for _ in v
    ):
        return None

    def propagate(gmap, used, x0, y0):
        """Extend gmap with x0 -> y0 and its closure; return new pairs or None."""
        added = []
        stack = [(x0, y0)]
        while stack:
            x, y = stack.pop()
            if x in gmap:
                if gmap[x] != y:
                    undo(gmap, used, added)
                    return None
                continue
            if y in used:
                undo(gmap, used, added)
                return None
            gmap[x] = y
            used.add(y)
            added.append(x)
            for p, q in zip(aa, bb):
                stack.append((p(x), q(y)))
        return added

    def undo(gmap, used, added):
        for x in added:
            used.discard(gmap.pop(x))

    def search(gmap, used):
        if len(gmap) == n:
            return Permutation(gmap[x] for x in range(1, n + 1))
        x = min(set(range(1, n + 1)) - set(gmap))
        for y in prof_b.get(prof_a[x], []):
            if y in used:
                continue
            added = propagate(gmap, used, x, y)
            if added is not None:
                result = search(gmap, used)
                if result is not None:
                    return result
                undo(gmap, used, added)
        return None

    g = search({}, set())
    if g is not None:
        for p, q in zip(aa, bb):
            assert p.conj(g) == q
    return g


def centralizer_generators(p):
    """Generators of the centralizer of p in S(n).

    Per-cycle rotations, swaps of adjacent same-length cycles, and
    transpositions of adjacent fixed points.
    """
    n = p.degree
    gens = []
    by_len = {}
    for c in p.cycles(include_fixed=True):
        by_len.setdefault(len(c), []).append(c)
    for length, cycs in sorted(by_len.items()):
        if length > 1:
            for c in cycs:
                gens.append(Permutation.from_cycles([c], n))
        for c1, c2 in zip(cycs, cycs[1:]):
            images = list(range(1, n + 1))
            for x, y in zip(c1, c2):
                images[x - 1] = y
                images[y - 1] = x
            gens.append(Permutation(images))
    return gens


@dataclass(frozen=True)
class GeneratedGroup:
    """A permutation group given by generators; degree-limited utilities."""

    degree: int
    generators: tuple

    def __post_init__(self):
        if not self.generators:
            raise ValueError("need at least one generator")
        if any(g.degree != self.degree for g in self.generators):
            raise ValueError("generator degree mismatch")

    def orbits(self):
        parent = list(range(self.degree + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.generators:
            for x in range(1, self.degree + 1):
                rx, ry = find(x), find(g(x))
                if rx != ry:
                    parent[ry] = rx
        groups = {}
        for x in range(1, self.degree + 1):
            groups.setdefault(find(x), []).append(x)
        return sorted((tuple(v) for v in groups.values()), key=lambda o: o[0])

    def is_transitive(self):
        return len(self.orbits()) == 1

    def orbit_of(self, x):
        seen = {x}
        stack = [x]
        while stack:
            y = stack.pop()
            for g in self.generators:
                z = g(y)
                if z not in seen:
                    seen.add(z)
                    stack.append(z)
        return frozenset(seen)

    def elements(self):
        """Full closure by breadth-first search; intended for tiny degrees."""
        ident = Permutation.identity(self.degree)
        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for h in frontier:
                for g in self.generators:
                    e = g * h
                    if e not in seen:
                        seen.add(e)
                        nxt.append(e)
            frontier = nxt
        return seen

    def order(self):
        return len(self.elements())

    def minimal_blocks(self):
        """A nontrivial block system if one exists, else None (primitive).

        Standard minimal-block algorithm: for each w > 1, the finest block
        system in which 1 and w share a block; the smallest nontrivial
        system found is returned.
        """
        if not self.is_transitive():
            raise ValueError("group must be transitive")
        n = self.degree
        best = None
        for w in range(2, n + 1):
            parent = list(range(n + 1))

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            def union(x, y):
                rx, ry = find(x), find(y)
                if rx == ry:
                    return False
                parent[ry] = rx
                return True

            union(1, w)
            changed = True
            while changed:
                changed = False
                for g in self.generators:
                    reps = {}
                    for x in range(1, n + 1):
                        r = find(x)
                        gr = find(g(x))
                        if r in reps:
                            if union(reps[r], gr):
                                changed = True
                        else:
                            reps[r] = gr
            blocks = {}
            for x in range(1, n + 1):
                blocks.setdefault(find(x), []).append(x)
            system = sorted(tuple(sorted(b)) for b in blocks.values())
            size = len(system[0])
            if 1 < size < n and (best is None or size < len(best[0])):
                for g in self.generators:
                    for b in system:
                        image = tuple(sorted(g(x) for x in b))
                        assert image in system
                best = system
        return best

    def is_primitive(self):
        return self.minimal_blocks() is None


def orbits(G):
    return G.orbits()


def minimal_blocks(G):
    return G.minimal_blocks()


def invariant_subsets(p, r):
    """All p-invariant sets of size r: unions of cycle supports and fixed points."""
    n = p.degree
    if not 1 <= r < n:
        raise ValueError("r out of range")
    supports = [tuple(c) for c in p.cycles(include_fixed=True)]
    out = []

    def rec(idx, remaining, chosen):
        if remaining == 0:
            out.append(frozenset(x for c in chosen for x in c))
            return
        if idx == len(supports):
            return
        rec(idx + 1, remaining, chosen)
        c = supports[idx]
        if len(c) <= remaining:
            rec(idx + 1, remaining - len(c), chosen + [c])

    rec(0, r, [])
    return sorted(out, key=lambda s: sorted(s))


def all_partitions(n):
    """All partitions of n, parts descending, lexicographically descending."""
    out = []

    def rec(remaining, maxpart, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for part in range(min(remaining, maxpart), 0, -1):
            rec(remaining - part, part, acc + [part])

    rec(n, n, [])
    return out


def canonical_of_cycle_type(parts, n):
    """Class-minimal representative (one-line lexicographic order) in S(n).

    Fixed points occupy the smallest points, then nontrivial cycles in
    ascending length on consecutive blocks of points.
    """
    parts = sorted(p for p in parts if p >= 2)
    if sum(parts) > n:
        raise ValueError("cycle type does not fit in S(%d)" % n)
    start = n - sum(parts) + 1
    cycles = []
    for p in parts:
        cycles.append(tuple(range(start, start + p)))
        start += p
    return Permutation.from_cycles(cycles, n)


def conjugacy_class_representatives(n):
    """One class-minimal representative per conjugacy class of S(n)."""
    reps = []
    for parts in all_partitions(n):
        reps.append(canonical_of_cycle_type([p for p in parts if p >= 2], n))
    return sorted(set(reps), key=lambda p: p.images)


def disjoint_product(a, b):
    """The permutation acting as a on {1..deg a} and as b shifted above it."""
    n = a.degree + b.degree
    return a.extend(n) * b.shift(a.degree, n)


def all_permutations(n):
    return [Permutation(im) for im in itertools.permutations(range(1, n + 1))]
