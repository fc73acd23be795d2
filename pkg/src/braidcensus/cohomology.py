"""First cohomology of braid groups acting on blocks of imprimitivity.

Fix a base homomorphism W of the braid group on m strands into S(t) and
a coefficient ring Z/r (r = 0 means Z).  Homomorphisms into S(rt) that
permute t blocks of size r through W, moving each block by a rotation,
correspond to crossed homomorphisms ("cocycles") z assigning to each
generator a vector in (Z/r)^t; the braid relations become an integer
linear system, coboundaries the image of a difference operator, and the
classification of block homomorphisms up to block-preserving conjugacy
is the quotient.

A cocycle is stored as a list of m-1 integer vectors of length t.
"""

from __future__ import annotations

import itertools
import math

from .homs import BraidHom
from .perm import Permutation
from .retraction import block_projection, block_splitting


def permute_coords(s, h):
    """The coordinate action: result[i] = h[s^-1(i)], 1-indexed positions."""
    si = s.inv()
    return tuple(h[si(i + 1) - 1] for i in range(len(h)))


def _action_matrix(s, t):
    """Matrix of permute_coords(s, -) acting on column vectors."""
    rows = []
    si = s.inv()
    for i in range(1, t + 1):
        row = [0] * t
        row[si(i) - 1] = 1
        rows.append(row)
    return rows


def _mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _zeros(rows, cols):
    return [[0] * cols for _ in range(rows)]


def _identity_mat(t):
    return [[1 if i == j else 0 for j in range(t)] for i in range(t)]


def cocycle_matrix(omega):
    """Integer matrix whose kernel (over the coefficients) is the cocycle set.

    Unknowns are the m-1 generator vectors concatenated; rows express the
    far commutations and the length-3 braidings of the generators."""
    m, t = omega.k, omega.n
    s = omega.sigma
    Ts = [_action_matrix(g, t) for g in s]
    I = _identity_mat(t)
    rows = []

    def emit(blocks):
        for i in range(t):
            row = []
            for blk in blocks:
                row.extend(blk[i] if blk is not None else [0] * t)
            rows.append(row)

    for p in range(1, m - 1):
        for q in range(p + 2, m):
            blocks = [None] * (m - 1)
            blocks[p - 1] = _mat_sub(Ts[q - 1], I)
            blocks[q - 1] = _mat_sub(I, Ts[p - 1])
            emit(blocks)
    for p in range(1, m - 1):
        spq = _action_matrix(omega.sigma[p - 1] * omega.sigma[p], t)
        sqp = _action_matrix(omega.sigma[p] * omega.sigma[p - 1], t)
        blocks = [None] * (m - 1)
        blocks[p - 1] = _mat_add(_mat_sub(I, Ts[p]), spq)
        blocks[p] = _mat_sub(_mat_sub(Ts[p - 1], I), sqp)
        emit(blocks)
    return rows


def coboundary_matrix(omega):
    """Columns generate the coboundaries: h goes to (T_p h - h) per generator."""
    m, t = omega.k, omega.n
    cols_of = []
    for p in range(m - 1):
        cols_of.append(_mat_sub(_action_matrix(omega.sigma[p], t), _identity_mat(t)))
    rows = []
    for p in range(m - 1):
        for i in range(t):
            rows.append(cols_of[p][i])
    return rows


def coboundary_of(omega, r, h):
    """The cocycle of the block-translation conjugation by h."""
    out = []
    for g in omega.sigma:
        moved = permute_coords(g, h)
        out.append(_vec_mod([a - b for a, b in zip(moved, h)], r))
    return out


def _vec_mod(v, r):
    return tuple(x % r for x in v) if r else tuple(v)


def is_cocycle(omega, r, z):
    """Direct check: the block homomorphism built from z satisfies the
    defining relations (independent of the linear-system encoding)."""
    try:
        hom_from_cocycle(omega, r, z)
        return True
    except ValueError:
        return False


def hom_from_cocycle(omega, r, z):
    """The block homomorphism into S(rt): generator p moves block q of m
    rigidly to block W(p)(m) and rotates it by the cocycle entry there."""
    m, t = omega.k, omega.n
    if r < 2:
        raise ValueError("need a finite block size r >= 2")
    if len(z) != m - 1 or any(len(v) != t for v in z):
        raise ValueError("cocycle shape mismatch")
    images = []
    for p in range(m - 1):
        s = omega.sigma[p]
        h = z[p]
        pts = [0] * (r * t)
        for blk in range(1, t + 1):
            target = s(blk)
            shift = h[target - 1] % r
            for q in range(1, r + 1):
                pts[(blk - 1) * r + q - 1] = (
                    (target - 1) * r + (q - 1 + shift) % r + 1
                )
        images.append(Permutation(pts))
    return BraidHom(m, r * t, tuple(images))


def cocycle_from_hom(omega, r, hom):
    """Recover the cocycle of a block homomorphism over omega, or raise."""
    m, t = omega.k, omega.n
    if hom.k != m or hom.n != r * t:
        raise ValueError("homomorphism shape mismatch")
    z = []
    for p in range(m - 1):
        g = hom.sigma[p]
        s = block_projection(g, r, t)
        if s != omega.sigma[p]:
            raise ValueError("block action does not match the base homomorphism")
        h = [0] * t
        for blk in range(1, t + 1):
            target = s(blk)
            shift = (g((blk - 1) * r + 1) - ((target - 1) * r + 1)) % r
            for q in range(1, r + 1):
                expected = (target - 1) * r + (q - 1 + shift) % r + 1
                if g((blk - 1) * r + q) != expected:
                    raise ValueError("a block is not moved by a rotation")
            h[target - 1] = shift
        z.append(tuple(h))
    return z


def split_hom(omega, r):
    """The rotation-free block homomorphism: each block moves rigidly."""
    return BraidHom(
        omega.k,
        r * omega.n,
        tuple(block_splitting(s, r) for s in omega.sigma),
    )


# Integer linear algebra: diagonalization with tracked transforms.


_SNF_CACHE = {}


def _smith_normal_form_cached(M):
    """Memoized diagonalization; the cocycle system of a base homomorphism
    is reused across every coefficient modulus."""
    key = tuple(tuple(row) for row in M)
    if key not in _SNF_CACHE:
        _SNF_CACHE[key] = smith_normal_form(M)
    return _SNF_CACHE[key]


def smith_normal_form(M):
    """Return (diag, U, V) with U*M*V diagonal, U and V unimodular.

    M is a list of rows; diag is returned as the full transformed matrix."""
    rows = len(M)
    cols = len(M[0]) if rows else 0
    A = [list(row) for row in M]
    U = _identity_mat(rows)
    V = _identity_mat(cols)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(i, j, c):
        A[i] = [a + c * b for a, b in zip(A[i], A[j])]
        U[i] = [a + c * b for a, b in zip(U[i], U[j])]

    def add_col(i, j, c):
        for row in A:
            row[i] += c * row[j]
        for row in V:
            row[i] += c * row[j]

    def negate_row(i):
        A[i] = [-a for a in A[i]]
        U[i] = [-a for a in U[i]]

    for d in range(min(rows, cols)):
        while True:
            pivot = None
            for i in range(d, rows):
                for j in range(d, cols):
                    if A[i][j] and (
                        pivot is None or abs(A[i][j]) < abs(A[pivot[0]][pivot[1]])
                    ):
                        pivot = (i, j)
            if pivot is None:
                break
            i, j = pivot
            if i != d:
                swap_rows(d, i)
            if j != d:
                swap_cols(d, j)
            if A[d][d] < 0:
                negate_row(d)
            clean = True
            for i in range(d + 1, rows):
                if A[i][d]:
                    add_row(i, d, -(A[i][d] // A[d][d]))
                    if A[i][d]:
                        clean = False
            for j in range(d + 1, cols):
                if A[d][j]:
                    add_col(j, d, -(A[d][j] // A[d][d]))
                    if A[d][j]:
                        clean = False
            if clean:
                off = False
                for i in range(d + 1, rows):
                    for j in range(d + 1, cols):
                        if A[i][j] % A[d][d]:
                            add_row(d, i, 1)
                            off = True
                            break
                    if off:
                        break
                if not off:
                    break
    return A, U, V


def _diag(A):
    return [A[i][i] for i in range(min(len(A), len(A[0]) if A else 0))]


def kernel_lattice(M, r):
    """Generators of the solution lattice of M x = 0 over Z/r (x integer,
    congruences mod r; r = 0 means equality over Z).

    Returns a list of integer column vectors spanning all solutions; for
    r > 0 the lattice contains r times every unit vector."""
    if not M:
        raise ValueError("empty system")
    cols = len(M[0])
    D, _, V = _smith_normal_form_cached(M)
    d = _diag(D)
    gens = []
    for j in range(cols):
        dj = d[j] if j < len(d) else 0
        if r == 0:
            if dj != 0:
                continue
            scale = 1
        else:
            scale = r // math.gcd(dj, r) if dj else 1
        gens.append([V[i][j] * scale for i in range(cols)])
    return gens


def solution_count(M, r):
    """Number of solutions of M x = 0 over Z/r (r >= 2)."""
    if r < 2:
        raise ValueError("need r >= 2")
    cols = len(M[0])
    D, _, _ = _smith_normal_form_cached(M)
    d = _diag(D)
    count = 1
    for j in range(cols):
        dj = d[j] if j < len(d) else 0
        count *= math.gcd(dj, r) if dj else r
    return count


def _solve_diagonalized(D, U, V, ncols, b):
    """Integer x with B x = b given a diagonalization U*B*V=D, or raise."""
    rows = len(U)
    d = _diag(D)
    rhs = [sum(U[i][j] * b[j] for j in range(rows)) for i in range(rows)]
    y = [0] * ncols
    for i in range(rows):
        di = d[i] if i < len(d) else 0
        if i < len(y) and di:
            if rhs[i] % di:
                raise ValueError("no integer solution")
            y[i] = rhs[i] // di
        elif rhs[i]:
            raise ValueError("no integer solution")
    return [sum(V[i][j] * y[j] for j in range(len(y))) for i in range(len(y))]


def _solve_integer(Bcols, b):
    """Integer x with B x = b where B is given by columns, or raise."""
    rows = len(Bcols[0])
    M = [[Bcols[j][i] for j in range(len(Bcols))] for i in range(rows)]
    D, U, V = smith_normal_form(M)
    return _solve_diagonalized(D, U, V, len(Bcols), b)


def lattice_quotient_invariants(Lgens, Kgens):
    """Invariant factors of the quotient of the lattice spanned by Lgens by
    its sublattice spanned by Kgens (1s dropped, 0 meaning a Z summand)."""
    rows = len(Lgens[0])
    M_L = [[Lgens[j][i] for j in range(len(Lgens))] for i in range(rows)]
    D, U, V = _smith_normal_form_cached(M_L)
    X_cols = [_solve_diagonalized(D, U, V, len(Lgens), k) for k in Kgens]
    M = [[col[i] for col in X_cols] for i in range(len(Lgens))]
    D, _, _ = _smith_normal_form_cached(M)
    d = _diag(D)
    out = []
    for i in range(len(Lgens)):
        di = abs(d[i]) if i < len(d) else 0
        if di != 1:
            out.append(di)
    return sorted(out, key=lambda v: (v == 0, v))


def h1_invariants(omega, r):
    """Invariant factors of the first cohomology over Z/r (r = 0 means Z).

    The result lists the cyclic summands' orders, 1s dropped, 0 for Z."""
    m, t = omega.k, omega.n
    M = cocycle_matrix(omega)
    L = kernel_lattice(M, r)
    cols = (m - 1) * t
    B = coboundary_matrix(omega)
    Kgens = [[B[i][j] for i in range(cols)] for j in range(t)]
    if r:
        Kgens += [
            [r if i == j else 0 for i in range(cols)] for j in range(cols)
        ]
    if not L:
        return []
    return lattice_quotient_invariants(L, Kgens)


def all_cocycles(omega, r):
    """Every cocycle over Z/r by exhaustion; only for tiny systems."""
    m, t = omega.k, omega.n
    M = cocycle_matrix(omega)
    out = []
    for flat in itertools.product(range(r), repeat=(m - 1) * t):
        if all(sum(a * x for a, x in zip(row, flat)) % r == 0 for row in M):
            out.append(
                [tuple(flat[p * t : (p + 1) * t]) for p in range(m - 1)]
            )
    return out


def all_coboundaries(omega, r):
    out = set()
    for flat in itertools.product(range(r), repeat=omega.n):
        z = coboundary_of(omega, r, flat)
        out.add(tuple(z))
    return [list(z) for z in sorted(out)]


def cocycles_equal_mod(z1, z2, r):
    return all(
        all((a - b) % r == 0 for a, b in zip(v1, v2)) for v1, v2 in zip(z1, z2)
    )


def cohomologous(omega, r, z1, z2):
    """Whether two cocycles differ by a coboundary (exhaustive in h)."""
    for flat in itertools.product(range(r), repeat=omega.n):
        d = coboundary_of(omega, r, flat)
        if all(
            all((a - b - c) % r == 0 for a, b, c in zip(v1, v2, vd))
            for v1, v2, vd in zip(z1, z2, d)
        ):
            return True
    return False


# Canonical cocycles for the distinguished base homomorphisms.


def standard_base_cocycle(n, r, a, b):
    """Canonical cocycle family over the standard base on n strands/points:
    the p-th vector is b everywhere except 0 at p and a at p+1."""
    z = []
    for p in range(1, n):
        v = [b] * n
        v[p - 1] = 0
        v[p] = a
        z.append(_vec_mod(v, r))
    return z


def six_point_exceptional_base_cocycle(r, y):
    """Canonical cocycle family over the six-strand exceptional base."""
    vals = [
        (0, 2 * y, 0, 2 * y, 0, 2 * y),
        (0, 0, 2 * y, 2 * y, 2 * y, 0),
        (-y, -y, 3 * y, 3 * y, 0, 2 * y),
        (0, 2 * y, 2 * y, 2 * y, 0, 0),
        (-2 * y, 0, 2 * y, 4 * y, 0, 2 * y),
    ]
    return [_vec_mod(v, r) for v in vals]


def five_strand_exceptional_base_cocycle(r, x, y):
    """Canonical cocycle family over the five-strand base into S(6);
    x must satisfy 2x = 0 in Z/r."""
    if r and (2 * x) % r != 0:
        raise ValueError("x must be 2-torsion")
    vals = [
        (0, x + 2 * y, 0, x + 2 * y, 0, x + 2 * y),
        (0, 0, x + 2 * y, x + 2 * y, x + 2 * y, 0),
        (-y, -y, x + 3 * y, x + 3 * y, x, 2 * y),
        (x, 2 * y, 2 * y, 2 * y, x, x),
    ]
    return [_vec_mod(v, r) for v in vals]


def cyclic_base_cocycle(m, t, r, a):
    """Canonical cocycle over a cyclic base whose common image is a t-cycle."""
    v = _vec_mod([a] + [0] * (t - 1), r)
    return [v for _ in range(m - 1)]
