"""Integer lattice arithmetic against exact small-dimension oracles."""

import itertools
import random
from math import gcd

import pytest

from nearnormal import _intlinalg as intlin


def in_lattice_2d(rows, v):
    """Exact membership for a lattice spanned by two rows of Z^2 (Cramer)."""
    (a, b), (c, d) = rows
    det = a * d - b * c
    if det:
        n1 = v[0] * d - v[1] * c
        n2 = a * v[1] - b * v[0]
        return n1 % det == 0 and n2 % det == 0
    nz = [r for r in rows if any(r)]
    if not nz:
        return not any(v)
    r0 = nz[0]
    g0 = gcd(abs(r0[0]), abs(r0[1]))
    prim = (r0[0] // g0, r0[1] // g0)
    mult = 0
    for r in nz:
        t = r[0] // prim[0] if prim[0] else r[1] // prim[1]
        mult = gcd(mult, abs(t))
    tv = v[0] // prim[0] if prim[0] else v[1] // prim[1]
    return (tv * prim[0], tv * prim[1]) == tuple(v) and tv % mult == 0


def random_rows(rng, k, n, bound=3):
    return [tuple(rng.randint(-bound, bound) for _ in range(n)) for _ in range(k)]


def test_hnf_shape():
    h = intlin.hermite_normal_form([(2, 4), (0, 3)], 2)
    for row in h:
        p = intlin._pivot_col(row)
        assert row[p] > 0
    # staircase: pivot columns strictly increase
    pivots = [intlin._pivot_col(row) for row in h]
    assert pivots == sorted(set(pivots))


def test_hnf_is_a_lattice_invariant():
    rng = random.Random(3)
    for _ in range(25):
        rows = random_rows(rng, 3, 3)
        h1 = intlin.hermite_normal_form(rows, 3)
        shuffled = rows[:]
        rng.shuffle(shuffled)
        # row operations preserve the lattice
        shuffled.append(tuple(a + b for a, b in zip(rows[0], rows[1])))
        h2 = intlin.hermite_normal_form(shuffled, 3)
        assert h1 == h2


def test_hnf_kernel_annihilates():
    rows = [(2, 0), (0, 2), (2, 2)]
    _, kernel = intlin.hnf_with_transform(rows, 2)
    assert kernel
    for coeffs in kernel:
        combo = tuple(sum(c * row[j] for c, row in zip(coeffs, rows)) for j in range(2))
        assert combo == (0, 0)


def test_lattice_contains_matches_cramer():
    rng = random.Random(7)
    for _ in range(20):
        rows = random_rows(rng, 2, 2, bound=2)
        h = intlin.hermite_normal_form(rows, 2)
        for v in itertools.product(range(-5, 6), repeat=2):
            expected = in_lattice_2d(rows, v)
            got = intlin.lattice_contains(h, v) if h else v == (0, 0)
            assert got == expected, (rows, v)


def test_lattice_residue_is_canonical():
    h = intlin.hermite_normal_form([(2, 1), (0, 3)], 2)
    seen = set()
    for v in itertools.product(range(-6, 7), repeat=2):
        r = intlin.lattice_residue(h, v)
        diff = tuple(a - b for a, b in zip(v, r))
        assert intlin.lattice_contains(h, diff)
        seen.add(r)
    # six residue classes for a sublattice of index 6
    assert len(seen) == 6


def test_coords_in_roundtrip():
    h = intlin.hermite_normal_form([(2, 1, 0), (0, 3, 1)], 3)
    rng = random.Random(1)
    for _ in range(20):
        coeffs = [rng.randint(-4, 4) for _ in h]
        v = tuple(sum(c * row[j] for c, row in zip(coeffs, h)) for j in range(3))
        got = intlin.coords_in(h, v)
        assert got is not None
        rebuilt = tuple(sum(c * row[j] for c, row in zip(got, h)) for j in range(3))
        assert rebuilt == v
    assert intlin.coords_in(h, (1, 0, 0)) is None


def test_lattice_intersect_matches_cramer():
    rng = random.Random(17)
    for _ in range(20):
        a = random_rows(rng, 2, 2, bound=2)
        b = random_rows(rng, 2, 2, bound=2)
        got = intlin.lattice_intersect(a, b, 2)
        for v in itertools.product(range(-5, 6), repeat=2):
            expected = in_lattice_2d(a, v) and in_lattice_2d(b, v)
            in_got = intlin.lattice_contains(got, v) if got else v == (0, 0)
            assert in_got == expected, (a, b, v)


def test_integer_det():
    assert intlin.integer_det([]) == 1
    assert intlin.integer_det([(3,)]) == 3
    assert intlin.integer_det([(1, 2), (3, 4)]) == -2
    rng = random.Random(23)
    for _ in range(20):
        m = random_rows(rng, 3, 3)
        # cofactor expansion as the oracle
        a, b, c = m
        expected = (a[0] * (b[1] * c[2] - b[2] * c[1])
                    - a[1] * (b[0] * c[2] - b[2] * c[0])
                    + a[2] * (b[0] * c[1] - b[1] * c[0]))
        assert intlin.integer_det(m) == expected


def test_lattice_index():
    z2 = [(1, 0), (0, 1)]
    assert intlin.lattice_index([(2, 0), (0, 2)], z2, 2) == 4
    assert intlin.lattice_index([(2, 0), (0, 3)], z2, 2) == 6
    assert intlin.lattice_index([(1, 0)], z2, 2) is None
    assert intlin.lattice_index([(4, 0), (0, 2)], [(2, 0), (0, 1)], 2) == 4
    with pytest.raises(ValueError):
        intlin.lattice_index([(1, 0), (0, 1)], [(2, 0), (0, 2)], 2)


def test_smith_diagonal():
    assert intlin.smith_diagonal([(2, 0), (0, 3)], 2) == [1, 6]
    assert intlin.smith_diagonal([(2, 0), (0, 2)], 2) == [2, 2]
    assert intlin.smith_diagonal([], 2) == []
    rng = random.Random(29)
    for _ in range(20):
        m = random_rows(rng, 3, 3)
        diag = intlin.smith_diagonal(m, 3)
        # divisibility chain
        for a, b in zip(diag, diag[1:]):
            assert b % a == 0
        det = intlin.integer_det(m)
        if det:
            prod = 1
            for d in diag:
                prod *= d
            assert prod == abs(det)
