"""Exact integer linear algebra: Hermite forms, lattice arithmetic, Smith form.

Row convention: a lattice in Z^n is the row span of an integer matrix.
All routines are exact and sized for small matrices (rank a handful).
"""

from __future__ import annotations


def hnf_with_transform(rows, n: int):
    """Row-style Hermite form.  Returns (H, kernel) with H canonical echelon
    rows (positive pivots, entries above a pivot reduced into [0, pivot)) and
    kernel an integer basis of {u : u . rows = 0}."""
    mat = [list(r) for r in rows]
    rcount = len(mat)
    trans = [[1 if i == j else 0 for j in range(rcount)] for i in range(rcount)]

    def addmul(dst, src, q):
        mat[dst] = [a - q * b for a, b in zip(mat[dst], mat[src])]
        trans[dst] = [a - q * b for a, b in zip(trans[dst], trans[src])]

    def swap(i, j):
        mat[i], mat[j] = mat[j], mat[i]
        trans[i], trans[j] = trans[j], trans[i]

    rank = 0
    for col in range(n):
        while True:
            pivots = [i for i in range(rank, rcount) if mat[i][col]]
            if not pivots:
                break
            best = min(pivots, key=lambda i: abs(mat[i][col]))
            swap(rank, best)
            done = True
            for i in range(rank + 1, rcount):
                if not mat[i][col]:
                    continue
                addmul(i, rank, mat[i][col] // mat[rank][col])
                if mat[i][col]:
                    done = False
            if done:
                break
        if rank < rcount and mat[rank][col]:
            if mat[rank][col] < 0:
                mat[rank] = [-a for a in mat[rank]]
                trans[rank] = [-a for a in trans[rank]]
            for i in range(rank):
                addmul(i, rank, mat[i][col] // mat[rank][col])
            rank += 1
    hnf = [tuple(r) for r in mat[:rank]]
    kernel = [tuple(trans[i]) for i in range(rank, rcount)]
    return hnf, kernel


def hermite_normal_form(rows, n: int):
    return hnf_with_transform(rows, n)[0]


def _pivot_col(row) -> int:
    for j, a in enumerate(row):
        if a:
            return j
    raise ValueError("zero row in echelon form")


def lattice_residue(hnf, vec):
    """Canonical representative of vec modulo the lattice (floor reduction)."""
    v = list(vec)
    for row in hnf:
        p = _pivot_col(row)
        q = v[p] // row[p]
        if q:
            v = [a - q * b for a, b in zip(v, row)]
    return tuple(v)


def lattice_contains(hnf, vec) -> bool:
    return not any(lattice_residue(hnf, vec))


def lattice_intersect(rows_a, rows_b, n: int):
    """HNF basis of (row span of A) intersect (row span of B)."""
    a_hnf = hermite_normal_form(rows_a, n)
    b_hnf = hermite_normal_form(rows_b, n)
    stacked = [list(r) for r in a_hnf] + [list(r) for r in b_hnf]
    _, kernel = hnf_with_transform(stacked, n)
    ra = len(a_hnf)
    members = []
    for coeffs in kernel:
        vec = [0] * n
        for c, row in zip(coeffs[:ra], a_hnf):
            vec = [x + c * y for x, y in zip(vec, row)]
        members.append(tuple(vec))
    return hermite_normal_form(members, n)


def coords_in(hnf, vec):
    """Coefficients expressing vec over the HNF basis, or None if outside."""
    v = list(vec)
    coords = []
    for row in hnf:
        p = _pivot_col(row)
        if v[p] % row[p]:
            return None
        q = v[p] // row[p]
        coords.append(q)
        v = [a - q * b for a, b in zip(v, row)]
    return coords if not any(v) else None


def integer_det(mat) -> int:
    """Fraction-free (Bareiss) determinant of a small square integer matrix."""
    m = [list(r) for r in mat]
    size = len(m)
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(size - 1):
        if m[k][k] == 0:
            for i in range(k + 1, size):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[-1][-1]


def lattice_index(sub_rows, amb_rows, n: int):
    """Index of the sub-lattice in the ambient lattice; None when infinite.

    Requires sub subset-of ambient (coords_in certifies while computing)."""
    sub = hermite_normal_form(sub_rows, n)
    amb = hermite_normal_form(amb_rows, n)
    if len(sub) < len(amb):
        return None
    coeff_rows = []
    for row in sub:
        coords = coords_in(amb, row)
        if coords is None:
            raise ValueError("sub-lattice vector outside the ambient lattice")
        coeff_rows.append(coords)
    det = integer_det(coeff_rows)
    if det == 0:
        return None
    return abs(det)


def smith_diagonal(rows, n: int):
    """Diagonal of the Smith normal form (nonnegative, divisibility chain)."""
    mat = [list(r) for r in rows]
    if not mat:
        return []
    rcount, t = len(mat), 0
    diag = []
    while t < min(rcount, n):
        entries = [(i, j) for i in range(t, rcount) for j in range(t, n) if mat[i][j]]
        if not entries:
            break
        while True:
            i0, j0 = min(entries, key=lambda ij: abs(mat[ij[0]][ij[1]]))
            mat[t], mat[i0] = mat[i0], mat[t]
            for row in mat:
                row[t], row[j0] = row[j0], row[t]
            piv = mat[t][t]
            clean = True
            for i in range(t + 1, rcount):
                q = mat[i][t] // piv
                if q:
                    mat[i] = [a - q * b for a, b in zip(mat[i], mat[t])]
                if mat[i][t]:
                    clean = False
            for j in range(t + 1, n):
                q = mat[t][j] // piv
                if q:
                    for row in mat:
                        row[j] -= q * row[t]
                if mat[t][j]:
                    clean = False
            if clean:
                # pivot must divide every remaining entry for the chain
                bad = next(((i, j) for i in range(t + 1, rcount)
                            for j in range(t + 1, n) if mat[i][j] % piv), None)
                if bad is None:
                    break
                mat[t] = [a + b for a, b in zip(mat[t], mat[bad[0]])]
            entries = [(i, j) for i in range(t, rcount) for j in range(t, n) if mat[i][j]]
        diag.append(abs(mat[t][t]))
        t += 1
    return diag
