"""Exact linear algebra mod p on plain integer matrices (lists of lists)."""

from __future__ import annotations


def identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_vec(m: list[list[int]], v: list[int], p: int) -> list[int]:
    return [sum(a * b for a, b in zip(row, v)) % p for row in m]


def vec_mat(v: list[int], m: list[list[int]], p: int) -> list[int]:
    cols = len(m[0]) if m else 0
    return [sum(v[i] * m[i][j] for i in range(len(m))) % p for j in range(cols)]


def mat_mul(a: list[list[int]], b: list[list[int]], p: int) -> list[list[int]]:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) % p for col in bt] for row in a]


def rref(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form with deterministic pivoting.

    Columns are processed left to right; the pivot for each column is the
    lowest-index remaining row with a nonzero entry. Returns the reduced
    matrix and the list of pivot columns.
    """
    m = [row[:] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        sel = next((i for i in range(rank, nrows) if m[i][col] % p != 0), None)
        if sel is None:
            continue
        m[rank], m[sel] = m[sel], m[rank]
        inv = pow(m[rank][col], p - 2, p)
        m[rank] = [x * inv % p for x in m[rank]]
        for i in range(nrows):
            if i != rank and m[i][col] % p != 0:
                f = m[i][col] % p
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[rank])]
        pivots.append(col)
        rank += 1
        if rank == nrows:
            break
    return m, pivots


def nullspace(rows: list[list[int]], ncols: int, p: int) -> list[list[int]]:
    """Basis of the right kernel, one vector per free column in ascending
    column order (each has a 1 in its free position)."""
    if not rows:
        return [[1 if j == f else 0 for j in range(ncols)] for f in range(ncols)]
    reduced, pivots = rref(rows, p)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [0] * ncols
        vec[free] = 1
        for r, c in enumerate(pivots):
            vec[c] = -reduced[r][free] % p
        basis.append(vec)
    return basis
