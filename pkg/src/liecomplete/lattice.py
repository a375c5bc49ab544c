"""Integer matrices: Smith normal form, Hermite normal form, lattice kernels.

Matrices are lists of lists of Python ints (arbitrary precision).
"""

from __future__ import annotations

from typing import Sequence

from .errors import ShapeError

IntMat = list[list[int]]


def _identity(n: int) -> IntMat:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _copy(a: Sequence[Sequence[int]]) -> IntMat:
    return [[int(x) for x in row] for row in a]


def smith_normal_form(a: Sequence[Sequence[int]], ncols: int | None = None) -> tuple[IntMat, IntMat, IntMat]:
    """Return ``(U, S, V)`` with ``U @ a @ V == S`` and U, V unimodular.

    S is diagonal with nonnegative entries d_1 | d_2 | ... ; textbook pivoting.
    """
    S = _copy(a)
    m = len(S)
    n = ncols if ncols is not None else (len(S[0]) if S else 0)
    for row in S:
        if len(row) != n:
            raise ShapeError("ragged integer matrix")
    U = _identity(m)
    V = _identity(n)

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (S, V):
            for row in M:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        for M in (S, U):
            rs, rd = M[src], M[dst]
            for k in range(len(rd)):
                rd[k] += q * rs[k]

    def add_col(dst, src, q):  # col_dst += q * col_src
        for M in (S, V):
            for row in M:
                row[dst] += q * row[src]

    t = 0
    while t < min(m, n):
        entries = [(abs(S[i][j]), i, j) for i in range(t, m) for j in range(t, n) if S[i][j]]
        if not entries:
            break
        _, i, j = min(entries)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            changed = False
            for i in range(t + 1, m):
                if S[i][t]:
                    add_row(i, t, -(S[i][t] // S[t][t]))
                    if S[i][t]:
                        swap_rows(t, i)
                        changed = True
            for j in range(t + 1, n):
                if S[t][j]:
                    add_col(j, t, -(S[t][j] // S[t][t]))
                    if S[t][j]:
                        swap_cols(t, j)
                        changed = True
            if changed:
                continue
            # divisibility: fold an offending row into the pivot row and retry
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if S[i][j] % S[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if S[t][t] < 0:
            for k in range(len(U[t])):
                U[t][k] = -U[t][k]
            S[t] = [-x for x in S[t]]
        t += 1
    return U, S, V


def integer_kernel(a: Sequence[Sequence[int]], ncols: int) -> IntMat:
    """Basis (as rows) of ``{x in Z^ncols : a x = 0}``."""
    _, S, V = smith_normal_form(a, ncols)
    r = sum(1 for i in range(min(len(S), ncols)) if S[i][i])
    return [[V[i][j] for i in range(ncols)] for j in range(r, ncols)]


def hermite_normal_form(rows: Sequence[Sequence[int]], ncols: int) -> IntMat:
    """Row-style HNF of the lattice generated by ``rows``; zero rows dropped.

    Pivots are positive and entries above each pivot lie in ``[0, pivot)``.
    """
    H = [list(r) for r in rows if any(r)]
    for r in H:
        if len(r) != ncols:
            raise ShapeError("ragged integer matrix")
    top = 0
    for c in range(ncols):
        if top >= len(H):
            break
        while True:
            nz = [i for i in range(top, len(H)) if H[i][c]]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(H[i][c]))
            H[top], H[p] = H[p], H[top]
            done = True
            for i in range(top + 1, len(H)):
                if H[i][c]:
                    q = H[i][c] // H[top][c]
                    H[i] = [x - q * y for x, y in zip(H[i], H[top])]
                    if H[i][c]:
                        done = False
            if done:
                break
        if top < len(H) and H[top][c]:
            if H[top][c] < 0:
                H[top] = [-x for x in H[top]]
            piv = H[top][c]
            for i in range(top):
                q = H[i][c] // piv
                if q:
                    H[i] = [x - q * y for x, y in zip(H[i], H[top])]
            top += 1
    return [r for r in H if any(r)]


def smith_kernel(e: Sequence[Sequence[int]], modulus: int, ncols: int | None = None) -> IntMat:
    """HNF basis of ``{a in Z^n : e a ≡ 0 (mod modulus)}``.

    ``modulus == 0`` asks for the kernel over Z.  For a positive modulus the
    congruence is lifted to the integer system ``[e | N I] (a, k) = 0`` and
    the kernel of that stacked matrix is projected onto its first n coordinates.

    >>> smith_kernel([[0, 1], [-1, 0]], 5)
    [[5, 0], [0, 5]]
    """
    if modulus < 0:
        raise ValueError(f"modulus must be nonnegative, got {modulus}")
    n = ncols if ncols is not None else (len(e[0]) if e else 0)
    m = len(e)
    for row in e:
        if len(row) != n:
            raise ShapeError("ragged integer matrix")
    if modulus == 0:
        gens = integer_kernel(e, n)
    else:
        stacked = [list(map(int, e[i])) + [modulus if k == i else 0 for k in range(m)] for i in range(m)]
        gens = [v[:n] for v in integer_kernel(stacked, n + m)]
    return hermite_normal_form(gens, n)


def in_lattice(basis: Sequence[Sequence[int]], v: Sequence[int]) -> bool:
    """Membership test against an HNF basis."""
    v = list(v)
    for row in basis:
        c = next(i for i, x in enumerate(row) if x)
        if v[c] % row[c]:
            return False
        q = v[c] // row[c]
        v = [x - q * y for x, y in zip(v, row)]
    return not any(v)
