"""Exact integer and field linear algebra on lists of Python ints."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple

Matrix = List[List[int]]


def as_int_matrix(M) -> Matrix:
    return [[int(x) for x in row] for row in M]


def identity(k: int) -> Matrix:
    return [[int(i == j) for j in range(k)] for i in range(k)]


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> Matrix:
    if not A:
        return []
    inner = len(B)
    cols = len(B[0]) if B else 0
    return [[sum(A[i][t] * B[t][j] for t in range(inner)) for j in range(cols)] for i in range(len(A))]


def det(M: Sequence[Sequence[int]]) -> int:
    """Integer determinant by fraction-free (Bareiss) elimination."""
    A = as_int_matrix(M)
    k = len(A)
    if any(len(row) != k for row in A):
        raise ValueError("determinant of a non-square matrix")
    if k == 0:
        return 1
    sign, prev = 1, 1
    for i in range(k - 1):
        if A[i][i] == 0:
            for r in range(i + 1, k):
                if A[r][i] != 0:
                    A[i], A[r] = A[r], A[i]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(i + 1, k):
            for c in range(i + 1, k):
                A[r][c] = (A[r][c] * A[i][i] - A[r][i] * A[i][c]) // prev
        prev = A[i][i]
    return sign * A[k - 1][k - 1]


def smith_normal_form(M) -> Tuple[Matrix, Matrix, Matrix]:
    """Return (D, U, V) with U M V = D, U and V unimodular.

    D is diagonal with nonnegative entries d_1 | d_2 | ... followed by zeros.
    """
    A = as_int_matrix(M)
    m = len(A)
    k = len(A[0]) if m else 0
    U = identity(m)
    V = identity(k)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):  # row_dst += q * row_src
        A[dst] = [a + q * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, q):  # col_dst += q * col_src
        for row in A:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    for t in range(min(m, k)):
        while True:
            piv = None
            for i in range(t, m):
                for j in range(t, k):
                    if A[i][j] and (piv is None or abs(A[i][j]) < abs(A[piv[0]][piv[1]])):
                        piv = (i, j)
            if piv is None:
                break
            swap_rows(t, piv[0])
            swap_cols(t, piv[1])
            p = A[t][t]
            dirty = False
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(t, i, -(A[i][t] // p))
                    dirty |= A[i][t] != 0
            for j in range(t + 1, k):
                if A[t][j]:
                    add_col(t, j, -(A[t][j] // p))
                    dirty |= A[t][j] != 0
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, k) if A[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(bad, t, 1)
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
    return A, U, V


def invariant_factors(M) -> List[int]:
    D, _, _ = smith_normal_form(M)
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0)) if D[i][i]]


# ---------------------------------------------------------------- fields


def _to_field(x, p: int):
    return Fraction(x) if p == 0 else int(x) % p


def _inv(x, p: int):
    return 1 / x if p == 0 else pow(x, -1, p)


def rref(M, p: int = 0) -> Tuple[list, List[int]]:
    """Reduced row echelon form over Q (p = 0) or F_p; returns (R, pivot columns)."""
    R = [[_to_field(x, p) for x in row] for row in M]
    m = len(R)
    k = len(R[0]) if m else 0
    pivots: List[int] = []
    r = 0
    for c in range(k):
        if r == m:
            break
        piv = next((i for i in range(r, m) if R[i][c] != 0), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        inv = _inv(R[r][c], p)
        R[r] = [x * inv if p == 0 else (x * inv) % p for x in R[r]]
        for i in range(m):
            if i != r and R[i][c] != 0:
                f = R[i][c]
                if p == 0:
                    R[i] = [a - f * b for a, b in zip(R[i], R[r])]
                else:
                    R[i] = [(a - f * b) % p for a, b in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
    return R, pivots


def rank(M, p: int = 0) -> int:
    if not M or not M[0]:
        return 0
    return len(rref(M, p)[1])


def nullspace(M, ncols: int, p: int = 0) -> list:
    """Basis (as columns, list of vectors) of {v : M v = 0} over the field."""
    if not M:
        return [[_to_field(int(i == j), p) for i in range(ncols)] for j in range(ncols)]
    R, pivots = rref(M, p)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [_to_field(0, p)] * ncols
        v[f] = _to_field(1, p)
        for row, pc in zip(R, pivots):
            v[pc] = -row[f] if p == 0 else (-row[f]) % p
        basis.append(v)
    return basis
