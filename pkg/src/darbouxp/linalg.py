"""Exact Gaussian elimination over F_p."""
from __future__ import annotations


def rref_mod_p(rows: list, ncols: int, p: int):
    """Reduced row echelon form of a matrix over F_p.

    Returns (reduced nonzero rows, pivot column list). The input is not modified.
    """
    mat = [[v % p for v in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(mat)):
            if mat[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = pow(mat[r][c], -1, p)
        prow = [v * inv % p for v in mat[r]]
        mat[r] = prow
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                row = mat[i]
                mat[i] = [(a - f * b) % p for a, b in zip(row, prow)]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def nullspace_mod_p(rows: list, ncols: int, p: int) -> list:
    """Basis of {v : M v = 0}; one vector per free column, with a 1 there."""
    reduced, pivots = rref_mod_p(rows, ncols, p)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [0] * ncols
        v[free] = 1
        for row, pc in zip(reduced, pivots):
            if row[free]:
                v[pc] = (-row[free]) % p
        basis.append(v)
    return basis
