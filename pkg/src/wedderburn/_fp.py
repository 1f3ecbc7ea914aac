"""Linear algebra over a prime field F_p on integer vectors."""

from __future__ import annotations

from itertools import product


def row_reduce(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form mod p; returns (nonzero rows, pivot columns)."""
    m = [[x % p for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [x * inv % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(vectors: list[list[int]], p: int) -> int:
    return len(row_reduce(vectors, p)[0])


def nullspace(matrix: list[list[int]], p: int, ncols: int | None = None) -> list[list[int]]:
    """Basis of {v : matrix . v = 0} (v a column vector)."""
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    red, pivots = row_reduce(matrix, p) if matrix else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, pc in zip(red, pivots):
            v[pc] = (-row[f]) % p
        basis.append(v)
    return basis


def span(vectors: list[list[int]], p: int, dim: int) -> set[tuple[int, ...]]:
    """Every element of the F_p-span, as tuples."""
    basis, _ = row_reduce(vectors, p) if vectors else ([], [])
    out = set()
    for coeffs in product(range(p), repeat=len(basis)):
        v = [0] * dim
        for c, b in zip(coeffs, basis):
            if c:
                v = [(x + c * y) % p for x, y in zip(v, b)]
        out.add(tuple(v))
    return out
