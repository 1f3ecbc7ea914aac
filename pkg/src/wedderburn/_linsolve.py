"""Exact solver for A x = b over a division ring (row operations act on the left)."""

from __future__ import annotations


def solve_linear(ring, rows, rhs):
    """Solve ``rows . x = rhs`` for a column x.

    Returns ``(x, None)`` with free variables set to zero, or
    ``(None, certificate)`` where the certificate names a left combination of
    equations that reads 0 = nonzero.
    """
    m = len(rows)
    ncols = len(rows[0]) if rows else 0
    a = [list(r) + [b] for r, b in zip(rows, rhs)]
    # track the left transform so an inconsistency can be reported as y.A = 0, y.b != 0
    t = [[ring.one if i == j else ring.zero for j in range(m)] for i in range(m)]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, m) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        t[r], t[piv] = t[piv], t[r]
        inv = a[r][c].inverse()
        a[r] = [inv * x for x in a[r]]
        t[r] = [inv * x for x in t[r]]
        for i in range(m):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
                t[i] = [x - f * y for x, y in zip(t[i], t[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if a[i][ncols]:
            y = ", ".join(str(v) for v in t[i])
            return None, f"left combination ({y}) of the equations gives 0 = {a[i][ncols]}"
    x = [ring.zero] * ncols
    for i, c in enumerate(pivots):
        x[c] = a[i][ncols]
    return x, None
