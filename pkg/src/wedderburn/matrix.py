"""Matrices over (possibly noncommutative) rings and the structured matrices
attached to a set of points: Vandermonde, Wronskian, their inverses and LU forms.

Row and column indices are 0-based everywhere.  Row i of a Vandermonde matrix
holds N_i(x_j), so the first row is all ones.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rings import NotInvertibleError, Ring, Scalar, sd_conjugate
from .skewpoly import (
    SkewPoly,
    evaluate,
    llcm_set,
    norm_N,
    operator_apply,
    pindep_test,
    pseudo_linear_apply,
)


class SingularMatrixError(NotInvertibleError):
    """Raised for a singular matrix; ``witness`` is a nonzero row y with y*A = 0."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class DependentPointsError(ValueError):
    pass


class DivMatrix:
    """Dense immutable matrix with entries in one ring."""

    __slots__ = ("ring", "rows")

    def __init__(self, ring: Ring, rows):
        self.ring = ring
        self.rows = tuple(tuple(ring(x) for x in r) for r in rows)
        if self.rows and len({len(r) for r in self.rows}) != 1:
            raise ValueError("rows must have equal length")

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "DivMatrix":
        return cls(ring, [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, ring: Ring, m: int, n: int | None = None) -> "DivMatrix":
        return cls(ring, [[ring.zero] * (m if n is None else n) for _ in range(m)])

    @classmethod
    def diag(cls, ring: Ring, entries) -> "DivMatrix":
        entries = list(entries)
        n = len(entries)
        return cls(ring, [[entries[i] if i == j else ring.zero for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return self.shape[1]

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        if isinstance(ij, tuple):
            i, j = ij
            return self.rows[i][j]
        return self.rows[ij]

    def column(self, j: int) -> list[Scalar]:
        return [r[j] for r in self.rows]

    def diagonal(self) -> list[Scalar]:
        return [self.rows[i][i] for i in range(min(self.shape))]

    def minor(self, i: int, j: int) -> "DivMatrix":
        """Delete row i and column j."""
        return DivMatrix(self.ring, [r[:j] + r[j + 1:] for k, r in enumerate(self.rows) if k != i])

    def map(self, fn) -> "DivMatrix":
        return DivMatrix(self.ring, [[fn(x) for x in r] for r in self.rows])

    def S(self) -> "DivMatrix":
        return self.map(lambda x: x.S())

    def D(self) -> "DivMatrix":
        return self.map(lambda x: x.D())

    def __add__(self, o: "DivMatrix") -> "DivMatrix":
        if self.shape != o.shape:
            raise ValueError("shape mismatch")
        return DivMatrix(self.ring, [[x + y for x, y in zip(a, b)] for a, b in zip(self.rows, o.rows)])

    def __sub__(self, o: "DivMatrix") -> "DivMatrix":
        return self + (-o)

    def __neg__(self):
        return self.map(lambda x: -x)

    def __mul__(self, o):
        if isinstance(o, DivMatrix):
            if self.ncols != o.nrows:
                raise ValueError(f"cannot multiply {self.shape} by {o.shape}")
            cols = [o.column(j) for j in range(o.ncols)]
            zero = self.ring.zero
            out = []
            for r in self.rows:
                row = []
                for c in cols:
                    s = zero
                    for x, y in zip(r, c):
                        if x and y:
                            s = s + x * y
                    row.append(s)
                out.append(row)
            return DivMatrix(self.ring, out)
        c = self.ring(o)
        return self.map(lambda x: x * c)

    def __rmul__(self, o):
        c = self.ring(o)
        return self.map(lambda x: c * x)

    def __eq__(self, o):
        if not isinstance(o, DivMatrix):
            return NotImplemented
        return self.ring == o.ring and self.rows == o.rows

    def __hash__(self):
        return hash(self.rows)

    def is_upper_triangular(self) -> bool:
        return all(not self.rows[i][j] for i in range(self.nrows) for j in range(min(i, self.ncols)))

    def inverse(self) -> "DivMatrix":
        return gauss_invert(self)

    def is_invertible(self) -> bool:
        try:
            gauss_invert(self)
        except SingularMatrixError:
            return False
        return True

    def to_strings(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self.rows]

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows) + "]"

    def __repr__(self):
        return f"DivMatrix({self}, {self.ring.name})"


def gauss_invert(A: DivMatrix) -> DivMatrix:
    """Two-sided inverse by left row operations on [A | I]."""
    if not A.is_square():
        raise ValueError("only square matrices can be inverted")
    R = A.ring
    n = A.nrows
    m = [list(r) + [R.one if i == j else R.zero for j in range(n)] for i, r in enumerate(A.rows)]
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, n) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inverse()
        m[r] = [inv * x for x in m[r]]
        for i in range(n):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
    if r < n:
        # the right half of a zero row on the left is a left dependence y with y*A = 0
        witness = m[n - 1][n:]
        raise SingularMatrixError(
            f"matrix is singular: ({', '.join(map(str, witness))}) * A = 0", witness)
    return DivMatrix(R, [row[n:] for row in m])


def quasideterminant(A: DivMatrix, i: int, j: int) -> Scalar:
    """|A|_ij = a_ij - r (A^ij)^-1 c, with r row i minus column j and c column j minus row i."""
    if not A.is_square():
        raise ValueError("quasideterminants need a square matrix")
    if A.nrows == 1:
        return A[0, 0]
    inv = gauss_invert(A.minor(i, j))
    row = DivMatrix(A.ring, [[x for k, x in enumerate(A.rows[i]) if k != j]])
    col = DivMatrix(A.ring, [[A.rows[k][j]] for k in range(A.nrows) if k != i])
    return A[i, j] - (row * inv * col)[0, 0]


def vandermonde(points) -> DivMatrix:
    """V[i][j] = N_i(x_j)."""
    points = list(points)
    R = points[0].ring
    n = len(points)
    return DivMatrix(R, [[norm_N(x, i) for x in points] for i in range(n)])


def wronskian(a: Scalar, us) -> DivMatrix:
    """W[i][j] = T_a^i(u_j)."""
    us = list(us)
    n = len(us)
    rows = [list(us)]
    for _ in range(n - 1):
        rows.append([pseudo_linear_apply(a, u) for u in rows[-1]])
    return DivMatrix(a.ring, rows)


def coefficient_matrix(polys, n: int) -> DivMatrix:
    """Row i holds the ascending coefficients of polys[i], padded to n columns."""
    polys = list(polys)
    return DivMatrix(polys[0].ring, [p.coefficient_list(n) for p in polys])


@dataclass
class VandermondeInverse:
    C: DivMatrix
    inverse: DivMatrix
    diagonal: list      # g_i(x_i)
    polys: list         # g_i = [t - x_j | j != i]_l

    def __iter__(self):
        return iter((self.C, self.inverse))


def inverse_vandermonde_via_F(points) -> VandermondeInverse:
    """C V = diag(g_i(x_i)) with g_i the LLCM of the other points, so V^-1 = diag^-1 C."""
    points = list(points)
    if not pindep_test(points).independent:
        raise DependentPointsError("points are P-dependent, the Vandermonde matrix is singular")
    R = points[0].ring
    n = len(points)
    if n == 1:
        g = [SkewPoly.constant(R, R.one)]
    else:
        g = [llcm_set(points[:i] + points[i + 1:]).polynomial for i in range(n)]
    C = coefficient_matrix(g, n)
    diag = [evaluate(g[i], points[i]) for i in range(n)]
    inverse = DivMatrix.diag(R, [d.inverse() for d in diag]) * C
    if inverse * vandermonde(points) != DivMatrix.identity(R, n):
        raise ArithmeticError("inverse check failed")
    return VandermondeInverse(C, inverse, diag, g)


@dataclass
class LuDecomposition:
    """Lam * M = U with Lam lower unitriangular and U upper triangular.

    Row i of Lam holds the coefficients of a monic degree-i polynomial q_i
    vanishing at the first i points.  ``pivots`` is the diagonal of U and
    ``U_unit`` is diag(pivots)^-1 * U when every pivot is nonzero.
    """

    Lam: DivMatrix
    U: DivMatrix
    pivots: list
    U_unit: DivMatrix | None
    polys: list

    @property
    def strict(self) -> bool:
        return self.U_unit is not None


def _padded_partials(trace, n: int) -> list[SkewPoly]:
    R = trace.ring
    t = SkewPoly.t(R)
    out = []
    for i in range(n):
        p = trace.partials[i]
        out.append(t ** (i - p.degree) * p)
    return out


def _lu_from(polys, M: DivMatrix, U: DivMatrix) -> LuDecomposition:
    R = M.ring
    n = M.nrows
    Lam = coefficient_matrix(polys, n)
    pivots = U.diagonal()
    U_unit = None
    if all(pivots):
        U_unit = DivMatrix.diag(R, [p.inverse() for p in pivots]) * U
    return LuDecomposition(Lam, U, pivots, U_unit, polys)


def lu_vandermonde(points) -> LuDecomposition:
    """Lam V = U with U[i][j] = q_i(x_j); q_i = p_i when the points are P-independent."""
    points = list(points)
    n = len(points)
    V = vandermonde(points)
    polys = _padded_partials(llcm_set(points), n)
    U = DivMatrix(V.ring, [[evaluate(q, x) for x in points] for q in polys])
    return _lu_from(polys, V, U)


def lu_wronskian(a: Scalar, us) -> LuDecomposition:
    """Lam W = Z with Z[i][j] = q_i(T_a)(u_j), q_i built from the points a^{u_j}.

    Zero exponents contribute nothing to the LLCM chain.
    """
    us = list(us)
    R = a.ring
    W = wronskian(a, us)
    p = SkewPoly.constant(R, R.one)
    partials = [p]
    for u in us[:-1]:
        if u:
            x = sd_conjugate(a, u)
            v = evaluate(p, x)
            if v:
                p = SkewPoly.linear(R, sd_conjugate(x, v)) * p
        partials.append(p)
    t = SkewPoly.t(R)
    polys = [t ** (i - q.degree) * q for i, q in enumerate(partials)]
    Z = DivMatrix(R, [[operator_apply(q, a, u) for u in us] for q in polys])
    return _lu_from(polys, W, Z)


def companion_matrix(f: SkewPoly) -> DivMatrix:
    """Ones on the superdiagonal, last row -f_0 ... -f_{n-1}."""
    if not f.is_monic():
        raise ValueError("companion matrix needs a monic polynomial")
    R = f.ring
    n = f.degree
    rows = [[R.one if j == i + 1 else R.zero for j in range(n)] for i in range(n - 1)]
    rows.append([-f[k] for k in range(n)])
    return DivMatrix(R, rows)


def companion_check(f: SkewPoly, points) -> bool:
    """V invertible and C_f V = S(V) diag(points) + D(V)."""
    points = list(points)
    if f.degree != len(points):
        raise ValueError("degree of f must equal the number of points")
    V = vandermonde(points)
    if not V.is_invertible():
        return False
    lhs = companion_matrix(f) * V
    rhs = V.S() * DivMatrix.diag(f.ring, points) + V.D()
    return lhs == rhs
