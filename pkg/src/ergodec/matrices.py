"""Exact dense matrices and rational subspaces.

Everything here is arbitrary precision: entries are Python ints or
fractions.Fraction.  Determinants use fraction-free Bareiss elimination,
characteristic polynomials use the division-free Berkowitz recursion, and
subspaces are kept in reduced row echelon form so that equality of
subspaces is equality of representations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .intpoly import Polynomial, _norm_scalar


class DimensionError(ValueError):
    """Shapes do not match the operation."""


@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix with exact entries."""

    rows: tuple

    @staticmethod
    def from_rows(rows) -> "Matrix":
        data = tuple(tuple(_norm_scalar(x) for x in row) for row in rows)
        if not data or not data[0]:
            raise DimensionError("matrix must have at least one row and column")
        width = len(data[0])
        if any(len(row) != width for row in data):
            raise DimensionError("ragged rows")
        return Matrix(data)

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @staticmethod
    def block_diag(*blocks: "Matrix") -> "Matrix":
        n = sum(b.nrows for b in blocks)
        m = sum(b.ncols for b in blocks)
        rows = [[0] * m for _ in range(n)]
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.nrows):
                for j in range(b.ncols):
                    rows[r0 + i][c0 + j] = b.rows[i][j]
            r0 += b.nrows
            c0 += b.ncols
        return Matrix.from_rows(rows)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    @property
    def is_integral(self) -> bool:
        return all(isinstance(x, int) for row in self.rows for x in row)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(tuple(
            tuple(_norm_scalar(a + b) for a, b in zip(r1, r2))
            for r1, r2 in zip(self.rows, other.rows)
        ))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(tuple(
            tuple(_norm_scalar(a - b) for a, b in zip(r1, r2))
            for r1, r2 in zip(self.rows, other.rows)
        ))

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise DimensionError("inner dimensions do not match")
        cols = tuple(zip(*other.rows))
        return Matrix(tuple(
            tuple(_norm_scalar(sum(a * b for a, b in zip(row, col))) for col in cols)
            for row in self.rows
        ))

    def matvec(self, v) -> tuple:
        if len(v) != self.ncols:
            raise DimensionError("vector length does not match")
        return tuple(_norm_scalar(sum(a * b for a, b in zip(row, v))) for row in self.rows)

    def __pow__(self, k: int) -> "Matrix":
        if not self.is_square:
            raise DimensionError("power of a non-square matrix")
        if k < 0:
            return self.inverse() ** (-k)
        out = Matrix.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def transpose(self) -> "Matrix":
        return Matrix(tuple(zip(*self.rows)))

    def det(self):
        """Exact determinant by fraction-free Bareiss elimination."""
        if not self.is_square:
            raise DimensionError("determinant of a non-square matrix")
        n = self.nrows
        m = [list(row) for row in self.rows]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                    m[i][j] = _exact_div(num, prev)
                m[i][k] = 0
            prev = m[k][k]
        return _norm_scalar(sign * m[n - 1][n - 1])

    def inverse(self) -> "Matrix":
        """Exact inverse via Gauss-Jordan elimination."""
        if not self.is_square:
            raise DimensionError("inverse of a non-square matrix")
        n = self.nrows
        aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
               for i, row in enumerate(self.rows)]
        for col in range(n):
            pivot = next((i for i in range(col, n) if aug[i][col] != 0), None)
            if pivot is None:
                raise ValueError("matrix is singular")
            aug[col], aug[pivot] = aug[pivot], aug[col]
            inv = 1 / aug[col][col]
            aug[col] = [x * inv for x in aug[col]]
            for i in range(n):
                if i != col and aug[i][col] != 0:
                    f = aug[i][col]
                    aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
        return Matrix.from_rows([row[n:] for row in aug])

    def char_poly(self) -> Polynomial:
        """Monic characteristic polynomial det(xI - A), by the
        division-free Berkowitz recursion."""
        if not self.is_square:
            raise DimensionError("characteristic polynomial of a non-square matrix")
        coeffs_high_first = _berkowitz(self.rows)
        return Polynomial.from_coeffs(tuple(reversed(coeffs_high_first)))

    def _same_shape(self, other: "Matrix") -> None:
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise DimensionError("shapes do not match")


def _exact_div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError("inexact division in fraction-free elimination")
        return q
    return _norm_scalar(Fraction(a) / Fraction(b))


def _berkowitz(rows) -> list:
    """Characteristic polynomial coefficients, highest degree first."""
    n = len(rows)
    if n == 1:
        return [1, -rows[0][0]]
    a = rows[0][0]
    top = rows[0][1:]
    left = [row[0] for row in rows[1:]]
    minor = [row[1:] for row in rows[1:]]
    # v = [1, -a, -R C, -R M C, ..., -R M^(n-2) C]
    v = [1, -a]
    w = left
    for _ in range(n - 1):
        v.append(-sum(x * y for x, y in zip(top, w)))
        w = [sum(r[j] * w[j] for j in range(n - 1)) for r in minor]
    q = _berkowitz(minor)
    out = []
    for i in range(n + 1):
        s = 0
        for j in range(len(q)):
            k = i - j
            if 0 <= k < len(v):
                s += v[k] * q[j]
        out.append(s)
    return out


def char_poly(m: Matrix) -> Polynomial:
    return m.char_poly()


def rref(rows):
    """Reduced row echelon form over the rationals.

    Returns (rows, pivot_columns) with zero rows dropped and pivots
    normalized to 1.
    """
    work = [[Fraction(x) for x in row] for row in rows]
    if not work:
        return [], []
    ncols = len(work[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(work)) if work[i][c] != 0), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = 1 / work[r][c]
        work[r] = [x * inv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    out = [tuple(_norm_scalar(x) for x in row) for row in work[:r]]
    return out, pivots


@dataclass(frozen=True)
class Subspace:
    """Rational subspace of Q^ambient with a canonical echelon basis.

    Two subspaces are equal as sets exactly when their representations
    are equal, so subspace equality is just dataclass equality.
    """

    ambient: int
    basis: tuple
    pivots: tuple

    @staticmethod
    def span(ambient: int, vectors) -> "Subspace":
        vecs = [tuple(v) for v in vectors]
        for v in vecs:
            if len(v) != ambient:
                raise DimensionError("vector does not match ambient dimension")
        rows, pivots = rref(vecs)
        return Subspace(ambient, tuple(rows), tuple(pivots))

    @staticmethod
    def zero(ambient: int) -> "Subspace":
        return Subspace(ambient, (), ())

    @staticmethod
    def full(ambient: int) -> "Subspace":
        return Subspace.span(ambient, Matrix.identity(ambient).rows)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def is_zero(self) -> bool:
        return not self.basis

    @property
    def is_full(self) -> bool:
        return self.dim == self.ambient

    def reduce(self, v) -> tuple:
        """Residual of v after eliminating pivot coordinates."""
        w = list(v)
        for row, p in zip(self.basis, self.pivots):
            c = w[p]
            if c != 0:
                for j in range(self.ambient):
                    w[j] -= c * row[j]
        return tuple(_norm_scalar(Fraction(x)) for x in w)

    def contains(self, v) -> bool:
        return all(x == 0 for x in self.reduce(v))

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def coordinates(self, v) -> tuple:
        """Coordinates of v in the echelon basis; v must lie in the span."""
        if not self.contains(v):
            raise ValueError("vector is not in the subspace")
        return tuple(v[p] for p in self.pivots)

    def add(self, other: "Subspace") -> "Subspace":
        if self.ambient != other.ambient:
            raise DimensionError("ambient dimensions differ")
        return Subspace.span(self.ambient, list(self.basis) + list(other.basis))

    def intersect(self, other: "Subspace") -> "Subspace":
        if self.ambient != other.ambient:
            raise DimensionError("ambient dimensions differ")
        if self.is_zero or other.is_zero:
            return Subspace.zero(self.ambient)
        cols = [list(v) for v in self.basis] + [[-x for x in v] for v in other.basis]
        system = Matrix.from_rows(list(zip(*cols)))
        sol = kernel(system)
        vectors = []
        for s in sol.basis:
            vec = [0] * self.ambient
            for coef, bvec in zip(s[: self.dim], self.basis):
                if coef != 0:
                    for j in range(self.ambient):
                        vec[j] += coef * bvec[j]
            vectors.append(tuple(vec))
        return Subspace.span(self.ambient, vectors)

    def is_invariant(self, m: Matrix) -> bool:
        return all(self.contains(m.matvec(v)) for v in self.basis)

    def integral_basis(self) -> tuple:
        """Basis with denominators cleared and integer gcd one per vector."""
        out = []
        for v in self.basis:
            den = 1
            for x in v:
                if isinstance(x, Fraction):
                    den = den * x.denominator // _gcd(den, x.denominator)
            w = [int(x * den) for x in v]
            g = 0
            for x in w:
                g = _gcd(g, abs(x))
            if g > 1:
                w = [x // g for x in w]
            out.append(tuple(w))
        return tuple(out)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def kernel(m: Matrix) -> Subspace:
    """Canonical basis of the right null space of m."""
    rows, pivots = rref(m.rows)
    ncols = m.ncols
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    vectors = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, p in zip(rows, pivots):
            v[p] = _norm_scalar(-Fraction(row[f]))
        vectors.append(tuple(v))
    return Subspace.span(ncols, vectors)


def restrict_matrix(m: Matrix, sub: Subspace) -> Matrix:
    """Matrix of m restricted to an m-invariant subspace, in the
    canonical echelon basis of the subspace."""
    if sub.is_zero:
        raise DimensionError("cannot restrict to the zero subspace")
    cols = []
    for v in sub.basis:
        w = m.matvec(v)
        if not sub.contains(w):
            raise ValueError("subspace is not invariant under the matrix")
        cols.append(sub.coordinates(w))
    return Matrix.from_rows(list(zip(*cols)))


def express_in(sub_outer: Subspace, sub_inner: Subspace) -> Subspace:
    """Rewrite a subspace contained in sub_outer in the coordinates of
    sub_outer's echelon basis."""
    vecs = [sub_outer.coordinates(v) for v in sub_inner.basis]
    return Subspace.span(sub_outer.dim, vecs)


def quotient_matrix(m: Matrix, sub: Subspace) -> Matrix:
    """Matrix induced by m on the quotient of the ambient space by an
    m-invariant subspace, in the non-pivot coordinates."""
    n = m.nrows
    if not sub.is_invariant(m):
        raise ValueError("subspace is not invariant under the matrix")
    if sub.is_full:
        raise DimensionError("quotient by the full space is zero-dimensional")
    pivot_set = set(sub.pivots)
    coords = [c for c in range(n) if c not in pivot_set]
    cols = []
    for c in coords:
        e = tuple(1 if j == c else 0 for j in range(n))
        w = sub.reduce(m.matvec(e))
        cols.append(tuple(w[j] for j in coords))
    return Matrix.from_rows(list(zip(*cols)))


def lift_from_quotient(sub: Subspace, qvector) -> tuple:
    """A representative in the ambient space of a quotient coordinate
    vector (coordinates indexed by the non-pivot columns of sub)."""
    n = sub.ambient
    pivot_set = set(sub.pivots)
    coords = [c for c in range(n) if c not in pivot_set]
    if len(qvector) != len(coords):
        raise DimensionError("quotient vector has the wrong length")
    v = [0] * n
    for c, x in zip(coords, qvector):
        v[c] = x
    return tuple(v)
