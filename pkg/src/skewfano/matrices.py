"""Exact dense matrices over the scalar fields.

Rank, RREF, kernel and solve behave identically over ℚ, ℚ(ζ₁₂) and GF(p).
Over ℚ the elimination is fraction-free (Bareiss) on a denominator-cleared
integer matrix, which keeps the 35-column interpolation systems fast; over
the other fields ordinary division-based elimination is exact anyway.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

from .errors import FieldMismatchError
from .scalars import QQ, Field, Rational, Scalar


class ExactMatrix:
    __slots__ = ("nrows", "ncols", "field", "rows")

    def __init__(self, rows: Sequence[Sequence[Scalar]], field: Field | None = None):
        self.rows: List[List[Scalar]] = [list(r) for r in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged matrix")
        if field is None:
            if not self.rows or not self.rows[0]:
                raise ValueError("field required for an empty matrix")
            field = self.rows[0][0].field()
        self.field = field
        for r in self.rows:
            for x in r:
                if x.field() != field:
                    raise FieldMismatchError(f"{x.field()} entry in {field} matrix")

    @classmethod
    def from_ints(cls, rows, field: Field) -> "ExactMatrix":
        return cls([[field.scalar(x) for x in r] for r in rows], field)

    @classmethod
    def zero(cls, nrows: int, ncols: int, field: Field) -> "ExactMatrix":
        z = field.zero()
        return cls([[z] * ncols for _ in range(nrows)], field)

    @classmethod
    def identity(cls, n: int, field: Field) -> "ExactMatrix":
        m = cls.zero(n, n, field)
        for i in range(n):
            m.rows[i][i] = field.one()
        return m

    def __eq__(self, other):
        return (
            isinstance(other, ExactMatrix)
            and self.field == other.field
            and self.rows == other.rows
        )

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)], self.field
        )

    def __mul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.field != other.field:
            raise FieldMismatchError("matrix product across fields")
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        z = self.field.zero()
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = z
                for k in range(self.ncols):
                    acc = acc + self.rows[i][k] * other.rows[k][j]
                row.append(acc)
            out.append(row)
        return ExactMatrix(out, self.field)

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.field != other.field or (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape/field mismatch")
        return ExactMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)], self.field
        )

    def scale(self, c: Scalar) -> "ExactMatrix":
        return ExactMatrix([[x * c for x in r] for r in self.rows], self.field)

    def __neg__(self):
        return ExactMatrix([[-x for x in r] for r in self.rows], self.field)

    # -- elimination ------------------------------------------------------

    def rref(self) -> tuple["ExactMatrix", list[int]]:
        """Reduced row echelon form and the pivot column list."""
        if self.field == QQ:
            return self._rref_bareiss()
        return self._rref_generic()

    def _rref_generic(self):
        m = [row[:] for row in self.rows]
        pivots: list[int] = []
        r = 0
        for c in range(self.ncols):
            piv = next((i for i in range(r, self.nrows) if not m[i][c].is_zero()), None)
            if piv is None:
                continue
            m[r], m[piv] = m[piv], m[r]
            inv = m[r][c].inverse()
            m[r] = [x * inv for x in m[r]]
            for i in range(self.nrows):
                if i != r and not m[i][c].is_zero():
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self.nrows:
                break
        return ExactMatrix(m, self.field), pivots

    def _rref_bareiss(self):
        # Clear denominators row by row, run fraction-free FORWARD
        # elimination (the exact-divisibility theorem only covers rows below
        # the pivot), then back-substitute rationally on the echelon form.
        rows: list[list[int]] = []
        for r in self.rows:
            vals = [x.value for x in r]  # type: ignore[attr-defined]
            den = 1
            for v in vals:
                den = den * v.denominator // _gcd(den, v.denominator)
            rows.append([int(v * den) for v in vals])
        nr, nc = self.nrows, self.ncols
        pivots: list[int] = []
        prev = 1
        r = 0
        for c in range(nc):
            piv = next((i for i in range(r, nr) if rows[i][c] != 0), None)
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            for i in range(r + 1, nr):
                num = rows[i][c]
                rows[i] = [
                    (rows[r][c] * rows[i][j] - num * rows[r][j]) // prev for j in range(nc)
                ]
            prev = rows[r][c]
            pivots.append(c)
            r += 1
            if r == nr:
                break
        # rational back-substitution on the integer echelon form
        rat = [[Fraction(v) for v in row] for row in rows]
        for i in range(len(pivots) - 1, -1, -1):
            c = pivots[i]
            d = rat[i][c]
            rat[i] = [v / d for v in rat[i]]
            for k in range(i):
                f = rat[k][c]
                if f:
                    rat[k] = [a - f * b for a, b in zip(rat[k], rat[i])]
        out = []
        for i, row in enumerate(rat):
            if i < len(pivots):
                out.append([Rational(v) for v in row])
            else:
                out.append([Rational(0) for _ in row])
        return ExactMatrix(out, self.field), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> list[list[Scalar]]:
        """Exact basis of the right kernel; each vector's leading (first
        nonzero) coefficient is 1.  Empty list iff full column rank."""
        rref, pivots = self.rref()
        free = [c for c in range(self.ncols) if c not in pivots]
        one, zero = self.field.one(), self.field.zero()
        basis = []
        for f in free:
            v = [zero] * self.ncols
            v[f] = one
            for r, c in enumerate(pivots):
                v[c] = -rref.rows[r][f]
            lead = next(x for x in v if not x.is_zero())
            inv = lead.inverse()
            basis.append([x * inv for x in v])
        return basis

    def solve(self, b: Sequence[Scalar]) -> list[Scalar] | None:
        """One solution of A x = b, or None if inconsistent."""
        aug = ExactMatrix(
            [list(r) + [bv] for r, bv in zip(self.rows, b)], self.field
        )
        rref, pivots = aug.rref()
        if self.ncols in pivots:
            return None
        x = [self.field.zero()] * self.ncols
        for r, c in enumerate(pivots):
            x[c] = rref.rows[r][self.ncols]
        return x

    def det(self) -> Scalar:
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        n = self.nrows
        m = [row[:] for row in self.rows]
        acc = self.field.one()
        sign = 1
        for c in range(n):
            piv = next((i for i in range(c, n) if not m[i][c].is_zero()), None)
            if piv is None:
                return self.field.zero()
            if piv != c:
                m[c], m[piv] = m[piv], m[c]
                sign = -sign
            acc = acc * m[c][c]
            inv = m[c][c].inverse()
            for i in range(c + 1, n):
                if not m[i][c].is_zero():
                    f = m[i][c] * inv
                    m[i] = [a - f * b for a, b in zip(m[i], m[c])]
        return acc if sign == 1 else -acc

    def inverse(self) -> "ExactMatrix":
        if self.nrows != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        n = self.nrows
        aug = ExactMatrix(
            [list(r) + list(e) for r, e in zip(self.rows, ExactMatrix.identity(n, self.field).rows)],
            self.field,
        )
        rref, pivots = aug.rref()
        if pivots != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return ExactMatrix([row[n:] for row in rref.rows[:n]], self.field)

    def column_space_basis(self) -> list[list[Scalar]]:
        """Basis of the column span, as columns of the original matrix."""
        _, pivots = self.rref()
        return [[self.rows[i][c] for i in range(self.nrows)] for c in pivots]

    def __repr__(self):
        return "\n".join("[" + ", ".join(repr(x) for x in r) + "]" for r in self.rows)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def subspace_intersection(basis_a: list[list[Scalar]], basis_b: list[list[Scalar]], field: Field):
    """Basis of span(A) ∩ span(B); vectors are ambient coordinates."""
    if not basis_a or not basis_b:
        return []
    n = len(basis_a[0])
    cols = [list(v) for v in basis_a] + [[-x for x in v] for v in basis_b]
    m = ExactMatrix(cols, field).transpose()  # n × (a+b), columns are the vectors
    out = []
    for k in m.kernel_basis():
        vec = [field.zero()] * n
        for coef, v in zip(k[: len(basis_a)], basis_a):
            vec = [a + coef * b for a, b in zip(vec, v)]
        if any(not x.is_zero() for x in vec):
            out.append(vec)
    # prune to independent vectors
    if not out:
        return []
    mat = ExactMatrix(out, field)
    _, piv = mat.transpose().rref()
    return [out[i] for i in piv]
