"""Matrices over the algebra, their embedding over K, and determinants.

A k x k matrix over (a,b/F) embeds into 2k x 2k matrices over K by
splitting every entry q = z1 + z2*j and assembling the global block
matrix [[B, b*C], [conj(C), conj(B)]], where B and C hold the z1 and z2
parts.  The embedding is a ring homomorphism, and the determinant of
the image (always a rational) is the reduced norm.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .algebra import AlgebraParams, KElem, Quat, quat_halves
from .errors import (
    DimensionMismatch,
    InternalInvariant,
    NotInvertible,
    UnsupportedAlgebra,
)
from .freepoly import CommPoly, comm_det


class MatD:
    """Square matrix over the quaternion algebra; entries are immutable."""

    __slots__ = ("params", "k", "rows")

    def __init__(self, params: AlgebraParams, rows):
        self.params = params
        self.k = len(rows)
        grid = []
        for row in rows:
            if len(row) != self.k:
                raise DimensionMismatch("matrix is not square")
            for q in row:
                if q.params != params:
                    raise ValueError("entry lives in a different algebra")
            grid.append(tuple(row))
        self.rows = tuple(grid)

    @classmethod
    def identity(cls, params, k: int):
        one = Quat.one(params)
        zero = Quat.zero(params)
        return cls(params, [[one if r == c else zero for c in range(k)] for r in range(k)])

    @classmethod
    def zeros(cls, params, k: int):
        zero = Quat.zero(params)
        return cls(params, [[zero] * k for _ in range(k)])

    def entry(self, r: int, c: int) -> Quat:
        return self.rows[r][c]

    def _check(self, other: "MatD"):
        if self.params != other.params:
            raise ValueError("operands live in different algebras")
        if self.k != other.k:
            raise DimensionMismatch(f"{self.k}x{self.k} vs {other.k}x{other.k}")

    def __add__(self, other):
        if not isinstance(other, MatD):
            return NotImplemented
        self._check(other)
        return MatD(self.params, [
            [x + y for x, y in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)
        ])

    def __sub__(self, other):
        if not isinstance(other, MatD):
            return NotImplemented
        self._check(other)
        return MatD(self.params, [
            [x - y for x, y in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)
        ])

    def __neg__(self):
        return MatD(self.params, [[-x for x in row] for row in self.rows])

    def __mul__(self, other):
        if not isinstance(other, MatD):
            return NotImplemented
        self._check(other)
        k = self.k
        out = []
        for r in range(k):
            row = []
            for c in range(k):
                acc = Quat.zero(self.params)
                for s in range(k):
                    acc = acc + self.rows[r][s] * other.rows[s][c]
                row.append(acc)
            out.append(row)
        return MatD(self.params, out)

    def scale_left(self, q: Quat) -> "MatD":
        """Multiply every entry by q on the left (order matters)."""
        return MatD(self.params, [[q * x for x in row] for row in self.rows])

    def mul_vector(self, vec):
        """Matrix times column vector of quaternions."""
        vec = tuple(vec)
        if len(vec) != self.k:
            raise DimensionMismatch("vector length does not match")
        out = []
        for row in self.rows:
            acc = Quat.zero(self.params)
            for x, v in zip(row, vec):
                acc = acc + x * v
            out.append(acc)
        return tuple(out)

    def submatrix(self, row_idx, col_idx) -> "MatD":
        return MatD(self.params, [[self.rows[r][c] for c in col_idx] for r in row_idx])

    def __eq__(self, other):
        if not isinstance(other, MatD):
            return NotImplemented
        return self.params == other.params and self.rows == other.rows

    def __repr__(self):
        return f"MatD({self.k}x{self.k})"


class MatK:
    """Square matrix over the quadratic field K = F(i)."""

    __slots__ = ("a", "m", "rows")

    def __init__(self, a: Fraction, rows):
        self.a = a
        self.m = len(rows)
        grid = []
        for row in rows:
            if len(row) != self.m:
                raise DimensionMismatch("matrix is not square")
            grid.append(tuple(row))
        self.rows = tuple(grid)

    @classmethod
    def identity(cls, a, m: int):
        one = KElem.one(a)
        zero = KElem.zero(a)
        return cls(a, [[one if r == c else zero for c in range(m)] for r in range(m)])

    def entry(self, r: int, c: int) -> KElem:
        return self.rows[r][c]

    def __add__(self, other):
        if not isinstance(other, MatK):
            return NotImplemented
        if self.m != other.m:
            raise DimensionMismatch(f"{self.m} vs {other.m}")
        return MatK(self.a, [
            [x + y for x, y in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)
        ])

    def __sub__(self, other):
        if not isinstance(other, MatK):
            return NotImplemented
        if self.m != other.m:
            raise DimensionMismatch(f"{self.m} vs {other.m}")
        return MatK(self.a, [
            [x - y for x, y in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)
        ])

    def __mul__(self, other):
        if not isinstance(other, MatK):
            return NotImplemented
        if self.m != other.m:
            raise DimensionMismatch(f"{self.m} vs {other.m}")
        m = self.m
        out = []
        for r in range(m):
            row = []
            for c in range(m):
                acc = KElem.zero(self.a)
                for s in range(m):
                    acc = acc + self.rows[r][s] * other.rows[s][c]
                row.append(acc)
            out.append(row)
        return MatK(self.a, out)

    def conj(self) -> "MatK":
        return MatK(self.a, [[x.conj() for x in row] for row in self.rows])

    def det(self) -> KElem:
        """Exact determinant over K, through the one determinant engine."""
        rows = [[CommPoly.const(x) for x in row] for row in self.rows]
        result = comm_det(rows)
        return result.terms.get((0, 0, 0, 0), KElem.zero(self.a))

    def __eq__(self, other):
        if not isinstance(other, MatK):
            return NotImplemented
        return self.a == other.a and self.rows == other.rows

    def __repr__(self):
        return f"MatK({self.m}x{self.m})"


def embed_matrix(mat: MatD) -> MatK:
    """Embed a k x k quaternion matrix into M_2k(K).

    Global block layout [[B, b*C], [conj(C), conj(B)]] where the entry
    (r, c) of mat splits as z1 + z2*j with z1 = B[r][c], z2 = C[r][c].
    Ring homomorphism; the determinant of the image is the reduced norm.
    """
    params = mat.params
    a, b = params.a, params.b
    k = mat.k
    zero = KElem.zero(a)
    out = [[zero] * (2 * k) for _ in range(2 * k)]
    for r in range(k):
        for c in range(k):
            z1, z2 = quat_halves(mat.rows[r][c])
            out[r][c] = z1
            out[r][c + k] = z2 * b
            out[r + k][c] = z2.conj()
            out[r + k][c + k] = z1.conj()
    return MatK(a, out)


def reduced_norm(mat: MatD) -> Fraction:
    """Determinant of the embedded matrix, returned as an exact rational.

    The determinant provably lies in F; a nonzero i-part would mean a
    bug, and raises InternalInvariant.  Multiplicative, and equal to the
    Study determinant over the rational Hamilton quaternions.
    """
    det = embed_matrix(mat).det()
    if det.v != 0:
        raise InternalInvariant(f"embedded determinant {det!r} has a nonzero i-part")
    return det.u


def dieudonne_det(mat: MatD) -> float:
    """Nonnegative square root of the reduced norm, as a float.

    Only defined here for definite algebras (a < 0 and b < 0), where the
    reduced norm is nonnegative and the value group is the positive
    reals; multiplicative up to floating tolerance.
    """
    if not mat.params.is_definite:
        raise UnsupportedAlgebra("Dieudonne determinant requires a < 0 and b < 0")
    nrd = reduced_norm(mat)
    if nrd < 0:
        raise InternalInvariant("reduced norm of a definite algebra came out negative")
    return math.sqrt(nrd)


def mat_is_invertible(mat: MatD) -> bool:
    """Exact invertibility test: nonzero reduced norm."""
    return reduced_norm(mat) != 0


def mat_inv(mat: MatD) -> MatD:
    """Two-sided inverse by Gauss-Jordan elimination over the algebra.

    Pivots must have nonzero reduced norm; in a division algebra that is
    every nonzero entry, so the routine is total on invertible input.
    """
    params = mat.params
    k = mat.k
    work = [list(row) for row in mat.rows]
    aug = [list(row) for row in MatD.identity(params, k).rows]
    for col in range(k):
        pivot = None
        for r in range(col, k):
            if work[r][col].nrd() != 0:
                pivot = r
                break
        if pivot is None:
            raise NotInvertible("no invertible pivot in column %d" % col)
        work[col], work[pivot] = work[pivot], work[col]
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = work[col][col].inv()
        work[col] = [inv * x for x in work[col]]
        aug[col] = [inv * x for x in aug[col]]
        for r in range(k):
            if r == col:
                continue
            factor = work[r][col]
            if not factor:
                continue
            work[r] = [x - factor * y for x, y in zip(work[r], work[col])]
            aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return MatD(params, aug)
