"""Row reduction and small matrices over a finite field.

Matrices are numpy int64 arrays of element codes of a `GF`.
"""

import numpy as np

from .fields import FieldError


def rref(F, M):
    """Reduced row-echelon form of M over F.

    Returns (rank, R, pivots) where pivots lists the pivot columns.
    """
    R = np.array(M, dtype=np.int64, copy=True)
    if R.ndim != 2:
        raise ValueError("rref expects a 2-d array")
    nrows, ncols = R.shape
    pivots = []
    rank = 0
    for c in range(ncols):
        if rank == nrows:
            break
        nz = np.flatnonzero(R[rank:, c])
        if nz.size == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            R[[rank, piv]] = R[[piv, rank]]
        lead = int(R[rank, c])
        if lead != 1:
            R[rank] = F.vmul(R[rank], F.inv(lead))
        col = R[:, c].copy()
        col[rank] = 0
        rows = np.flatnonzero(col)
        if rows.size:
            R[rows] = F.vsub(R[rows], F.vmul(col[rows, None], R[rank][None, :]))
        pivots.append(c)
        rank += 1
    return rank, R, pivots


def rank(F, M):
    M = np.asarray(M)
    if M.size == 0:
        return 0
    return rref(F, M)[0]


def nullspace(F, M):
    """Basis (as rows) of {x : M x = 0}."""
    M = np.asarray(M, dtype=np.int64)
    ncols = M.shape[1]
    if M.shape[0] == 0:
        return np.eye(ncols, dtype=np.int64)
    r, R, pivots = rref(F, M)
    free = [c for c in range(ncols) if c not in pivots]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for row, pc in enumerate(pivots):
            basis[i, pc] = F.neg(int(R[row, f]))
    return basis


def left_nullspace(F, M):
    """Basis (as rows) of {y : y M = 0}."""
    return nullspace(F, np.asarray(M, dtype=np.int64).T)


def independent_rows(F, M):
    """Indices of a maximal independent set of rows, earliest rows first."""
    M = np.asarray(M, dtype=np.int64)
    if M.shape[0] == 0:
        return []
    return rref(F, M.T)[2]


def matmul(F, A, B):
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    if F.base is None:
        return (A @ B) % F.p
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for k in range(A.shape[1]):
        out = F.vadd(out, F.vmul(A[:, k, None], B[None, k, :]))
    return out


def det(F, A):
    A = np.array(A, dtype=np.int64, copy=True)
    n = A.shape[0]
    d = 1
    for c in range(n):
        nz = np.flatnonzero(A[c:, c])
        if nz.size == 0:
            return 0
        piv = c + nz[0]
        if piv != c:
            A[[c, piv]] = A[[piv, c]]
            d = F.neg(d)
        lead = int(A[c, c])
        d = F.mul(d, lead)
        inv = F.inv(lead)
        for row in range(c + 1, n):
            if A[row, c]:
                f = F.mul(int(A[row, c]), inv)
                A[row] = F.vsub(A[row], F.vmul(f, A[c]))
    return d


class FqMatrix:
    """Immutable square or rectangular matrix over a GF, hashable."""

    __slots__ = ("field", "a", "_key")

    def __init__(self, field, entries):
        a = np.array(entries, dtype=np.int64)
        if a.ndim != 2 or a.size == 0:
            raise ValueError("matrix entries must form a non-empty 2-d grid")
        if a.min() < 0 or a.max() >= field.order:
            raise FieldError("matrix entry is not a reduced field element")
        a.setflags(write=False)
        self.field = field
        self.a = a
        self._key = (a.shape, a.tobytes())

    @classmethod
    def identity(cls, field, r):
        return cls(field, np.eye(r, dtype=np.int64))

    @property
    def shape(self):
        return self.a.shape

    @property
    def rows(self):
        return self.a.shape[0]

    @property
    def cols(self):
        return self.a.shape[1]

    def __matmul__(self, other):
        return FqMatrix(self.field, matmul(self.field, self.a, other.a))

    def __sub__(self, other):
        return FqMatrix(self.field, self.field.vsub(self.a, other.a))

    def __add__(self, other):
        return FqMatrix(self.field, self.field.vadd(self.a, other.a))

    def __pow__(self, e):
        out = FqMatrix.identity(self.field, self.rows)
        base = self
        while e:
            if e & 1:
                out = out @ base
            base = base @ base
            e >>= 1
        return out

    def det(self):
        return det(self.field, self.a)

    def is_invertible(self):
        return self.rows == self.cols and self.det() != 0

    def inverse(self):
        n = self.rows
        if not self.is_invertible():
            raise FieldError("matrix is singular")
        aug = np.hstack([self.a, np.eye(n, dtype=np.int64)])
        _, R, _ = rref(self.field, aug)
        return FqMatrix(self.field, R[:, n:])

    def is_zero(self):
        return not self.a.any()

    def transpose(self):
        return FqMatrix(self.field, self.a.T)

    def tolist(self):
        return self.a.tolist()

    def sort_key(self):
        return tuple(self.a.ravel().tolist())

    def __eq__(self, other):
        return isinstance(other, FqMatrix) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        F = self.field
        rows = ["[" + " ".join(F.format(int(x)) for x in row) + "]" for row in self.a]
        return "[" + " ".join(rows) + "]"


def mat_rref(M):
    """rref of an FqMatrix; returns (rank, reduced FqMatrix, pivots)."""
    r, R, piv = rref(M.field, M.a)
    return r, FqMatrix(M.field, R), piv
