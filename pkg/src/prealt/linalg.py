"""Exact dense linear algebra over a :class:`~prealt.fields.FieldSpec`.

Matrices are plain nested lists of field scalars (row major); vectors are
flat lists.  All values are treated as immutable after construction.
Elimination is fraction-free (Bareiss) with a deterministic pivot rule:
scan columns left to right, and inside a column take the first nonzero
row.  Every routine is exact; there are no tolerances anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import DimensionMismatch, SingularMap
from .fields import FieldSpec

Vector = list
Matrix = list


def zero_vector(field: FieldSpec, n: int) -> Vector:
    return [field.zero for _ in range(n)]

def zero_matrix(field: FieldSpec, rows: int, cols: int) -> Matrix:
    return [[field.zero for _ in range(cols)] for _ in range(rows)]

def identity_matrix(field: FieldSpec, n: int) -> Matrix:
    one, zero = field.one, field.zero
    return [[one if i == j else zero for j in range(n)] for i in range(n)]

def vec_add(u: Vector, v: Vector) -> Vector:
    return [a + b for a, b in zip(u, v, strict=True)]

def vec_sub(u: Vector, v: Vector) -> Vector:
    return [a - b for a, b in zip(u, v, strict=True)]

def vec_neg(u: Vector) -> Vector:
    return [-a for a in u]

def vec_scale(c, u: Vector) -> Vector:
    return [c * a for a in u]

def vec_is_zero(u: Vector) -> bool:
    return not any(u)

def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [vec_add(r, s) for r, s in zip(a, b, strict=True)]

def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return [vec_sub(r, s) for r, s in zip(a, b, strict=True)]

def mat_neg(a: Matrix) -> Matrix:
    return [vec_neg(r) for r in a]

def mat_scale(c, a: Matrix) -> Matrix:
    return [vec_scale(c, r) for r in a]

def mat_is_zero(a: Matrix) -> bool:
    return all(vec_is_zero(r) for r in a)

def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)] if a else []

def mat_vec(field: FieldSpec, a: Matrix, v: Vector) -> Vector:
    out = []
    for row in a:
        acc = field.zero
        for c, x in zip(row, v, strict=True):
            if c and x:
                acc = acc + c * x
        out.append(acc)
    return out

def mat_mul(field: FieldSpec, a: Matrix, b: Matrix) -> Matrix:
    if a and b and len(a[0]) != len(b):
        raise DimensionMismatch(f"cannot multiply {len(a)}x{len(a[0])} by {len(b)}x{len(b[0])}")
    bt = transpose(b)
    out = zero_matrix(field, len(a), len(bt))
    for i, row in enumerate(a):
        for j, col in enumerate(bt):
            acc = field.zero
            for c, x in zip(row, col):
                if c and x:
                    acc = acc + c * x
            out[i][j] = acc
    return out


def _echelon(field: FieldSpec, mat: Matrix):
    """Fraction-free forward elimination, in place on a copy.

    Returns ``(rows, pivots)`` where ``pivots`` maps echelon row index to
    its pivot column.
    """
    rows = [list(r) for r in mat]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    prev = field.one
    r = 0
    for c in range(ncols):
        src = next((i for i in range(r, nrows) if rows[i][c]), None)
        if src is None:
            continue
        if src != r:
            rows[r], rows[src] = rows[src], rows[r]
        piv = rows[r][c]
        for i in range(r + 1, nrows):
            head = rows[i][c]
            row_i, row_r = rows[i], rows[r]
            for j in range(c, ncols):
                row_i[j] = (row_i[j] * piv - head * row_r[j]) / prev
        prev = piv
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def rank(field: FieldSpec, mat: Matrix) -> int:
    if not mat:
        return 0
    _, pivots = _echelon(field, mat)
    return len(pivots)


def rref(field: FieldSpec, mat: Matrix):
    """Reduced row-echelon form with unit pivots, plus pivot columns."""
    rows, pivots = _echelon(field, mat)
    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r]
        piv = rows[r][c]
        rows[r] = [x / piv for x in rows[r]]
        for i in range(r):
            head = rows[i][c]
            if head:
                rows[i] = [x - head * y for x, y in zip(rows[i], rows[r])]
    return rows[: len(pivots)], pivots


def nullspace(field: FieldSpec, mat: Matrix, ncols: int | None = None) -> list[Vector]:
    """Canonical basis of the right kernel, free columns in ascending order."""
    if ncols is None:
        if not mat:
            raise DimensionMismatch("empty matrix needs an explicit column count")
        ncols = len(mat[0])
    if not mat or ncols == 0:
        return [
            [field.one if i == j else field.zero for j in range(ncols)]
            for i in range(ncols)
        ] if ncols else []
    rows, pivots = rref(field, mat)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = zero_vector(field, ncols)
        v[f] = field.one
        for r, c in enumerate(pivots):
            v[c] = -rows[r][f]
        basis.append(v)
    return basis


def solve(field: FieldSpec, a: Matrix, b: Vector) -> Vector | None:
    """One solution of ``a x = b`` or None if the system is inconsistent."""
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    aug = [list(row) + [b[i]] for i, row in enumerate(a)]
    rows, pivots = rref(field, aug)
    if ncols in pivots:
        return None
    x = zero_vector(field, ncols)
    for r, c in enumerate(pivots):
        x[c] = rows[r][ncols]
    return x


def solve_unique(field: FieldSpec, a: Matrix, b: Vector) -> Vector:
    """The unique solution of ``a x = b``; `SingularMap` otherwise."""
    ncols = len(a[0]) if a else 0
    if rank(field, a) != ncols:
        raise SingularMap("coefficient matrix has a nontrivial kernel")
    x = solve(field, a, b)
    if x is None:
        raise SingularMap("inconsistent linear system")
    return x


def inverse(field: FieldSpec, a: Matrix) -> Matrix:
    n = len(a)
    if any(len(r) != n for r in a):
        raise DimensionMismatch("only square matrices can be inverted")
    aug = [list(row) + ident_row for row, ident_row in zip(a, identity_matrix(field, n))]
    rows, pivots = rref(field, aug)
    if pivots != list(range(n)):
        raise SingularMap("matrix is not invertible")
    return [row[n:] for row in rows]


def row_space(field: FieldSpec, vectors: list[Vector]) -> list[Vector]:
    """Canonical (RREF) basis of the span of the given vectors."""
    vecs = [v for v in vectors if any(v)]
    if not vecs:
        return []
    rows, _ = rref(field, vecs)
    return rows


def in_span(field: FieldSpec, basis: list[Vector], v: Vector) -> bool:
    if vec_is_zero(v):
        return True
    if not basis:
        return False
    return rank(field, basis + [v]) == rank(field, basis)


def same_span(field: FieldSpec, u: list[Vector], v: list[Vector]) -> bool:
    return row_space(field, u) == row_space(field, v)


@dataclass
class LinearMap:
    """Linear map given by its matrix: column ``j`` is the image of the
    j-th domain basis vector.  ``entries`` has shape codomain x domain."""

    field: FieldSpec
    codomain_dim: int
    domain_dim: int
    entries: Matrix = dc_field(default_factory=list)

    def __post_init__(self):
        if len(self.entries) != self.codomain_dim or any(
            len(r) != self.domain_dim for r in self.entries
        ):
            raise DimensionMismatch("entry matrix shape does not match the declared dims")

    @classmethod
    def from_matrix(cls, field: FieldSpec, entries: Matrix) -> "LinearMap":
        rows = len(entries)
        cols = len(entries[0]) if entries else 0
        return cls(field, rows, cols, [list(r) for r in entries])

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "LinearMap":
        return cls(field, n, n, identity_matrix(field, n))

    @classmethod
    def zero(cls, field: FieldSpec, codomain_dim: int, domain_dim: int) -> "LinearMap":
        return cls(field, codomain_dim, domain_dim, zero_matrix(field, codomain_dim, domain_dim))

    def apply(self, v: Vector) -> Vector:
        if len(v) != self.domain_dim:
            raise DimensionMismatch("vector length does not match the domain")
        return mat_vec(self.field, self.entries, v)

    def compose(self, inner: "LinearMap") -> "LinearMap":
        if inner.codomain_dim != self.domain_dim:
            raise DimensionMismatch("maps do not compose")
        return LinearMap(
            self.field, self.codomain_dim, inner.domain_dim,
            mat_mul(self.field, self.entries, inner.entries),
        )

    def dual(self) -> "LinearMap":
        """The dual map between the dual spaces (matrix transpose)."""
        return LinearMap(self.field, self.domain_dim, self.codomain_dim, transpose(self.entries))

    def inverse(self) -> "LinearMap":
        if self.codomain_dim != self.domain_dim:
            raise SingularMap("only square maps can be inverted")
        return LinearMap(
            self.field, self.domain_dim, self.codomain_dim,
            inverse(self.field, self.entries),
        )

    def is_bijective(self) -> bool:
        return (
            self.codomain_dim == self.domain_dim
            and rank(self.field, self.entries) == self.domain_dim
        )

    def is_zero(self) -> bool:
        return mat_is_zero(self.entries)
