"""Rank-2 and rank-3 coefficient tensors and the slot conventions.

An element ``r`` of ``V (x) V`` is stored as the dense coefficient array
``a[i][j]`` meaning ``sum a_ij e_i (x) e_j``.  A rank-3 tensor is stored
sparsely as a coordinate dict ``{(i, j, k): coefficient}``; residuals of
the equation systems handled here are mostly sparse.

Slot convention for products of two 2-tensors inside ``V (x) V (x) V``
-----------------------------------------------------------------------
Write ``r_{pq}`` for the embedding of ``r = sum a_i (x) b_i`` that puts
the first leg ``a_i`` in slot ``p`` and the second leg ``b_i`` in slot
``q`` (``p < q``), padding the remaining slot with the scalar unit.  For
two embeddings whose slot sets share exactly one slot and jointly cover
``{1, 2, 3}``, the product ``r_{pq} <> s_{uv}`` with respect to a binary
operation ``<>`` is defined positionally:

* the shared slot receives ``x <> y`` where ``x`` is the first operand's
  leg in that slot and ``y`` is the second operand's leg;
* every other leg stays in its declared slot.

On the three classical cases this reads

* ``r12 <> s13 = sum  (a_i <> a_j) (x) b_i (x) b_j``
* ``r13 <> s23 = sum  a_i (x) a_j (x) (b_i <> b_j)``
* ``r23 <> s12 = sum  a_j (x) (a_i <> b_j) (x) b_i``

and the same positional rule fixes the remaining three mixed cases
(``r13 <> s12``, ``r12 <> s23``, ``r23 <> s13``).  All six are exercised
by the Yang-Baxter-type residuals in :mod:`prealt.yangbaxter`, and the
whole convention is pinned by a naive hand-expanded oracle in the test
suite.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import Degenerate, DimensionMismatch, SlotError
from .fields import FieldSpec
from .linalg import (
    LinearMap,
    Matrix,
    Vector,
    inverse,
    mat_vec,
    nullspace,
    rank,
    row_space,
    in_span,
    same_span,
    transpose,
    zero_matrix,
)


@dataclass
class Tensor2:
    """Element of ``V (x) V`` as a dense dim x dim coefficient array."""

    field: FieldSpec
    dim: int
    a: Matrix

    def __post_init__(self):
        if len(self.a) != self.dim or any(len(r) != self.dim for r in self.a):
            raise DimensionMismatch("coefficient array is not dim x dim")

    @classmethod
    def zeros(cls, field: FieldSpec, dim: int) -> "Tensor2":
        return cls(field, dim, zero_matrix(field, dim, dim))

    @classmethod
    def from_triples(cls, field: FieldSpec, dim: int, triples) -> "Tensor2":
        t = cls.zeros(field, dim)
        for i, j, c in triples:
            t.a[i][j] = t.a[i][j] + c
        return t

    def flip(self) -> "Tensor2":
        """Image under the flip ``x (x) y -> y (x) x``."""
        return Tensor2(self.field, self.dim, transpose(self.a))

    def __add__(self, other: "Tensor2") -> "Tensor2":
        return Tensor2(self.field, self.dim,
                       [[x + y for x, y in zip(r, s)] for r, s in zip(self.a, other.a)])

    def __sub__(self, other: "Tensor2") -> "Tensor2":
        return Tensor2(self.field, self.dim,
                       [[x - y for x, y in zip(r, s)] for r, s in zip(self.a, other.a)])

    def __neg__(self) -> "Tensor2":
        return Tensor2(self.field, self.dim, [[-x for x in r] for r in self.a])

    def scale(self, c) -> "Tensor2":
        return Tensor2(self.field, self.dim, [[c * x for x in r] for r in self.a])

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.a)

    def is_symmetric(self) -> bool:
        return all(self.a[i][j] == self.a[j][i] for i in range(self.dim) for j in range(i))

    def is_skew(self) -> bool:
        return all(
            self.a[i][j] == -self.a[j][i] for i in range(self.dim) for j in range(i + 1)
        )

    def symmetric_part(self) -> "Tensor2":
        half = self.field.ratio(1, 2)
        return (self + self.flip()).scale(half)

    def skew_part(self) -> "Tensor2":
        half = self.field.ratio(1, 2)
        return (self - self.flip()).scale(half)

    def apply_left(self, m: Matrix) -> "Tensor2":
        """Act on the first slot: ``(M (x) 1) r``."""
        out = Tensor2.zeros(self.field, self.dim)
        for i in range(self.dim):
            for j in range(self.dim):
                c = self.a[i][j]
                if not c:
                    continue
                for k in range(self.dim):
                    if m[k][i]:
                        out.a[k][j] = out.a[k][j] + m[k][i] * c
        return out

    def apply_right(self, m: Matrix) -> "Tensor2":
        """Act on the second slot: ``(1 (x) M) r``."""
        out = Tensor2.zeros(self.field, self.dim)
        for i in range(self.dim):
            for j in range(self.dim):
                c = self.a[i][j]
                if not c:
                    continue
                for k in range(self.dim):
                    if m[k][j]:
                        out.a[i][k] = out.a[i][k] + m[k][j] * c
        return out

    def to_map(self) -> LinearMap:
        """The linear map ``V* -> V`` canonically paired with the tensor.

        The pairing convention is ``<u* (x) v*, r> = <u*, T(v*)>``; on a
        basis this makes the matrix of ``T`` equal to the coefficient
        array itself, ``T(e_l*) = sum_k a_kl e_k``.
        """
        return LinearMap(self.field, self.dim, self.dim, [list(r) for r in self.a])

    def is_nondegenerate(self) -> bool:
        return rank(self.field, self.a) == self.dim

    def nonzero_items(self):
        for i in range(self.dim):
            for j in range(self.dim):
                if self.a[i][j]:
                    yield (i, j, self.a[i][j])


def map_to_tensor2(t: LinearMap) -> Tensor2:
    """Inverse reading of :meth:`Tensor2.to_map` for square maps."""
    if t.codomain_dim != t.domain_dim:
        raise DimensionMismatch("only square maps correspond to 2-tensors")
    return Tensor2(t.field, t.domain_dim, [list(r) for r in t.entries])


@dataclass
class BilinearForm:
    """Bilinear form as the matrix ``b[i][j] = B(e_i, e_j)``."""

    field: FieldSpec
    dim: int
    b: Matrix

    def __post_init__(self):
        if len(self.b) != self.dim or any(len(r) != self.dim for r in self.b):
            raise DimensionMismatch("form matrix is not dim x dim")

    @classmethod
    def zeros(cls, field: FieldSpec, dim: int) -> "BilinearForm":
        return cls(field, dim, zero_matrix(field, dim, dim))

    def evaluate(self, u: Vector, v: Vector):
        acc = self.field.zero
        for i, x in enumerate(u):
            if not x:
                continue
            for j, y in enumerate(v):
                if y and self.b[i][j]:
                    acc = acc + x * self.b[i][j] * y
        return acc

    def is_symmetric(self) -> bool:
        return all(self.b[i][j] == self.b[j][i] for i in range(self.dim) for j in range(i))

    def is_skew(self) -> bool:
        return all(
            self.b[i][j] == -self.b[j][i] for i in range(self.dim) for j in range(i + 1)
        )

    def is_nondegenerate(self) -> bool:
        return rank(self.field, self.b) == self.dim


def map_to_form(t: LinearMap) -> BilinearForm:
    """Nondegenerate form induced by an invertible map ``T: V* -> V``.

    Defined by ``B(u, v) = <T^{-1} v, u>``; on a basis the form matrix is
    the inverse of the matrix of ``T``.  With this reading the canonical
    skew 2n-tensor ``sum (e_i (x) e_i* - e_i* (x) e_i)`` induces exactly
    the form ``(x + a*, y + b*) -> <a*, y> - <x, b*>`` and its symmetric
    sibling induces ``<a*, y> + <x, b*>``.
    """
    if t.codomain_dim != t.domain_dim:
        raise DimensionMismatch("only square maps induce bilinear forms")
    return BilinearForm(t.field, t.domain_dim, inverse(t.field, t.entries))


def form_to_tensor2(form: BilinearForm) -> Tensor2:
    """The inverse tensor of a nondegenerate form (inverse of the matrix)."""
    if not form.is_nondegenerate():
        raise Degenerate("form is degenerate, no inverse tensor")
    return Tensor2(form.field, form.dim, inverse(form.field, form.b))


def dual_action(family: list[Matrix]) -> list[Matrix]:
    """Dual family on ``V*``: transpose every matrix.

    For an action ``rho`` the dual is fixed by
    ``<rho*(x) v*, u> = <v*, rho(x) u>``.
    """
    if family:
        m = len(family[0])
        if any(len(mat) != m or any(len(row) != m for row in mat) for mat in family):
            raise DimensionMismatch("family matrices must share one square size")
    return [transpose(m) for m in family]


@dataclass
class Tensor3:
    """Sparse element of ``V (x) V (x) V`` as a coordinate dict."""

    field: FieldSpec
    dim: int
    data: dict = dc_field(default_factory=dict)

    @classmethod
    def zeros(cls, field: FieldSpec, dim: int) -> "Tensor3":
        return cls(field, dim, {})

    def add_term(self, i: int, j: int, k: int, c) -> None:
        if not c:
            return
        key = (i, j, k)
        new = self.data.get(key, self.field.zero) + c
        if new:
            self.data[key] = new
        else:
            self.data.pop(key, None)

    def accumulate(self, other: "Tensor3", sign: int = 1) -> "Tensor3":
        for (i, j, k), c in other.data.items():
            self.add_term(i, j, k, c if sign > 0 else -c)
        return self

    def __add__(self, other: "Tensor3") -> "Tensor3":
        out = Tensor3(self.field, self.dim, dict(self.data))
        return out.accumulate(other)

    def __sub__(self, other: "Tensor3") -> "Tensor3":
        out = Tensor3(self.field, self.dim, dict(self.data))
        return out.accumulate(other, sign=-1)

    def __neg__(self) -> "Tensor3":
        return Tensor3(self.field, self.dim, {k: -c for k, c in self.data.items()})

    def is_zero(self) -> bool:
        return not any(self.data.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tensor3):
            return NotImplemented
        return (self - other).is_zero()

    def sorted_items(self):
        return sorted(self.data.items())

    def apply_slot(self, slot: int, m: Matrix) -> "Tensor3":
        """Act with a matrix on one tensor slot (1-based)."""
        if slot not in (1, 2, 3):
            raise SlotError(f"slot {slot} out of range")
        out = Tensor3.zeros(self.field, self.dim)
        pos = slot - 1
        for key, c in self.data.items():
            src = key[pos]
            for k in range(self.dim):
                if m[k][src]:
                    new = list(key)
                    new[pos] = k
                    out.add_term(new[0], new[1], new[2], m[k][src] * c)
        return out

    def swap_slots(self, s1: int, s2: int) -> "Tensor3":
        out = Tensor3.zeros(self.field, self.dim)
        p, q = s1 - 1, s2 - 1
        for key, c in self.data.items():
            new = list(key)
            new[p], new[q] = new[q], new[p]
            out.add_term(new[0], new[1], new[2], c)
        return out


def pair_product(
    r: Tensor2,
    slots_r: tuple[int, int],
    s: Tensor2,
    slots_s: tuple[int, int],
    product,
) -> Tensor3:
    """Positional product of two embedded 2-tensors (module docstring).

    ``product`` is the rank-3 table ``c[i][j][k]`` of the binary operation,
    meaning ``e_i <> e_j = sum_k c[i][j][k] e_k``.  The two slot pairs must
    share exactly one slot and jointly cover ``{1, 2, 3}``.
    """
    for slots in (slots_r, slots_s):
        if len(slots) != 2 or not all(x in (1, 2, 3) for x in slots) or slots[0] >= slots[1]:
            raise SlotError(f"bad slot pair {slots}")
    shared = set(slots_r) & set(slots_s)
    if len(shared) != 1 or set(slots_r) | set(slots_s) != {1, 2, 3}:
        raise SlotError(f"slot pairs {slots_r} and {slots_s} do not mesh")
    if r.dim != s.dim or len(product) != r.dim:
        raise DimensionMismatch("tensor and product dimensions disagree")
    c = next(iter(shared))
    other_r = slots_r[0] if slots_r[1] == c else slots_r[1]
    other_s = slots_s[0] if slots_s[1] == c else slots_s[1]

    out = Tensor3.zeros(r.field, r.dim)
    for i1, j1, cr in r.nonzero_items():
        legs_r = {slots_r[0]: i1, slots_r[1]: j1}
        for i2, j2, cs in s.nonzero_items():
            legs_s = {slots_s[0]: i2, slots_s[1]: j2}
            x, y = legs_r[c], legs_s[c]
            row = product[x][y]
            coeff = cr * cs
            idx = [0, 0, 0]
            idx[other_r - 1] = legs_r[other_r]
            idx[other_s - 1] = legs_s[other_s]
            for k in range(r.dim):
                if row[k]:
                    idx[c - 1] = k
                    out.add_term(idx[0], idx[1], idx[2], coeff * row[k])
    return out


@dataclass
class OrthComplement:
    basis: list[Vector]
    isotropic: bool
    lagrangian: bool


def orth_complement(form: BilinearForm, subspace: list[Vector]) -> OrthComplement:
    """Exact orthogonal complement ``W-perp = {x : B(x, w) = 0 for w in W}``.

    ``isotropic`` means ``W`` is contained in ``W-perp``; ``lagrangian``
    means they coincide as subspaces.  Requires a symmetric or
    skew-symmetric form so that left and right complements agree.
    """
    if not (form.is_symmetric() or form.is_skew()):
        raise Degenerate("orthogonal complement needs a (skew-)symmetric form")
    field, n = form.field, form.dim
    rows = []
    for w in subspace:
        if len(w) != n:
            raise DimensionMismatch("subspace vector has the wrong length")
        rows.append(mat_vec(field, transpose(form.b), w))
    rows = [r for r in rows if any(r)]
    basis = nullspace(field, rows, ncols=n)
    w_span = row_space(field, subspace)
    isotropic = all(in_span(field, basis, w) for w in w_span)
    lagrangian = isotropic and same_span(field, basis, w_span)
    return OrthComplement(basis, isotropic, lagrangian)
