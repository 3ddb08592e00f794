"""Pre-alternative algebras: two products whose sum is alternative.

A pre-alternative structure carries products ``<`` ("prec") and ``>``
("succ"); writing ``x o y = x < y + x > y`` for the sum, the three mixed
associators are

* ``(x,y,z)_r = (x < y) < z - x < (y o z)``
* ``(x,y,z)_m = (x > y) < z - x > (y < z)``
* ``(x,y,z)_l = (x o y) > z - x > (y > z)``

and the defining axioms say the m-associator is killed by symmetrizing
against r in the first two arguments and against l in the last two,
while the l- (resp. r-) associator vanishes on squares in the first
(resp. last) two arguments.  Dendriform structures, where all three
associators vanish identically, are the motivating special case.
"""

from __future__ import annotations

from dataclasses import dataclass

from .alternative import (
    AlternativeAlgebra,
    AltBimoduleAction,
    check_alternative,
)
from .errors import BadBimodule, DimensionMismatch, NotPreAlternative
from .fields import FieldSpec, convert_scalar
from .linalg import (
    LinearMap,
    Matrix,
    Vector,
    mat_add,
    mat_mul,
    mat_sub,
    transpose,
    vec_add,
    vec_sub,
    zero_matrix,
    zero_vector,
)
from .reports import DEFAULT_MAX_WITNESSES, CheckReport, IdentitySuite, grid
from .tensors import BilinearForm, dual_action


@dataclass
class PreAlternativeAlgebra:
    """Two structure tensors on one space; gate is :func:`check_prealternative`."""

    field: FieldSpec
    dim: int
    labels: list[str]
    prec: list  # prec[i][j] = coefficient vector of e_i < e_j
    succ: list  # succ[i][j] = coefficient vector of e_i > e_j

    def __post_init__(self):
        if len(self.labels) != self.dim:
            raise DimensionMismatch("label count differs from dimension")
        for tensor in (self.prec, self.succ):
            if len(tensor) != self.dim or any(
                len(row) != self.dim or any(len(v) != self.dim for v in row)
                for row in tensor
            ):
                raise DimensionMismatch("structure tensor is not dim x dim x dim")

    @classmethod
    def zero(cls, field: FieldSpec, dim: int, labels: list[str] | None = None) -> "PreAlternativeAlgebra":
        labels = labels or [f"e{i + 1}" for i in range(dim)]
        z = lambda: [[zero_vector(field, dim) for _ in range(dim)] for _ in range(dim)]
        return cls(field, dim, labels, z(), z())

    @classmethod
    def from_triples(cls, field: FieldSpec, dim: int, prec_triples, succ_triples,
                     labels: list[str] | None = None) -> "PreAlternativeAlgebra":
        alg = cls.zero(field, dim, labels)
        for i, j, k, c in prec_triples:
            alg.prec[i][j][k] = alg.prec[i][j][k] + c
        for i, j, k, c in succ_triples:
            alg.succ[i][j][k] = alg.succ[i][j][k] + c
        return alg

    def _bilinear(self, tensor, x: Vector, y: Vector) -> Vector:
        out = zero_vector(self.field, self.dim)
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                row = tensor[i][j]
                coeff = xi * yj
                for k in range(self.dim):
                    if row[k]:
                        out[k] = out[k] + coeff * row[k]
        return out

    def prec_product(self, x: Vector, y: Vector) -> Vector:
        return self._bilinear(self.prec, x, y)

    def succ_product(self, x: Vector, y: Vector) -> Vector:
        return self._bilinear(self.succ, x, y)

    def circ_product(self, x: Vector, y: Vector) -> Vector:
        return vec_add(self.prec_product(x, y), self.succ_product(x, y))

    def basis_vector(self, i: int) -> Vector:
        v = zero_vector(self.field, self.dim)
        v[i] = self.field.one
        return v

    def circ(self, i: int, j: int) -> Vector:
        return vec_add(self.prec[i][j], self.succ[i][j])

    # multiplication-operator matrices, one per basis vector
    def l_prec_matrices(self) -> list[Matrix]:
        return [[[self.prec[i][j][a] for j in range(self.dim)] for a in range(self.dim)]
                for i in range(self.dim)]

    def r_prec_matrices(self) -> list[Matrix]:
        return [[[self.prec[j][i][a] for j in range(self.dim)] for a in range(self.dim)]
                for i in range(self.dim)]

    def l_succ_matrices(self) -> list[Matrix]:
        return [[[self.succ[i][j][a] for j in range(self.dim)] for a in range(self.dim)]
                for i in range(self.dim)]

    def r_succ_matrices(self) -> list[Matrix]:
        return [[[self.succ[j][i][a] for j in range(self.dim)] for a in range(self.dim)]
                for i in range(self.dim)]

    def l_circ_matrices(self) -> list[Matrix]:
        return [mat_add(a, b) for a, b in zip(self.l_prec_matrices(), self.l_succ_matrices())]

    def r_circ_matrices(self) -> list[Matrix]:
        return [mat_add(a, b) for a, b in zip(self.r_prec_matrices(), self.r_succ_matrices())]

    def same_structure(self, other: "PreAlternativeAlgebra") -> bool:
        return (
            self.field == other.field
            and self.dim == other.dim
            and self.prec == other.prec
            and self.succ == other.succ
        )

    def map_scalars(self, dst: FieldSpec) -> "PreAlternativeAlgebra":
        conv = lambda tensor: [
            [[convert_scalar(c, self.field, dst) for c in v] for v in row]
            for row in tensor
        ]
        return PreAlternativeAlgebra(dst, self.dim, list(self.labels),
                                     conv(self.prec), conv(self.succ))

    def associated_action(self) -> AltBimoduleAction:
        """The bimodule ``(l_succ, r_prec)`` of the associated algebra."""
        return AltBimoduleAction(self.field, self.dim, self.dim,
                                 self.l_succ_matrices(), self.r_prec_matrices())


def associated_algebra(alg: PreAlternativeAlgebra) -> AlternativeAlgebra:
    """Sum product ``x o y = x < y + x > y`` on the same space."""
    mult = [
        [vec_add(alg.prec[i][j], alg.succ[i][j]) for j in range(alg.dim)]
        for i in range(alg.dim)
    ]
    return AlternativeAlgebra(alg.field, alg.dim, list(alg.labels), mult)


def _associator_cubes(alg: PreAlternativeAlgebra):
    """r-, m- and l-associators on all basis triples."""
    n, field = alg.dim, alg.field
    circ = [[alg.circ(i, j) for j in range(n)] for i in range(n)]

    def bilin_sparse(tensor, vec, right_basis):
        out = zero_vector(field, n)
        for u, cu in enumerate(vec):
            if cu:
                row = tensor[u][right_basis]
                for w in range(n):
                    if row[w]:
                        out[w] = out[w] + cu * row[w]
        return out

    def bilin_sparse_left(tensor, left_basis, vec):
        out = zero_vector(field, n)
        for u, cu in enumerate(vec):
            if cu:
                row = tensor[left_basis][u]
                for w in range(n):
                    if row[w]:
                        out[w] = out[w] + cu * row[w]
        return out

    r_cube = [[[None] * n for _ in range(n)] for _ in range(n)]
    m_cube = [[[None] * n for _ in range(n)] for _ in range(n)]
    l_cube = [[[None] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                r_cube[i][j][k] = vec_sub(
                    bilin_sparse(alg.prec, alg.prec[i][j], k),
                    bilin_sparse_left(alg.prec, i, circ[j][k]),
                )
                m_cube[i][j][k] = vec_sub(
                    bilin_sparse(alg.prec, alg.succ[i][j], k),
                    bilin_sparse_left(alg.succ, i, alg.prec[j][k]),
                )
                l_cube[i][j][k] = vec_sub(
                    bilin_sparse(alg.succ, circ[i][j], k),
                    bilin_sparse_left(alg.succ, i, alg.succ[j][k]),
                )
    return r_cube, m_cube, l_cube


def check_prealternative(
    alg: PreAlternativeAlgebra,
    max_witnesses: int = DEFAULT_MAX_WITNESSES,
    workers: int = 1,
) -> CheckReport:
    """Pre-alternativity gate.

    Linearized suite (all basis triples ``(i, j, k)``): ``pa.mr`` is
    ``(x,y,z)_m + (y,x,z)_r``, ``pa.ml`` is ``(x,y,z)_m + (x,z,y)_l``,
    ``pa.l.sym`` is ``(x,y,z)_l + (y,x,z)_l``, ``pa.r.sym`` is
    ``(x,y,z)_r + (x,z,y)_r``.  The quadratic suite ``pa.l.quad`` /
    ``pa.r.quad`` covers the square-argument axioms in universally valid
    polarized form, witnesses ``(i, k, j)`` with ``i <= k`` as in
    :func:`prealt.alternative.check_alternative`.
    """
    n = alg.dim
    r_cube, m_cube, l_cube = _associator_cubes(alg)
    suite = IdentitySuite(max_witnesses, workers)
    triples = grid(n, n, n)
    suite.add("pa.mr", triples,
              lambda w: vec_add(m_cube[w[0]][w[1]][w[2]], r_cube[w[1]][w[0]][w[2]]))
    suite.add("pa.ml", triples,
              lambda w: vec_add(m_cube[w[0]][w[1]][w[2]], l_cube[w[0]][w[2]][w[1]]))
    suite.add("pa.l.sym", triples,
              lambda w: vec_add(l_cube[w[0]][w[1]][w[2]], l_cube[w[1]][w[0]][w[2]]))
    suite.add("pa.r.sym", triples,
              lambda w: vec_add(r_cube[w[0]][w[1]][w[2]], r_cube[w[0]][w[2]][w[1]]))

    pairs_leq = [(i, k, j) for i in range(n) for k in range(i, n) for j in range(n)]

    def l_quad(w):
        i, k, j = w  # (x, x, y)_l with x-part (e_i, e_k), y = e_j
        if i == k:
            return l_cube[i][i][j]
        return vec_add(l_cube[i][k][j], l_cube[k][i][j])

    def r_quad(w):
        i, k, j = w  # (y, x, x)_r with x-part (e_i, e_k), y = e_j
        if i == k:
            return r_cube[j][i][i]
        return vec_add(r_cube[j][i][k], r_cube[j][k][i])

    suite.add("pa.l.quad", pairs_leq, l_quad)
    suite.add("pa.r.quad", pairs_leq, r_quad)
    return suite.run()


@dataclass
class PreAltBimoduleAction:
    """Four families ``L<``, ``R<``, ``L>``, ``R>`` on a module space."""

    field: FieldSpec
    algebra_dim: int
    module_dim: int
    Lp: list
    Rp: list
    Ls: list
    Rs: list

    def __post_init__(self):
        for fam in (self.Lp, self.Rp, self.Ls, self.Rs):
            if len(fam) != self.algebra_dim:
                raise DimensionMismatch("family length differs from the algebra dimension")
            for m in fam:
                if len(m) != self.module_dim or any(len(r) != self.module_dim for r in m):
                    raise DimensionMismatch("action matrix is not module_dim x module_dim")

    @classmethod
    def zero(cls, field: FieldSpec, algebra_dim: int, module_dim: int) -> "PreAltBimoduleAction":
        z = lambda: [zero_matrix(field, module_dim, module_dim) for _ in range(algebra_dim)]
        return cls(field, algebra_dim, module_dim, z(), z(), z(), z())

    @classmethod
    def regular(cls, alg: PreAlternativeAlgebra) -> "PreAltBimoduleAction":
        return cls(alg.field, alg.dim, alg.dim,
                   alg.l_prec_matrices(), alg.r_prec_matrices(),
                   alg.l_succ_matrices(), alg.r_succ_matrices())

    def Lo(self) -> list:
        return [mat_add(a, b) for a, b in zip(self.Lp, self.Ls)]

    def Ro(self) -> list:
        return [mat_add(a, b) for a, b in zip(self.Rp, self.Rs)]

    def sum_action(self) -> AltBimoduleAction:
        """The induced ``(L_o, R_o)`` action for the associated algebra."""
        return AltBimoduleAction(self.field, self.algebra_dim, self.module_dim,
                                 self.Lo(), self.Ro())

    def inner_action(self) -> AltBimoduleAction:
        """The induced ``(L>, R<)`` action for the associated algebra."""
        return AltBimoduleAction(self.field, self.algebra_dim, self.module_dim,
                                 [
                                     [list(r) for r in m] for m in self.Ls
                                 ],
                                 [
                                     [list(r) for r in m] for m in self.Rp
                                 ])


def prealt_dual_bimodule(act: PreAltBimoduleAction) -> PreAltBimoduleAction:
    """Dual-module action ``(-Rs*, (Lp+Ls)*, (Rp+Rs)*, -Lp*)``."""
    neg = lambda mats: [[[-x for x in row] for row in m] for m in mats]
    return PreAltBimoduleAction(
        act.field, act.algebra_dim, act.module_dim,
        neg(dual_action(act.Rs)),
        dual_action(act.Lo()),
        dual_action(act.Ro()),
        neg(dual_action(act.Lp)),
    )


def standard_actions(alg: PreAlternativeAlgebra) -> dict[str, PreAltBimoduleAction]:
    """The six canonical self-actions of a pre-alternative algebra.

    Keys name the four families in order ``(L<, R<, L>, R>)``; ``*``
    marks a transposed (dual-space) family and ``o`` the sum product.
    """
    f, n = alg.field, alg.dim
    lp, rp = alg.l_prec_matrices(), alg.r_prec_matrices()
    ls, rs = alg.l_succ_matrices(), alg.r_succ_matrices()
    lo = [mat_add(a, b) for a, b in zip(lp, ls)]
    ro = [mat_add(a, b) for a, b in zip(rp, rs)]
    zero = [zero_matrix(f, n, n) for _ in range(n)]
    neg = lambda mats: [[[-x for x in row] for row in m] for m in mats]
    mk = lambda a, b, c, d: PreAltBimoduleAction(f, n, n, a, b, c, d)
    return {
        "(l<, r<, l>, r>)": mk(lp, rp, ls, rs),
        "(0, r<, l>, 0)": mk(zero, rp, ls, zero),
        "(0, ro, lo, 0)": mk(zero, ro, lo, zero),
        "(0, lo*, ro*, 0)": mk(zero, dual_action(lo), dual_action(ro), zero),
        "(0, l>*, r<*, 0)": mk(zero, dual_action(ls), dual_action(rp), zero),
        "(-r>*, lo*, ro*, -l<*)": mk(neg(dual_action(rs)), dual_action(lo),
                                     dual_action(ro), neg(dual_action(lp))),
    }


def check_prealt_bimodule(
    alg: PreAlternativeAlgebra,
    act: PreAltBimoduleAction,
    max_witnesses: int = DEFAULT_MAX_WITNESSES,
    workers: int = 1,
) -> CheckReport:
    """The ten bimodule identities, ids ``pb.1`` ... ``pb.10``, evaluated
    on all basis pairs ``(x, y) = (e_i, e_j)``; residuals are flattened
    matrices."""
    if not check_prealternative(alg).passed:
        raise NotPreAlternative("underlying structure fails the pre-alternative gate")
    if act.algebra_dim != alg.dim:
        raise DimensionMismatch("action is indexed by a different algebra dimension")
    field = alg.field
    n = alg.dim
    Lp, Rp, Ls, Rs = act.Lp, act.Rp, act.Ls, act.Rs
    Lo = act.Lo()
    Ro = act.Ro()

    def lin(fam, vec):
        out = zero_matrix(field, act.module_dim, act.module_dim)
        for i, c in enumerate(vec):
            if c:
                out = mat_add(out, [[c * v for v in row] for row in fam[i]])
        return out

    def flat(m):
        return [x for row in m for x in row]

    mm = lambda a, b: mat_mul(field, a, b)

    def pb(index, w):
        i, j = w
        x_circ_y = alg.circ(i, j)
        y_circ_x = alg.circ(j, i)
        if index == 1:
            return mat_sub(lin(Ls, vec_add(x_circ_y, y_circ_x)),
                           mat_add(mm(Ls[i], Ls[j]), mm(Ls[j], Ls[i])))
        if index == 2:
            lhs = mm(Rs[j], mat_add(Lo[i], Ro[i]))
            rhs = mat_add(mm(Ls[i], Rs[j]), lin(Rs, alg.succ[i][j]))
            return mat_sub(lhs, rhs)
        if index == 3:
            lhs = mat_add(mm(Rp[j], Ls[i]), mm(Rp[j], Rp[i]))
            rhs = mat_add(mm(Ls[i], Rp[j]), lin(Rp, x_circ_y))
            return mat_sub(lhs, rhs)
        if index == 4:
            lhs = mat_add(mm(Rp[j], Rs[i]), mm(Rp[j], Lp[i]))
            rhs = mat_add(lin(Rs, alg.prec[i][j]), mm(Lp[i], Ro[j]))
            return mat_sub(lhs, rhs)
        if index == 5:
            lhs = mat_add(lin(Lp, alg.succ[i][j]), lin(Lp, alg.prec[j][i]))
            rhs = mat_add(mm(Ls[i], Lp[j]), mm(Lp[j], Lo[i]))
            return mat_sub(lhs, rhs)
        if index == 6:
            lhs = mat_add(lin(Ls, y_circ_x), mm(Rp[i], Ls[j]))
            rhs = mat_add(mm(Ls[j], Ls[i]), mm(Ls[j], Rp[i]))
            return mat_sub(lhs, rhs)
        if index == 7:
            lhs = mat_add(mm(Rs[j], Ro[i]), mm(Rp[i], Rs[j]))
            rhs = mat_add(lin(Rs, alg.succ[i][j]), lin(Rs, alg.prec[j][i]))
            return mat_sub(lhs, rhs)
        if index == 8:
            lhs = mat_add(mm(Rs[i], Lo[j]), lin(Lp, alg.succ[j][i]))
            rhs = mat_add(mm(Ls[j], Rs[i]), mm(Ls[j], Lp[i]))
            return mat_sub(lhs, rhs)
        if index == 9:
            lhs = mat_add(mm(Rp[j], Rp[i]), mm(Rp[i], Rp[j]))
            return mat_sub(lhs, lin(Rp, vec_add(x_circ_y, y_circ_x)))
        if index == 10:
            lhs = mat_add(mm(Rp[j], Lp[i]), lin(Lp, alg.prec[i][j]))
            rhs = mm(Lp[i], mat_add(Ro[j], Lo[j]))
            return mat_sub(lhs, rhs)
        raise AssertionError(index)

    suite = IdentitySuite(max_witnesses, workers)
    for index in range(1, 11):
        suite.add(f"pb.{index}", grid(n, n),
                  lambda w, index=index: flat(pb(index, w)))
    return suite.run()


def prealt_semidirect(
    alg: PreAlternativeAlgebra,
    act: PreAltBimoduleAction,
    module_labels: list[str] | None = None,
    check: bool = True,
) -> PreAlternativeAlgebra:
    """Semidirect sum on ``A (+) V``:
    ``(x + a) < (y + b) = x < y + L<(x) b + R<(y) a`` and the same shape
    for ``>``.  ``check=False`` skips the bimodule gate (used to test the
    gate/semidirect equivalence itself)."""
    if check and not check_prealt_bimodule(alg, act).passed:
        raise BadBimodule("action fails the pre-alternative bimodule identities")
    n, m = alg.dim, act.module_dim
    field = alg.field
    labels = list(alg.labels) + (module_labels or [f"v{i + 1}" for i in range(m)])
    out = PreAlternativeAlgebra.zero(field, n + m, labels)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                out.prec[i][j][k] = alg.prec[i][j][k]
                out.succ[i][j][k] = alg.succ[i][j][k]
    for i in range(n):
        for b in range(m):
            for a in range(m):
                out.prec[i][n + b][n + a] = act.Lp[i][a][b]
                out.prec[n + b][i][n + a] = act.Rp[i][a][b]
                out.succ[i][n + b][n + a] = act.Ls[i][a][b]
                out.succ[n + b][i][n + a] = act.Rs[i][a][b]
    return out


def check_2cocycle(
    alg: PreAlternativeAlgebra,
    form: BilinearForm,
    max_witnesses: int = DEFAULT_MAX_WITNESSES,
    workers: int = 1,
) -> CheckReport:
    """2-cocycle condition ``B(x o y, z) = B(x, y > z) + B(y, z < x)``
    over all basis triples (id ``cc.main``).  The antisymmetrization
    ``w(x, y) = B(x, y) - B(y, x)`` is additionally checked to be closed
    on the associated algebra (id ``cc.skew.closed``)."""
    if form.dim != alg.dim:
        raise DimensionMismatch("form and algebra dimensions differ")
    n, field = alg.dim, alg.field
    basis = [alg.basis_vector(i) for i in range(n)]

    def main(w):
        i, j, k = w
        return [
            form.evaluate(alg.circ(i, j), basis[k])
            - form.evaluate(basis[i], alg.succ[j][k])
            - form.evaluate(basis[j], alg.prec[k][i])
        ]

    omega = BilinearForm(field, n, mat_sub(form.b, transpose(form.b)))
    assoc = associated_algebra(alg)

    def closed(w):
        i, j, k = w
        return [
            omega.evaluate(assoc.mult[i][j], basis[k])
            + omega.evaluate(assoc.mult[j][k], basis[i])
            + omega.evaluate(assoc.mult[k][i], basis[j])
        ]

    suite = IdentitySuite(max_witnesses, workers)
    suite.add("cc.main", grid(n, n, n), main)
    suite.add("cc.skew.closed", grid(n, n, n), closed)
    return suite.run()


def prealt_hom_check(
    f: LinearMap,
    src: PreAlternativeAlgebra,
    dst: PreAlternativeAlgebra,
    max_witnesses: int = DEFAULT_MAX_WITNESSES,
    workers: int = 1,
) -> CheckReport:
    """Does ``f`` preserve both products on all basis pairs?"""
    if f.domain_dim != src.dim or f.codomain_dim != dst.dim:
        raise DimensionMismatch("map shape does not match the two structures")
    images = [f.apply(src.basis_vector(i)) for i in range(src.dim)]
    suite = IdentitySuite(max_witnesses, workers)
    suite.add(
        "hom.prec", grid(src.dim, src.dim),
        lambda w: vec_sub(f.apply(src.prec[w[0]][w[1]]),
                          dst.prec_product(images[w[0]], images[w[1]])),
    )
    suite.add(
        "hom.succ", grid(src.dim, src.dim),
        lambda w: vec_sub(f.apply(src.succ[w[0]][w[1]]),
                          dst.succ_product(images[w[0]], images[w[1]])),
    )
    suite.note("bijective", f.is_bijective())
    return suite.run()
