"""Alternative algebras: axioms, bimodules, semidirect sums and forms.

An algebra is stored by structure constants ``c[i][j][k]`` with
``e_i o e_j = sum_k c[i][j][k] e_k``.  Nothing is validated at
construction time, so non-examples are first-class values; the explicit
gate is :func:`check_alternative`.

The quadratic axioms ``(x, x, y) = (y, x, x) = 0`` are checked in their
exact universally-quantified form: the basis-diagonal substitutions plus
every polarized pair, which over a field of characteristic different
from 2 is equivalent to validity for all elements.  The linearized
axioms are evaluated separately on all basis triples so the two suites
can be compared verdict for verdict.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BadBimodule,
    DimensionMismatch,
    NotAlternative,
    NotSkew,
)
from .fields import FieldSpec, convert_scalar
from .linalg import (
    LinearMap,
    Matrix,
    Vector,
    mat_add,
    mat_mul,
    mat_sub,
    mat_vec,
    transpose,
    vec_add,
    vec_is_zero,
    vec_sub,
    zero_matrix,
    zero_vector,
    in_span,
    row_space,
)
from .reports import DEFAULT_MAX_WITNESSES, CheckReport, IdentitySuite, grid
from .tensors import BilinearForm, dual_action, orth_complement


@dataclass
class AlternativeAlgebra:
    """Finite-dimensional algebra by structure constants (see module doc)."""

    field: FieldSpec
    dim: int
    labels: list[str]
    mult: list  # mult[i][j] is the coefficient vector of e_i o e_j

    def __post_init__(self):
        if len(self.labels) != self.dim:
            raise DimensionMismatch("label count differs from dimension")
        if len(self.mult) != self.dim or any(
            len(row) != self.dim or any(len(v) != self.dim for v in row)
            for row in self.mult
        ):
            raise DimensionMismatch("structure tensor is not dim x dim x dim")

    @classmethod
    def zero(cls, field: FieldSpec, dim: int, labels: list[str] | None = None) -> "AlternativeAlgebra":
        labels = labels or [f"e{i + 1}" for i in range(dim)]
        mult = [[zero_vector(field, dim) for _ in range(dim)] for _ in range(dim)]
        return cls(field, dim, labels, mult)

    @classmethod
    def from_triples(cls, field: FieldSpec, dim: int, triples, labels: list[str] | None = None) -> "AlternativeAlgebra":
        alg = cls.zero(field, dim, labels)
        for i, j, k, c in triples:
            alg.mult[i][j][k] = alg.mult[i][j][k] + c
        return alg

    def product(self, x: Vector, y: Vector) -> Vector:
        out = zero_vector(self.field, self.dim)
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                row = self.mult[i][j]
                coeff = xi * yj
                for k in range(self.dim):
                    if row[k]:
                        out[k] = out[k] + coeff * row[k]
        return out

    def basis_vector(self, i: int) -> Vector:
        v = zero_vector(self.field, self.dim)
        v[i] = self.field.one
        return v

    def left_matrices(self) -> list[Matrix]:
        """Matrices of left multiplication by each basis vector."""
        return [
            [[self.mult[i][j][a] for j in range(self.dim)] for a in range(self.dim)]
            for i in range(self.dim)
        ]

    def right_matrices(self) -> list[Matrix]:
        return [
            [[self.mult[j][i][a] for j in range(self.dim)] for a in range(self.dim)]
            for i in range(self.dim)
        ]

    def same_structure(self, other: "AlternativeAlgebra") -> bool:
        """Structural equality: field, dimension and multiplication table."""
        return (
            self.field == other.field
            and self.dim == other.dim
            and self.mult == other.mult
        )

    def map_scalars(self, dst: FieldSpec) -> "AlternativeAlgebra":
        mult = [
            [[convert_scalar(c, self.field, dst) for c in v] for v in row]
            for row in self.mult
        ]
        return AlternativeAlgebra(dst, self.dim, list(self.labels), mult)


def associator_cube(alg: AlternativeAlgebra) -> list:
    """All basis associators ``(e_i, e_j, e_k)`` as coefficient vectors."""
    n = alg.dim
    field = alg.field
    nz = [
        [[(u, c) for u, c in enumerate(alg.mult[i][j]) if c] for j in range(n)]
        for i in range(n)
    ]
    cube = [[[None] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            left = nz[i][j]
            for k in range(n):
                out = zero_vector(field, n)
                for u, cu in left:
                    row = alg.mult[u][k]
                    for w in range(n):
                        if row[w]:
                            out[w] = out[w] + cu * row[w]
                for u, cu in nz[j][k]:
                    row = alg.mult[i][u]
                    for w in range(n):
                        if row[w]:
                            out[w] = out[w] - cu * row[w]
                cube[i][j][k] = out
    return cube


def check_alternative(
    alg: AlternativeAlgebra,
    max_witnesses: int = DEFAULT_MAX_WITNESSES,
    workers: int = 1,
) -> CheckReport:
    """Alternativity gate; identity ids ``alt.left``, ``alt.right``,
    ``alt.left.lin``, ``alt.right.lin``.

    Quadratic-family witnesses are ``(i, k, j)`` with ``i <= k`` standing
    for the substitution ``x-part = (e_i, e_k)``, ``y = e_j`` (``i == k``
    is the plain diagonal case).  Linearized-family witnesses are
    ``(i, j, k)`` with ``x1 = e_i``, ``x2 = e_j``, ``y = e_k``.
    """
    n = alg.dim
    ass = associator_cube(alg)
    suite = IdentitySuite(max_witnesses, workers)
    pairs_leq = [(i, k, j) for i in range(n) for k in range(i, n) for j in range(n)]

    def left_quad(w):
        i, k, j = w
        if i == k:
            return ass[i][i][j]
        return vec_add(ass[i][k][j], ass[k][i][j])

    def right_quad(w):
        i, k, j = w
        if i == k:
            return ass[j][i][i]
        return vec_add(ass[j][i][k], ass[j][k][i])

    suite.add("alt.left", pairs_leq, left_quad)
    suite.add("alt.right", pairs_leq, right_quad)
    suite.add(
        "alt.left.lin", grid(n, n, n),
        lambda w: vec_add(ass[w[0]][w[1]][w[2]], ass[w[1]][w[0]][w[2]]),
    )
    suite.add(
        "alt.right.lin", grid(n, n, n),
        lambda w: vec_add(ass[w[2]][w[0]][w[1]], ass[w[2]][w[1]][w[0]]),
    )
    return suite.run()


def check_associativity(
    alg: AlternativeAlgebra,
    max_witnesses: int = DEFAULT_MAX_WITNESSES,
    workers: int = 1,
) -> CheckReport:
    """Plain associativity probe, id ``assoc`` over all basis triples."""
    ass = associator_cube(alg)
    suite = IdentitySuite(max_witnesses, workers)
    suite.add("assoc", grid(alg.dim, alg.dim, alg.dim), lambda w: ass[w[0]][w[1]][w[2]])
    return suite.run()


@dataclass
class AltBimoduleAction:
    """Action families ``L(e_i)``, ``R(e_i)`` on a module space."""

    field: FieldSpec
    algebra_dim: int
    module_dim: int
    L: list  # list of module_dim x module_dim matrices, one per basis vector
    R: list

    def __post_init__(self):
        for fam in (self.L, self.R):
            if len(fam) != self.algebra_dim:
                raise DimensionMismatch("family length differs from the algebra dimension")
            for m in fam:
                if len(m) != self.module_dim or any(len(r) != self.module_dim for r in m):
                    raise DimensionMismatch("action matrix is not module_dim x module_dim")

    @classmethod
    def zero(cls, field: FieldSpec, algebra_dim: int, module_dim: int) -> "AltBimoduleAction":
        z = [zero_matrix(field, module_dim, module_dim) for _ in range(algebra_dim)]
        zz = [zero_matrix(field, module_dim, module_dim) for _ in range(algebra_dim)]
        return cls(field, algebra_dim, module_dim, z, zz)

    @classmethod
    def regular(cls, alg: AlternativeAlgebra) -> "AltBimoduleAction":
        """The algebra acting on itself by left and right multiplication."""
        return cls(alg.field, alg.dim, alg.dim, alg.left_matrices(), alg.right_matrices())

    def left_of(self, x: Vector) -> Matrix:
        out = zero_matrix(self.field, self.module_dim, self.module_dim)
        for i, c in enumerate(x):
            if c:
                out = mat_add(out, [[c * v for v in row] for row in self.L[i]])
        return out

    def right_of(self, x: Vector) -> Matrix:
        out = zero_matrix(self.field, self.module_dim, self.module_dim)
        for i, c in enumerate(x):
            if c:
                out = mat_add(out, [[c * v for v in row] for row in self.R[i]])
        return out


def alt_dual_bimodule(act: AltBimoduleAction) -> AltBimoduleAction:
    """Dual action on the dual module: ``(L', R') = (R-transposed, L-transposed)``."""
    return AltBimoduleAction(
        act.field, act.algebra_dim, act.module_dim,
        dual_action(act.R), dual_action(act.L),
    )


def check_alt_bimodule(
    alg: AlternativeAlgebra,
    act: AltBimoduleAction,
    max_witnesses: int = DEFAULT_MAX_WITNESSES,
    workers: int = 1,
) -> CheckReport:
    """Bimodule gate over all basis pairs; ids ``bm.l.lin``, ``bm.r.lin``
    (linearized square conditions) and ``bm.rl``, ``bm.lr`` (the mixed
    commutation conditions).  Residuals are flattened matrices."""
    if not check_alternative(alg).passed:
        raise NotAlternative("underlying algebra fails the alternativity gate")
    if act.algebra_dim != alg.dim:
        raise DimensionMismatch("action is indexed by a different algebra dimension")
    n = alg.dim
    field = alg.field
    L, R = act.L, act.R

    def lin_comb(fam, vec):
        out = zero_matrix(field, act.module_dim, act.module_dim)
        for i, c in enumerate(vec):
            if c:
                out = mat_add(out, [[c * v for v in row] for row in fam[i]])
        return out

    def flat(m):
        return [x for row in m for x in row]

    def l_lin(w):
        i, j = w
        sym = vec_add(alg.mult[i][j], alg.mult[j][i])
        lhs = lin_comb(L, sym)
        rhs = mat_add(mat_mul(field, L[i], L[j]), mat_mul(field, L[j], L[i]))
        return flat(mat_sub(lhs, rhs))

    def r_lin(w):
        i, j = w
        sym = vec_add(alg.mult[i][j], alg.mult[j][i])
        lhs = lin_comb(R, sym)
        rhs = mat_add(mat_mul(field, R[i], R[j]), mat_mul(field, R[j], R[i]))
        return flat(mat_sub(lhs, rhs))

    def mixed_rl(w):
        i, j = w  # x = e_i, y = e_j
        lhs = mat_sub(mat_mul(field, R[j], L[i]), mat_mul(field, L[i], R[j]))
        rhs = mat_sub(lin_comb(R, alg.mult[i][j]), mat_mul(field, R[j], R[i]))
        return flat(mat_sub(lhs, rhs))

    def mixed_lr(w):
        i, j = w  # x = e_i, y = e_j
        lhs = mat_sub(lin_comb(L, alg.mult[j][i]), mat_mul(field, L[j], L[i]))
        rhs = mat_sub(mat_mul(field, L[j], R[i]), mat_mul(field, R[i], L[j]))
        return flat(mat_sub(lhs, rhs))

    suite = IdentitySuite(max_witnesses, workers)
    suite.add("bm.l.lin", grid(n, n), l_lin)
    suite.add("bm.r.lin", grid(n, n), r_lin)
    suite.add("bm.rl", grid(n, n), mixed_rl)
    suite.add("bm.lr", grid(n, n), mixed_lr)
    return suite.run()


def alt_semidirect(
    alg: AlternativeAlgebra,
    act: AltBimoduleAction,
    module_labels: list[str] | None = None,
    check: bool = True,
) -> AlternativeAlgebra:
    """Semidirect sum on ``A (+) V`` with product
    ``(x1 + v1)(x2 + v2) = x1 o x2 + L(x1) v2 + R(x2) v1``.

    With ``check`` the action must pass :func:`check_alt_bimodule`; the
    unchecked path exists so the equivalence *bimodule axioms <=>
    semidirect alternativity* can itself be tested.
    """
    if check and not check_alt_bimodule(alg, act).passed:
        raise BadBimodule("action fails the bimodule identities")
    n, m = alg.dim, act.module_dim
    field = alg.field
    labels = list(alg.labels) + (module_labels or [f"v{i + 1}" for i in range(m)])
    out = AlternativeAlgebra.zero(field, n + m, labels)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                out.mult[i][j][k] = alg.mult[i][j][k]
    for i in range(n):
        for b in range(m):
            for a in range(m):
                out.mult[i][n + b][n + a] = act.L[i][a][b]
                out.mult[n + b][i][n + a] = act.R[i][a][b]
    return out


def check_form(
    alg: AlternativeAlgebra,
    form: BilinearForm,
    kind: str,
    max_witnesses: int = DEFAULT_MAX_WITNESSES,
    workers: int = 1,
) -> CheckReport:
    """Bilinear-form suites.

    ``invariant``: ``B(x o y, z) = B(x, y o z)``; ``closed``:
    ``w(a o b, c) + w(b o c, a) + w(c o a, b) = 0`` for skew ``w``;
    ``symplectic``: closed and nondegenerate.
    """
    if kind not in ("invariant", "closed", "symplectic"):
        raise ValueError(f"unknown form kind {kind!r}")
    if form.dim != alg.dim:
        raise DimensionMismatch("form and algebra dimensions differ")
    if kind in ("closed", "symplectic") and not form.is_skew():
        raise NotSkew("closed/symplectic checks need a skew-symmetric form")
    n = alg.dim
    basis = [alg.basis_vector(i) for i in range(n)]
    suite = IdentitySuite(max_witnesses, workers)
    if kind == "invariant":
        def invariant(w):
            i, j, k = w
            return [form.evaluate(alg.mult[i][j], basis[k])
                    - form.evaluate(basis[i], alg.mult[j][k])]
        suite.add("form.invariant", grid(n, n, n), invariant)
    else:
        def closed(w):
            i, j, k = w
            return [
                form.evaluate(alg.mult[i][j], basis[k])
                + form.evaluate(alg.mult[j][k], basis[i])
                + form.evaluate(alg.mult[k][i], basis[j])
            ]
        suite.add("form.closed", grid(n, n, n), closed)
        if kind == "symplectic":
            suite.add(
                "form.nondegenerate", [()],
                lambda _w: [] if form.is_nondegenerate() else [alg.field.one],
            )
    return suite.run()


@dataclass
class SubspaceReport:
    isotropic: bool
    lagrangian: bool
    subalgebra: bool | None


def subspace_lagrangian(
    form: BilinearForm,
    subspace: list[Vector],
    alg: AlternativeAlgebra | None = None,
) -> SubspaceReport:
    """Isotropy/Lagrangian flags of a subspace, and closure under the
    product when an algebra is supplied."""
    comp = orth_complement(form, subspace)
    closed = None
    if alg is not None:
        span = row_space(alg.field, subspace)
        closed = all(
            in_span(alg.field, span, alg.product(u, v)) for u in span for v in span
        )
    return SubspaceReport(comp.isotropic, comp.lagrangian, closed)


def alt_hom_check(
    f: LinearMap,
    src: AlternativeAlgebra,
    dst: AlternativeAlgebra,
    max_witnesses: int = DEFAULT_MAX_WITNESSES,
    workers: int = 1,
) -> CheckReport:
    """Is ``f(e_i o e_j) = f(e_i) o f(e_j)`` on all basis pairs?  The
    report notes whether ``f`` is bijective."""
    if f.domain_dim != src.dim or f.codomain_dim != dst.dim:
        raise DimensionMismatch("map shape does not match the two algebras")
    images = [f.apply(src.basis_vector(i)) for i in range(src.dim)]

    def residual(w):
        i, j = w
        return vec_sub(f.apply(src.mult[i][j]), dst.product(images[i], images[j]))

    suite = IdentitySuite(max_witnesses, workers)
    suite.add("hom.alt", grid(src.dim, src.dim), residual)
    suite.note("bijective", f.is_bijective())
    return suite.run()
