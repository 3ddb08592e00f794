"""Ways to manufacture pre-alternative structures on a given space.

Four routes are implemented, all exact:

* ``Al``-operators relative to a bimodule, which induce a structure on
  the module (:func:`al_induce`) and, when invertible, a compatible
  structure back on the algebra (:func:`compatible_from_al`);
* bijective 1-cocycles, whose inverses are invertible Al-operators;
* positive gradings, splitting each product by degree weights
  (:func:`graded_split`);
* symplectic forms, splitting by exact linear solves
  (:func:`symplectic_split`), and their 2-cocycle analogue for a
  nondegenerate symmetric solution of the six Yang-Baxter-type equations
  (:func:`compatible_from_pa_solution`).
"""

from __future__ import annotations

from dataclasses import dataclass

from .alternative import (
    AltBimoduleAction,
    AlternativeAlgebra,
    check_form,
)
from .errors import (
    BadCharacteristic,
    DimensionMismatch,
    NotAlOperator,
    NotGraded,
    NotSolution,
    NotSymplectic,
    SingularMap,
)
from .linalg import (
    LinearMap,
    Vector,
    mat_vec,
    solve_unique,
    transpose,
    vec_add,
    vec_sub,
    zero_vector,
)
from .prealternative import PreAlternativeAlgebra
from .reports import DEFAULT_MAX_WITNESSES, CheckReport, IdentitySuite, grid
from .tensors import BilinearForm, Tensor2, map_to_form


@dataclass
class AlOperator:
    """A linear map from a module into the algebra, bundled with the
    action it is an operator for; validity gate is :func:`check_al_operator`."""

    map: LinearMap
    action: AltBimoduleAction


@dataclass
class Grading:
    """Positive integer degree per basis vector; products must raise
    degree additively (checked at use, not here)."""

    degrees: list[int]

    def __post_init__(self):
        if any(d < 1 for d in self.degrees):
            raise NotGraded("degrees must be positive integers")


def check_al_operator(
    alg: AlternativeAlgebra,
    act: AltBimoduleAction,
    t: LinearMap,
    max_witnesses: int = DEFAULT_MAX_WITNESSES,
    workers: int = 1,
) -> CheckReport:
    """Operator identity ``T(u) o T(v) = T(L(T u) v + R(T v) u)`` over all
    module basis pairs (id ``al``)."""
    if t.codomain_dim != alg.dim or t.domain_dim != act.module_dim:
        raise DimensionMismatch("operator shape does not match algebra and module")
    cols = transpose(t.entries)  # cols[a] = T(u_a) in algebra coordinates

    def residual(w):
        a, b = w
        lhs = alg.product(cols[a], cols[b])
        arg = vec_add(
            [act.left_of(cols[a])[x][b] for x in range(act.module_dim)],
            [act.right_of(cols[b])[x][a] for x in range(act.module_dim)],
        )
        return vec_sub(lhs, t.apply(arg))

    suite = IdentitySuite(max_witnesses, workers)
    suite.add("al", grid(act.module_dim, act.module_dim), residual)
    return suite.run()


def al_induce(
    alg: AlternativeAlgebra,
    act: AltBimoduleAction,
    t: LinearMap,
    labels: list[str] | None = None,
) -> PreAlternativeAlgebra:
    """Structure on the module: ``u < v = R(T v) u``, ``u > v = L(T u) v``."""
    if not check_al_operator(alg, act, t).passed:
        raise NotAlOperator("map fails the Al-operator identity")
    m = act.module_dim
    cols = transpose(t.entries)
    out = PreAlternativeAlgebra.zero(alg.field, m, labels)
    for a in range(m):
        for b in range(m):
            right = act.right_of(cols[b])
            left = act.left_of(cols[a])
            for x in range(m):
                out.prec[a][b][x] = right[x][a]
                out.succ[a][b][x] = left[x][b]
    return out


def check_1cocycle(
    alg: AlternativeAlgebra,
    act: AltBimoduleAction,
    d: LinearMap,
    max_witnesses: int = DEFAULT_MAX_WITNESSES,
    workers: int = 1,
) -> CheckReport:
    """Cocycle identity ``D(x o y) = L(x) D(y) + R(y) D(x)`` over basis
    pairs (id ``cocycle1``); bijectivity is reported in ``info``."""
    if d.domain_dim != alg.dim or d.codomain_dim != act.module_dim:
        raise DimensionMismatch("cocycle shape does not match algebra and module")
    images = [d.apply(alg.basis_vector(i)) for i in range(alg.dim)]

    def residual(w):
        i, j = w
        lhs = d.apply(alg.mult[i][j])
        rhs = vec_add(
            mat_vec(alg.field, act.L[i], images[j]),
            mat_vec(alg.field, act.R[j], images[i]),
        )
        return vec_sub(lhs, rhs)

    suite = IdentitySuite(max_witnesses, workers)
    suite.add("cocycle1", grid(alg.dim, alg.dim), residual)
    suite.note("bijective", d.is_bijective())
    return suite.run()


def compatible_from_al(
    alg: AlternativeAlgebra,
    act: AltBimoduleAction,
    t: LinearMap,
) -> PreAlternativeAlgebra:
    """Compatible structure on the algebra from an invertible Al-operator:
    ``x < y = T(R(y) T^{-1} x)``, ``x > y = T(L(x) T^{-1} y)``.

    The sum of the two outputs is exactly the original product."""
    if not check_al_operator(alg, act, t).passed:
        raise NotAlOperator("map fails the Al-operator identity")
    tinv = t.inverse()  # SingularMap if not invertible
    n = alg.dim
    out = PreAlternativeAlgebra.zero(alg.field, n, list(alg.labels))
    pre = [tinv.apply(alg.basis_vector(i)) for i in range(n)]
    basis = [alg.basis_vector(i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            prec = t.apply(mat_vec(alg.field, act.right_of(basis[j]), pre[i]))
            succ = t.apply(mat_vec(alg.field, act.left_of(basis[i]), pre[j]))
            for k in range(n):
                out.prec[i][j][k] = prec[k]
                out.succ[i][j][k] = succ[k]
    return out


def graded_split(alg: AlternativeAlgebra, grading: Grading) -> PreAlternativeAlgebra:
    """Degree-weighted splitting of a positively graded algebra:
    for x of degree i and y of degree j,
    ``x > y = (j/(i+j)) x o y`` and ``x < y = (i/(i+j)) x o y``."""
    if len(grading.degrees) != alg.dim:
        raise DimensionMismatch("one degree per basis vector is required")
    deg = grading.degrees
    for i in range(alg.dim):
        for j in range(alg.dim):
            for k in range(alg.dim):
                if alg.mult[i][j][k] and deg[k] != deg[i] + deg[j]:
                    raise NotGraded(
                        f"product component ({i},{j})->{k} violates the grading"
                    )
    out = PreAlternativeAlgebra.zero(alg.field, alg.dim, list(alg.labels))
    for i in range(alg.dim):
        for j in range(alg.dim):
            if not any(alg.mult[i][j]):
                continue
            total = deg[i] + deg[j]
            if alg.field.characteristic and total % alg.field.characteristic == 0:
                raise BadCharacteristic(
                    f"degree sum {total} is not invertible in the field"
                )
            ws = alg.field.ratio(deg[j], total)
            wp = alg.field.ratio(deg[i], total)
            for k in range(alg.dim):
                c = alg.mult[i][j][k]
                if c:
                    out.succ[i][j][k] = ws * c
                    out.prec[i][j][k] = wp * c
    return out


def symplectic_split(alg: AlternativeAlgebra, omega: BilinearForm) -> PreAlternativeAlgebra:
    """Splitting defined implicitly by a symplectic form:
    ``w(x < y, z) = w(x, y o z)`` and ``w(x > y, z) = w(y, z o x)``.

    Each product is the unique solution of an exact linear system in the
    (nondegenerate) form matrix."""
    if not omega.is_skew() or not omega.is_nondegenerate() or \
            not check_form(alg, omega, "closed").passed:
        raise NotSymplectic("form is not symplectic for this algebra")
    n, field = alg.dim, alg.field
    basis = [alg.basis_vector(i) for i in range(n)]
    gram_t = transpose(omega.b)  # w(w_vec, e_c) = (gram_t @ w_vec)_c
    out = PreAlternativeAlgebra.zero(field, n, list(alg.labels))
    for i in range(n):
        for j in range(n):
            rhs_prec = [omega.evaluate(basis[i], alg.product(basis[j], basis[c]))
                        for c in range(n)]
            rhs_succ = [omega.evaluate(basis[j], alg.product(basis[c], basis[i]))
                        for c in range(n)]
            prec = solve_unique(field, gram_t, rhs_prec)
            succ = solve_unique(field, gram_t, rhs_succ)
            for k in range(n):
                out.prec[i][j][k] = prec[k]
                out.succ[i][j][k] = succ[k]
    return out


def compatible_from_pa_solution(
    alg: PreAlternativeAlgebra,
    r: Tensor2,
) -> PreAlternativeAlgebra:
    """New compatible structure from a nondegenerate symmetric solution of
    the six Yang-Baxter-type equations:
    ``x <' y = T(l>*(y) T^{-1} x)``, ``x >' y = T(r<*(x) T^{-1} y)``
    with ``T`` the map of ``r``.  The sum product equals the original
    associated product, and the structure is the one cut out by the
    induced 2-cocycle ``B``: ``B(x <' y, z) = B(x, y > z)``."""
    from .yangbaxter import pa_residuals  # cycle-free at call time

    if r.dim != alg.dim:
        raise DimensionMismatch("tensor and algebra dimensions differ")
    if not r.is_symmetric():
        raise NotSolution("tensor is not symmetric")
    if not r.is_nondegenerate():
        raise SingularMap("tensor is degenerate")
    if not pa_residuals(alg, r).all_zero():
        raise NotSolution("tensor fails the six-equation system")
    t = r.to_map()
    tinv = t.inverse()
    n, field = alg.dim, alg.field
    ls_dual = [transpose(m) for m in alg.l_succ_matrices()]
    rp_dual = [transpose(m) for m in alg.r_prec_matrices()]
    out = PreAlternativeAlgebra.zero(field, n, list(alg.labels))
    pre = [tinv.apply(alg.basis_vector(i)) for i in range(n)]
    for i in range(n):
        for j in range(n):
            prec = t.apply(mat_vec(field, ls_dual[j], pre[i]))
            succ = t.apply(mat_vec(field, rp_dual[i], pre[j]))
            for k in range(n):
                out.prec[i][j][k] = prec[k]
                out.succ[i][j][k] = succ[k]
    return out
