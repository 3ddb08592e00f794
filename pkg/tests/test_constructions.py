import random
from fractions import Fraction

import pytest

from helpers import GF3, rand_tensor2
from prealt.alternative import (
    AltBimoduleAction,
    alt_dual_bimodule,
    alt_hom_check,
    alt_semidirect,
    check_alternative,
    check_form,
)
from prealt.bialgebras import invariant_pairing_form, omega_p_form
from prealt.catalog import n2, p2, p3_graded, zero_algebra
from prealt.constructions import (
    Grading,
    al_induce,
    check_1cocycle,
    check_al_operator,
    compatible_from_al,
    compatible_from_pa_solution,
    graded_split,
    symplectic_split,
)
from prealt.errors import (
    BadCharacteristic,
    NotAlOperator,
    NotGraded,
    NotSolution,
    NotSymplectic,
    SingularMap,
)
from prealt.fields import QQ
from prealt.linalg import LinearMap, inverse, mat_vec, transpose
from prealt.prealternative import (
    associated_algebra,
    check_prealt_bimodule,
    check_prealternative,
)
from prealt.tensors import Tensor2, form_to_tensor2
from prealt.yangbaxter import (
    aybe_residual,
    brute_search,
    canonical_r,
    pa_residuals,
)
from prealt.alternative import AlternativeAlgebra


DIAG_HALF = LinearMap.from_matrix(QQ, [[Fraction(1), Fraction(0)],
                                       [Fraction(0), Fraction(1, 2)]])


def test_al_operator_examples(alg_n2):
    reg = AltBimoduleAction.regular(alg_n2)
    assert check_al_operator(alg_n2, reg, LinearMap.zero(QQ, 2, 2)).passed
    assert check_al_operator(alg_n2, reg, DIAG_HALF).passed
    report = check_al_operator(alg_n2, reg, LinearMap.identity(QQ, 2))
    assert not report.passed
    assert report.violations[0].witness == (0, 0)
    # LHS e2, RHS 2 e2 -> residual -e2
    assert report.violations[0].residual == (QQ.zero, Fraction(-1))


def test_al_induce(alg_n2):
    reg = AltBimoduleAction.regular(alg_n2)
    zero_struct = al_induce(alg_n2, reg, LinearMap.zero(QQ, 2, 2))
    assert check_prealternative(zero_struct).passed
    assert all(not any(v) for row in zero_struct.prec for v in row)

    struct = al_induce(alg_n2, reg, DIAG_HALF)
    assert struct.prec[0][0] == [QQ.zero, QQ.one]
    assert struct.succ[0][0] == [QQ.zero, QQ.one]
    assert check_prealternative(struct).passed
    # the operator is a homomorphism from the associated structure back
    assert alt_hom_check(DIAG_HALF, associated_algebra(struct), alg_n2).passed


def test_al_induce_on_search_hits(alg_n2):
    base = alg_n2.map_scalars(GF3)
    reg = AltBimoduleAction.regular(base)
    hits = brute_search(GF3, "al-operator", base)
    assert hits  # the zero map at least
    for t in hits:
        struct = al_induce(base, reg, t)
        assert check_prealternative(struct).passed
        assert alt_hom_check(t, associated_algebra(struct), base).passed


def test_1cocycle_examples(alg_n2):
    reg = AltBimoduleAction.regular(alg_n2)
    rep = check_1cocycle(alg_n2, reg, LinearMap.zero(QQ, 2, 2))
    assert rep.passed and rep.info["bijective"] is False
    grading_cocycle = LinearMap.from_matrix(QQ, [[Fraction(1), Fraction(0)],
                                                 [Fraction(0), Fraction(2)]])
    rep = check_1cocycle(alg_n2, reg, grading_cocycle)
    assert rep.passed and rep.info["bijective"] is True
    rep = check_1cocycle(alg_n2, reg, LinearMap.identity(QQ, 2))
    assert not rep.passed
    assert rep.violations[0].witness == (0, 0)
    assert rep.violations[0].residual == (QQ.zero, Fraction(-1))


def test_compatible_from_al(alg_n2, alg_p2):
    reg = AltBimoduleAction.regular(alg_n2)
    assert compatible_from_al(alg_n2, reg, DIAG_HALF).same_structure(alg_p2)
    # bijective 1-cocycle route: its inverse is an invertible operator
    d = LinearMap.from_matrix(QQ, [[Fraction(1), Fraction(0)],
                                   [Fraction(0), Fraction(2)]])
    assert check_1cocycle(alg_n2, reg, d).passed
    assert compatible_from_al(alg_n2, reg, d.inverse()).same_structure(alg_p2)


def test_compatible_from_al_gates():
    line = AlternativeAlgebra.from_triples(QQ, 1, [(0, 0, 0, QQ.one)])
    reg = AltBimoduleAction.regular(line)
    for lam in (1, 2, -1):
        t = LinearMap.from_matrix(QQ, [[Fraction(lam)]])
        with pytest.raises(NotAlOperator):
            compatible_from_al(line, reg, t)
    with pytest.raises(SingularMap):
        compatible_from_al(n2(), AltBimoduleAction.regular(n2()),
                           LinearMap.zero(QQ, 2, 2))


def test_prop_2_13_three_way(alg_n2, alg_p2):
    reg = AltBimoduleAction.regular(alg_n2)
    # bijective cocycle -> inverse passes the operator gate
    d = LinearMap.from_matrix(QQ, [[Fraction(1), Fraction(0)],
                                   [Fraction(0), Fraction(2)]])
    assert check_al_operator(alg_n2, reg, d.inverse()).passed
    # invertible operator -> compatible structure (sum reproduces product)
    c = compatible_from_al(alg_n2, reg, DIAG_HALF)
    assert associated_algebra(c).same_structure(alg_n2)
    # compatible structure -> the identity is a cocycle for (l>, r<)
    rep = check_1cocycle(associated_algebra(alg_p2), alg_p2.associated_action(),
                         LinearMap.identity(QQ, 2))
    assert rep.passed and rep.info["bijective"] is True


def test_graded_split_examples(alg_n2, alg_p2, alg_p3):
    assert graded_split(alg_n2, Grading([1, 2])).same_structure(alg_p2)
    z = graded_split(zero_algebra(3), Grading([1, 1, 1]))
    assert all(not any(v) for row in z.prec for v in row)

    trunc = AlternativeAlgebra.from_triples(
        QQ, 3, [(0, 0, 1, QQ.one), (0, 1, 2, QQ.one), (1, 0, 2, QQ.one)],
        labels=["x1", "x2", "x3"],
    )
    split = graded_split(trunc, Grading([1, 2, 3]))
    assert split.same_structure(alg_p3)
    assert split.succ[0][1][2] == Fraction(2, 3)
    assert split.prec[1][0][2] == Fraction(2, 3)
    assert check_prealternative(split).passed
    # splitting recombines to the input tensor exactly
    assert associated_algebra(split).same_structure(trunc)


def test_graded_split_gates(alg_n2):
    with pytest.raises(NotGraded):
        graded_split(alg_n2, Grading([1, 3]))
    with pytest.raises(NotGraded):
        Grading([0, 1])
    base = p3_graded()  # needs 1/3: reduce the associated algebra mod 3
    trunc = associated_algebra(base)
    with pytest.raises(BadCharacteristic):
        graded_split(trunc.map_scalars(GF3), Grading([1, 2, 3]))


def test_symplectic_split(alg_p2):
    E = canonical_r(alg_p2, "minus").ambient
    omega = omega_p_form(QQ, 2)
    split = symplectic_split(E, omega)
    assert check_prealternative(split).passed
    assert associated_algebra(split).same_structure(E)
    # defining property, checked directly
    basis = [E.basis_vector(i) for i in range(4)]
    for i in range(4):
        for j in range(4):
            for k in range(4):
                assert omega.evaluate(split.prec[i][j], basis[k]) == \
                    omega.evaluate(basis[i], E.mult[j][k])
                assert omega.evaluate(split.succ[i][j], basis[k]) == \
                    omega.evaluate(basis[j], E.mult[k][i])
    # route through the transposed multiplications of the form
    tmat = [[omega.b[j][i] for i in range(4)] for j in range(4)]
    tinv = inverse(QQ, tmat)
    lmats = E.left_matrices()
    for i in range(4):
        for j in range(4):
            tx = [tmat[k][i] for k in range(4)]
            assert mat_vec(QQ, tinv, mat_vec(QQ, transpose(lmats[j]), tx)) == \
                split.prec[i][j]

    zero4 = zero_algebra(4)
    zsplit = symplectic_split(zero4, omega)
    assert all(not any(v) for row in zsplit.prec for v in row)

    with pytest.raises(NotSymplectic):
        symplectic_split(E, invariant_pairing_form(QQ, 2))


def test_compatible_from_pa_solution(alg_p2):
    r = Tensor2.from_triples(QQ, 2, [(0, 1, QQ.one), (1, 0, QQ.one)])
    new = compatible_from_pa_solution(alg_p2, r)
    assert check_prealternative(new).passed
    assert associated_algebra(new).same_structure(associated_algebra(alg_p2))
    # characterization through the induced 2-cocycle
    from prealt.tensors import map_to_form
    b = map_to_form(r.to_map())
    basis = [alg_p2.basis_vector(i) for i in range(2)]
    for i in range(2):
        for j in range(2):
            for k in range(2):
                assert b.evaluate(new.prec[i][j], basis[k]) == \
                    b.evaluate(basis[i], alg_p2.succ[j][k])
                assert b.evaluate(new.succ[i][j], basis[k]) == \
                    b.evaluate(basis[j], alg_p2.prec[k][i])

    with pytest.raises(SingularMap):
        compatible_from_pa_solution(alg_p2, Tensor2.from_triples(QQ, 2, [(0, 0, QQ.one)]))
    # symmetric nondegenerate non-solution
    bad = Tensor2.from_triples(QQ, 2, [(0, 0, QQ.one), (1, 1, QQ.one)])
    if pa_residuals(alg_p2, bad).all_zero():
        pytest.skip("tensor unexpectedly solves the system")
    with pytest.raises(NotSolution):
        compatible_from_pa_solution(alg_p2, bad)


def test_compatible_from_pa_solution_on_plus_ambient(alg_p2):
    record = canonical_r(alg_p2, "plus")
    new = compatible_from_pa_solution(record.ambient, record.r)
    assert check_prealternative(new).passed
    assert associated_algebra(new).same_structure(associated_algebra(record.ambient))


def test_rota_baxter_specialization_skew(rng):
    # with a nondegenerate symmetric invariant pairing, a skew tensor
    # solves the Yang-Baxter equation iff the composed endomorphism is a
    # weight-zero Rota-Baxter operator (an operator for the regular action)
    base = n2().map_scalars(GF3)
    big = alt_semidirect(base, alt_dual_bimodule(AltBimoduleAction.regular(base)),
                         module_labels=["e1^*", "e2^*"])
    pairing = invariant_pairing_form(GF3, 2)
    assert check_form(big, pairing, "invariant").passed
    assert pairing.is_nondegenerate()
    phi = transpose(pairing.b)
    reg = AltBimoduleAction.regular(big)
    seen = {True: 0, False: 0}
    for _ in range(60):
        r = rand_tensor2(GF3, 4, rng, "skew")
        solves = aybe_residual(big, r, "A1").is_zero()
        composed = LinearMap.from_matrix(
            GF3, [[sum((r.a[i][k] * phi[k][j] for k in range(4)), GF3.zero)
                   for j in range(4)] for i in range(4)])
        assert check_al_operator(big, reg, composed).passed == solves
        seen[solves] += 1
    assert seen[True] and seen[False]


def test_rota_baxter_specialization_symmetric(rng):
    # pre-alternative analogue with a symmetric pairing satisfying
    # h(x < y, z) = h(x, y > z)
    base = p2().map_scalars(GF3)
    from prealt.prealternative import prealt_semidirect, standard_actions
    big = prealt_semidirect(base, standard_actions(base)["(0, l>*, r<*, 0)"],
                            module_labels=["e1^*", "e2^*"])
    h = invariant_pairing_form(GF3, 2)
    basis = [big.basis_vector(i) for i in range(4)]
    for i in range(4):
        for j in range(4):
            for k in range(4):
                assert h.evaluate(big.prec[i][j], basis[k]) == \
                    h.evaluate(basis[i], big.succ[j][k])
    phi = transpose(h.b)
    act = big.associated_action()
    assoc = associated_algebra(big)
    seen = {True: 0, False: 0}
    for _ in range(60):
        r = rand_tensor2(GF3, 4, rng, "sym")
        solves = pa_residuals(big, r).all_zero()
        composed = LinearMap.from_matrix(
            GF3, [[sum((r.a[i][k] * phi[k][j] for k in range(4)), GF3.zero)
                   for j in range(4)] for i in range(4)])
        assert check_al_operator(assoc, act, composed).passed == solves
        seen[solves] += 1
    assert seen[False]
