import random
from fractions import Fraction

import pytest

from helpers import GF3, rand_algebra, rand_alternative, rand_scalar
from prealt.alternative import (
    AltBimoduleAction,
    AlternativeAlgebra,
    alt_dual_bimodule,
    alt_hom_check,
    alt_semidirect,
    check_alt_bimodule,
    check_alternative,
    check_associativity,
    check_form,
    subspace_lagrangian,
)
from prealt.bialgebras import invariant_pairing_form, omega_p_form
from prealt.catalog import n2, octonion, p2, zero_algebra
from prealt.errors import BadBimodule, NotAlternative, NotSkew
from prealt.fields import QQ
from prealt.linalg import LinearMap
from prealt.prealternative import associated_algebra
from prealt.yangbaxter import canonical_r


def test_zero_algebra_passes():
    for dim in (0, 1, 3):
        assert check_alternative(zero_algebra(dim)).passed


def test_octonions_alternative_not_associative(octonions):
    assert check_alternative(octonions).passed
    probe = check_associativity(octonions)
    assert not probe.passed
    assert probe.total_violations > 0
    assert all(v.identity == "assoc" for v in probe.violations)


def test_regression_fixture_e1e2_e2e2():
    # e1 o e2 = e1, e2 o e2 = e1, all else 0: frozen verdict from
    # exhaustive associator evaluation over the 8 basis triples
    alg = AlternativeAlgebra.from_triples(
        QQ, 2, [(0, 1, 0, QQ.one), (1, 1, 0, QQ.one)]
    )
    report = check_alternative(alg)
    assert not report.passed
    assert report.failed_identities() == ["alt.left", "alt.right",
                                          "alt.left.lin", "alt.right.lin"]
    # (e1, e2, e2)-type right violation: (e1 o e2) o e2 - e1 o (e2 o e2) = e1
    probe = check_associativity(alg)
    assert ((0, 1, 1), (QQ.one, QQ.zero)) in [(v.witness, v.residual) for v in probe.violations]


def test_quadratic_and_linearized_verdicts_agree_on_randoms(rng):
    for _ in range(120):
        alg = rand_algebra(GF3, rng.choice((2, 3)), rng)
        report = check_alternative(alg, max_witnesses=10**6)
        failed = set(report.failed_identities())
        quad = not failed & {"alt.left", "alt.right"}
        lin = not failed & {"alt.left.lin", "alt.right.lin"}
        assert quad == lin


def test_bimodule_zero_and_regular(octonions, alg_n2):
    zero_act = AltBimoduleAction.zero(QQ, alg_n2.dim, 3)
    assert check_alt_bimodule(alg_n2, zero_act).passed
    assert check_alt_bimodule(octonions, AltBimoduleAction.regular(octonions)).passed


def test_bimodule_gate_rejects_non_alternative():
    bad = AlternativeAlgebra.from_triples(QQ, 2, [(0, 1, 0, QQ.one), (1, 1, 0, QQ.one)])
    with pytest.raises(NotAlternative):
        check_alt_bimodule(bad, AltBimoduleAction.zero(QQ, 2, 1))


def test_bimodule_half_regular(alg_n2, octonions):
    # regression fixture: on the two-step nilpotent algebra the truncated
    # action (left multiplications, zero) happens to satisfy everything
    half_n2 = AltBimoduleAction(QQ, 2, 2, alg_n2.left_matrices(),
                                AltBimoduleAction.zero(QQ, 2, 2).R)
    assert check_alt_bimodule(alg_n2, half_n2).passed

    # on the octonions the same shape breaks exactly the mixed identity
    # relating L(y o x) to L(y)L(x)
    zero8 = AltBimoduleAction.zero(QQ, 8, 8)
    act = AltBimoduleAction(QQ, 8, 8, octonions.left_matrices(), zero8.R)
    report = check_alt_bimodule(octonions, act)
    assert not report.passed
    assert report.failed_identities() == ["bm.lr"]
    witness = report.violations[0]
    assert witness.identity == "bm.lr" and witness.witness == (1, 2)
    # independent oracle: residual of L(y o x) - L(y)L(x) - L(y)R(x) + R(x)L(y)
    from prealt.linalg import mat_mul, mat_sub
    L = octonions.left_matrices()
    i, j = witness.witness
    lin = octonions.product(octonions.basis_vector(j), octonions.basis_vector(i))
    l_of_prod = [[sum((c * L[u][a][b] for u, c in enumerate(lin) if c), QQ.zero)
                  for b in range(8)] for a in range(8)]
    expected = mat_sub(l_of_prod, mat_mul(QQ, L[j], L[i]))
    assert witness.residual == tuple(c for row in expected for c in row)


def test_semidirect_examples(alg_n2, octonions):
    out = alt_semidirect(alg_n2, AltBimoduleAction.zero(QQ, 2, 1))
    assert out.dim == 3
    assert out.mult[0][0][1] == 1
    assert sum(1 for i in range(3) for j in range(3) for k in range(3)
               if out.mult[i][j][k]) == 1

    out = alt_semidirect(alg_n2, AltBimoduleAction.regular(alg_n2))
    assert out.dim == 4 and check_alternative(out).passed

    act = alt_dual_bimodule(AltBimoduleAction.regular(octonions))
    big = alt_semidirect(octonions, act,
                         module_labels=[f"{s}^*" for s in octonions.labels])
    assert big.dim == 16 and check_alternative(big).passed


def test_semidirect_gate(octonions):
    bad = AltBimoduleAction(QQ, 8, 8, octonions.left_matrices(),
                            AltBimoduleAction.zero(QQ, 8, 8).R)
    with pytest.raises(BadBimodule):
        alt_semidirect(octonions, bad)


def test_dual_bimodule_examples(alg_n2):
    zero_act = AltBimoduleAction.zero(QQ, 2, 2)
    dz = alt_dual_bimodule(zero_act)
    assert dz.L == zero_act.L and dz.R == zero_act.R
    reg = AltBimoduleAction.regular(alg_n2)
    dual = alt_dual_bimodule(reg)
    # L'(e1) = transpose of right multiplication by e1: sends e2* to e1*
    assert dual.L[0][0][1] == 1
    again = alt_dual_bimodule(dual)
    assert again.L == reg.L and again.R == reg.R
    assert check_alt_bimodule(alg_n2, dual).passed


def test_bimodule_iff_semidirect_alternative(rng):
    agree = 0
    for _ in range(60):
        alg = rand_alternative(GF3, rng.choice((2, 3)), rng)
        m = rng.choice((1, 2))
        L = [[[rand_scalar(GF3, rng) for _ in range(m)] for _ in range(m)]
             for _ in range(alg.dim)]
        R = [[[rand_scalar(GF3, rng) for _ in range(m)] for _ in range(m)]
             for _ in range(alg.dim)]
        act = AltBimoduleAction(GF3, alg.dim, m, L, R)
        lhs = check_alt_bimodule(alg, act).passed
        rhs = check_alternative(alt_semidirect(alg, act, check=False)).passed
        assert lhs == rhs
        agree += 1
    assert agree == 60


def test_invariant_pairing_on_dual_semidirect():
    for alg in (n2(), zero_algebra(2), octonion()):
        big = alt_semidirect(alg, alt_dual_bimodule(AltBimoduleAction.regular(alg)),
                             module_labels=[f"{s}^*" for s in alg.labels])
        form = invariant_pairing_form(alg.field, alg.dim)
        assert check_form(big, form, "invariant").passed


def test_form_examples(alg_p2):
    zero2 = zero_algebra(2)
    any_form = invariant_pairing_form(QQ, 1)
    assert check_form(zero2, any_form, "invariant").passed
    record = canonical_r(alg_p2, "minus")
    omega = omega_p_form(QQ, 2)
    assert check_form(record.ambient, omega, "symplectic").passed
    with pytest.raises(NotSkew):
        check_form(zero2, invariant_pairing_form(QQ, 1), "closed")


def test_subspace_lagrangian(alg_p2):
    record = canonical_r(alg_p2, "minus")
    E = record.ambient
    omega = omega_p_form(QQ, 2)
    w = [E.basis_vector(0), E.basis_vector(1)]
    rep = subspace_lagrangian(omega, w, E)
    assert rep.isotropic and rep.lagrangian and rep.subalgebra
    mixed = [[QQ.one, QQ.zero, QQ.one, QQ.zero]]  # e1 + e1*
    rep = subspace_lagrangian(omega, mixed, E)
    # frozen verdict: isotropic line, not Lagrangian, and not closed under
    # the product ((e1 + e1*) * (e1 + e1*) = e2 lies outside the line)
    assert rep.isotropic and not rep.lagrangian and not rep.subalgebra
    rep = subspace_lagrangian(omega, [], E)
    assert rep.isotropic and not rep.lagrangian


def test_hom_check(alg_n2, alg_p2):
    ident = LinearMap.identity(QQ, 2)
    assert alt_hom_check(ident, alg_n2, alg_n2).passed
    zero = LinearMap.zero(QQ, 2, 2)
    assert alt_hom_check(zero, alg_n2, alg_n2).passed
    # scaling e2 by 2 is a homomorphism of n2 (e1 o e1 = e2 is degree 2)
    f = LinearMap.from_matrix(QQ, [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(2)]])
    assert not alt_hom_check(f, alg_n2, alg_n2).passed
    g = LinearMap.from_matrix(QQ, [[Fraction(2), Fraction(0)], [Fraction(0), Fraction(4)]])
    assert alt_hom_check(g, alg_n2, alg_n2).passed
