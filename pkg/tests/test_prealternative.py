import random
from fractions import Fraction

import pytest

from helpers import GF3, rand_scalar, rand_valid_prealt
from prealt.alternative import AltBimoduleAction, check_alt_bimodule, check_alternative
from prealt.catalog import halved_field_negative, halved_idempotent, n2, p2, p3_graded
from prealt.errors import BadBimodule, NotPreAlternative
from prealt.fields import QQ
from prealt.linalg import LinearMap
from prealt.prealternative import (
    PreAlternativeAlgebra,
    PreAltBimoduleAction,
    associated_algebra,
    check_2cocycle,
    check_prealt_bimodule,
    check_prealternative,
    prealt_dual_bimodule,
    prealt_hom_check,
    prealt_semidirect,
    standard_actions,
)
from prealt.tensors import BilinearForm, Tensor2
from prealt.yangbaxter import canonical_r
from prealt.bialgebras import invariant_pairing_form


def test_catalog_structures(alg_p2, alg_p3):
    assert check_prealternative(alg_p2).passed
    assert check_prealternative(alg_p3).passed
    assert check_prealternative(PreAlternativeAlgebra.zero(QQ, 3)).passed


def test_halved_idempotent_fails_r_axioms():
    report = check_prealternative(halved_idempotent())
    assert not report.passed
    by_id = {v.identity: v for v in report.violations}
    assert by_id["pa.r.sym"].witness == (0, 0, 0)
    assert by_id["pa.r.sym"].residual == (Fraction(-1, 2),)
    # the square-argument r-associator itself is -1/4 e
    assert by_id["pa.r.quad"].residual == (Fraction(-1, 4),)
    report = check_prealternative(halved_field_negative())
    assert not report.passed


def test_associated_algebra(alg_p2, alg_p3):
    assert associated_algebra(alg_p2).same_structure(n2())
    assert associated_algebra(PreAlternativeAlgebra.zero(QQ, 2)).same_structure(
        __import__("prealt.catalog", fromlist=["zero_algebra"]).zero_algebra(2))
    assert check_alternative(associated_algebra(alg_p3)).passed


def test_dendriform_instances_are_prealternative(rng):
    # random structures with all three mixed associators identically zero
    found = 0
    attempts = 0
    while found < 12 and attempts < 4000:
        attempts += 1
        dim = rng.choice((1, 2))
        prec = [[[rand_scalar(GF3, rng) if rng.random() < 0.4 else GF3.zero
                  for _ in range(dim)] for _ in range(dim)] for _ in range(dim)]
        succ = [[[rand_scalar(GF3, rng) if rng.random() < 0.4 else GF3.zero
                  for _ in range(dim)] for _ in range(dim)] for _ in range(dim)]
        cand = PreAlternativeAlgebra(GF3, dim, [f"e{i+1}" for i in range(dim)],
                                     prec, succ)
        ok = True
        for i in range(dim):
            for j in range(dim):
                for k in range(dim):
                    ei, ej, ek = (cand.basis_vector(t) for t in (i, j, k))
                    r_ass = [a - b for a, b in zip(
                        cand.prec_product(cand.prec[i][j], ek),
                        cand.prec_product(ei, cand.circ(j, k)))]
                    m_ass = [a - b for a, b in zip(
                        cand.prec_product(cand.succ[i][j], ek),
                        cand.succ_product(ei, cand.prec[j][k]))]
                    l_ass = [a - b for a, b in zip(
                        cand.succ_product(cand.circ(i, j), ek),
                        cand.succ_product(ei, cand.succ[j][k]))]
                    if any(r_ass) or any(m_ass) or any(l_ass):
                        ok = False
        if ok:
            found += 1
            assert check_prealternative(cand).passed
    assert found >= 12


def test_p2_is_dendriform(alg_p2):
    # all three mixed associators vanish identically on the catalog split
    e = alg_p2.basis_vector(0)
    assert not any(alg_p2.prec_product(alg_p2.prec[0][0], e))
    assert not any(alg_p2.prec_product(e, alg_p2.circ(0, 0)))


def test_regular_and_standard_actions_are_bimodules(alg_p2, alg_p3):
    for alg in (alg_p2, alg_p3):
        for name, act in standard_actions(alg).items():
            assert check_prealt_bimodule(alg, act).passed, name


def test_inner_and_sum_actions_bimodules_of_associated(alg_p2, alg_p3):
    for alg in (alg_p2, alg_p3):
        assoc = associated_algebra(alg)
        reg = PreAltBimoduleAction.regular(alg)
        assert check_alt_bimodule(assoc, reg.inner_action()).passed
        assert check_alt_bimodule(assoc, reg.sum_action()).passed
        assert check_alt_bimodule(assoc, alg.associated_action()).passed


def test_alt_bimodule_lifts_to_prealt(alg_p2, rng):
    # any bimodule (L, R) of the associated algebra gives the four-family
    # action (0, R, L, 0)
    assoc = associated_algebra(alg_p2)
    for act in (AltBimoduleAction.zero(QQ, 2, 2),
                AltBimoduleAction.regular(assoc)):
        lifted = PreAltBimoduleAction(QQ, 2, act.module_dim,
                                      [[[QQ.zero] * act.module_dim
                                        for _ in range(act.module_dim)]
                                       for _ in range(2)],
                                      act.R, act.L,
                                      [[[QQ.zero] * act.module_dim
                                        for _ in range(act.module_dim)]
                                       for _ in range(2)])
        assert check_prealt_bimodule(alg_p2, lifted).passed


def test_prealt_bimodule_gate():
    with pytest.raises(NotPreAlternative):
        check_prealt_bimodule(halved_idempotent(),
                              PreAltBimoduleAction.zero(QQ, 1, 1))


def test_dual_bimodule(alg_p2):
    zero = PreAltBimoduleAction.zero(QQ, 2, 3)
    dz = prealt_dual_bimodule(zero)
    assert dz.Lp == zero.Lp and dz.Rs == zero.Rs
    reg = PreAltBimoduleAction.regular(alg_p2)
    dual = prealt_dual_bimodule(reg)
    assert check_prealt_bimodule(alg_p2, dual).passed
    sixth = standard_actions(alg_p2)["(-r>*, lo*, ro*, -l<*)"]
    assert dual.Lp == sixth.Lp and dual.Rp == sixth.Rp
    assert dual.Ls == sixth.Ls and dual.Rs == sixth.Rs
    # the summed family of the dual action is again a bimodule of the
    # associated algebra
    assert check_alt_bimodule(associated_algebra(alg_p2), dual.sum_action()).passed


def test_semidirect_examples(alg_p2):
    out = prealt_semidirect(alg_p2, PreAltBimoduleAction.zero(QQ, 2, 1))
    assert out.dim == 3
    assert out.prec[0][0][1] == Fraction(1, 2)
    assert check_prealternative(out).passed

    fifth = standard_actions(alg_p2)["(0, l>*, r<*, 0)"]
    out = prealt_semidirect(alg_p2, fifth, module_labels=["e1^*", "e2^*"])
    assert out.dim == 4 and check_prealternative(out).passed

    sixth = standard_actions(alg_p2)["(-r>*, lo*, ro*, -l<*)"]
    out6 = prealt_semidirect(alg_p2, sixth, module_labels=["e1^*", "e2^*"])
    assert check_prealternative(out6).passed
    # its associated algebra is the alternative semidirect sum of the
    # associated algebra by the dualized (l>, r<) action
    from prealt.alternative import alt_dual_bimodule, alt_semidirect
    expected = alt_semidirect(
        associated_algebra(alg_p2),
        alt_dual_bimodule(alg_p2.associated_action()),
        module_labels=["e1^*", "e2^*"],
    )
    assert associated_algebra(out6).same_structure(expected)


def test_semidirect_gate_and_equivalence(rng):
    for _ in range(40):
        alg = rand_valid_prealt(GF3, rng.choice((1, 2, 3)), rng)
        m = rng.choice((1, 2))
        fams = [
            [[[rand_scalar(GF3, rng) for _ in range(m)] for _ in range(m)]
             for _ in range(alg.dim)]
            for _ in range(4)
        ]
        act = PreAltBimoduleAction(GF3, alg.dim, m, *fams)
        lhs = check_prealt_bimodule(alg, act).passed
        rhs = check_prealternative(prealt_semidirect(alg, act, check=False)).passed
        assert lhs == rhs


def test_2cocycle_examples(alg_p2):
    zero_form = BilinearForm.zeros(QQ, 2)
    assert check_2cocycle(alg_p2, zero_form).passed

    fifth = standard_actions(alg_p2)["(0, l>*, r<*, 0)"]
    big = prealt_semidirect(alg_p2, fifth, module_labels=["e1^*", "e2^*"])
    pairing = invariant_pairing_form(QQ, 2)
    assert check_2cocycle(big, pairing).passed

    # the cocycle conditions on this structure force B(e2, e1) = B(e1, e2)
    # and B(e2, e2) = 0; break the first
    bad = BilinearForm(QQ, 2, [[QQ.zero, QQ.one], [QQ.zero, QQ.zero]])
    report = check_2cocycle(alg_p2, bad)
    assert not report.passed
    assert report.violations[0].identity == "cc.main"
    assert report.violations[0].witness == (0, 0, 0)
    assert report.violations[0].residual == (Fraction(-1),)


def test_hom_check(alg_p2):
    ident = LinearMap.identity(QQ, 2)
    assert prealt_hom_check(ident, alg_p2, alg_p2).passed
    zero = LinearMap.zero(QQ, 2, 2)
    rep = prealt_hom_check(zero, alg_p2, alg_p2)
    assert rep.passed and rep.info["bijective"] is False
    f = LinearMap.from_matrix(QQ, [[Fraction(1), Fraction(0)],
                                   [Fraction(0), Fraction(3)]])
    assert not prealt_hom_check(f, alg_p2, alg_p2).passed
