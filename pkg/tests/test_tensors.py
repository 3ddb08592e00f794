import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import GF3, naive_pair_product, rand_scalar, rand_tensor2
from prealt.catalog import n2, p2
from prealt.errors import SlotError
from prealt.fields import QQ
from prealt.linalg import LinearMap
from prealt.tensors import (
    BilinearForm,
    Tensor2,
    dual_action,
    map_to_form,
    map_to_tensor2,
    orth_complement,
    pair_product,
)
from prealt.yangbaxter import minus_tensor
from prealt.bialgebras import omega_p_form


def q_tensor2(dim=2):
    fracs = st.fractions(min_value=-4, max_value=4, max_denominator=3)
    return st.lists(
        st.lists(fracs, min_size=dim, max_size=dim), min_size=dim, max_size=dim
    ).map(lambda rows: Tensor2(QQ, dim, [[Fraction(x) for x in r] for r in rows]))


@given(q_tensor2())
@settings(max_examples=60, deadline=None)
def test_flip_involution_and_parts(t):
    assert t.flip().flip().a == t.a
    assert (t.symmetric_part() + t.skew_part()).a == t.a
    assert t.symmetric_part().is_symmetric()
    assert t.skew_part().is_skew()


def test_flip_examples():
    z = Tensor2.zeros(QQ, 2)
    assert z.flip().is_zero()
    t = Tensor2.from_triples(QQ, 2, [(0, 1, QQ.one)])
    assert t.flip().a == Tensor2.from_triples(QQ, 2, [(1, 0, QQ.one)]).a
    skew = Tensor2.from_triples(QQ, 2, [(0, 1, QQ.one), (1, 0, -QQ.one)])
    assert skew.flip().a == (-skew).a


def test_tensor2_to_map_convention():
    assert Tensor2.zeros(QQ, 2).to_map().is_zero()
    skew = Tensor2.from_triples(QQ, 2, [(0, 1, QQ.one), (1, 0, -QQ.one)])
    t = skew.to_map()
    assert t.apply([QQ.one, QQ.zero]) == [QQ.zero, -QQ.one]   # e1* -> -e2
    assert t.apply([QQ.zero, QQ.one]) == [QQ.one, QQ.zero]    # e2* -> e1
    sym = Tensor2.from_triples(QQ, 2, [(0, 1, QQ.one), (1, 0, QQ.one)])
    t = sym.to_map()
    assert t.apply([QQ.one, QQ.zero]) == [QQ.zero, QQ.one]
    assert map_to_tensor2(t).a == sym.a


@given(q_tensor2())
@settings(max_examples=40, deadline=None)
def test_map_roundtrip(t):
    assert map_to_tensor2(t.to_map()).a == t.a


def test_map_to_form_examples():
    ident = LinearMap.identity(QQ, 2)
    assert map_to_form(ident).b == [[QQ.one, QQ.zero], [QQ.zero, QQ.one]]
    sym = Tensor2.from_triples(QQ, 2, [(0, 1, QQ.one), (1, 0, QQ.one)])
    b = map_to_form(sym.to_map())
    assert b.b[0][1] == 1 and b.b[1][0] == 1 and b.b[0][0] == 0 and b.b[1][1] == 0
    assert b.is_symmetric()
    skew = Tensor2.from_triples(QQ, 2, [(0, 1, QQ.one), (1, 0, -QQ.one)])
    b = map_to_form(skew.to_map())
    assert b.b[0][1] == -1 and b.is_skew()


def test_map_to_form_matches_canonical_split_pairing():
    # the canonical skew tensor on a split space induces exactly the
    # pairing <a*, y> - <x, b*>
    r = minus_tensor(QQ, 2)
    assert map_to_form(r.to_map()).b == omega_p_form(QQ, 2).b


def test_symmetry_transfers_between_map_and_form():
    rng = random.Random(1)
    for _ in range(20):
        for symmetry in ("sym", "skew"):
            t = rand_tensor2(QQ, 3, rng, symmetry)
            if not t.is_nondegenerate():
                continue
            form = map_to_form(t.to_map())
            assert form.is_symmetric() == (symmetry == "sym")
            assert form.is_skew() == (symmetry == "skew")


def test_dual_action_examples():
    zero = [[[QQ.zero] * 2 for _ in range(2)]]
    assert dual_action(zero) == zero
    A = n2()
    lmats = A.left_matrices()
    dual = dual_action(lmats)
    # left multiplication by e1 sends e1 to e2; its dual sends e2* to e1*
    assert dual[0][0][1] == 1
    assert dual_action(dual) == lmats
    ident = [[[QQ.one, QQ.zero], [QQ.zero, QQ.one]]]
    assert dual_action(ident) == ident


def test_pair_product_examples():
    A = n2()
    r = Tensor2.from_triples(QQ, 2, [(0, 1, QQ.one)])  # e1 (x) e2
    out = pair_product(r, (1, 2), r, (1, 3), A.mult)
    assert out.sorted_items() == [((1, 1, 1), QQ.one)]  # e2 (x) e2 (x) e2
    zero = Tensor2.zeros(QQ, 2)
    for s1, s2 in (((1, 2), (1, 3)), ((2, 3), (1, 2)), ((1, 3), (2, 3))):
        assert pair_product(zero, s1, zero, s2, A.mult).is_zero()
    P = p2()
    sym = Tensor2.from_triples(QQ, 2, [(0, 1, QQ.one), (1, 0, QQ.one)])
    out = pair_product(sym, (2, 3), sym, (1, 2), P.succ)
    assert out.sorted_items() == [((1, 1, 1), Fraction(1, 2))]


def test_pair_product_slot_validation():
    r = Tensor2.zeros(QQ, 2)
    with pytest.raises(SlotError):
        pair_product(r, (1, 2), r, (1, 2), n2().mult)
    with pytest.raises(SlotError):
        pair_product(r, (2, 1), r, (1, 3), n2().mult)


def test_pair_product_matches_naive_oracle_all_patterns():
    rng = random.Random(11)
    patterns = [((1, 2), (1, 3)), ((1, 3), (1, 2)), ((1, 2), (2, 3)),
                ((2, 3), (1, 2)), ((1, 3), (2, 3)), ((2, 3), (1, 3))]
    for dim in (1, 2, 3, 4):
        for _ in range(12):
            r = rand_tensor2(GF3, dim, rng)
            s = rand_tensor2(GF3, dim, rng)
            table = [[[rand_scalar(GF3, rng) for _ in range(dim)]
                      for _ in range(dim)] for _ in range(dim)]
            for s1, s2 in patterns:
                assert pair_product(r, s1, s, s2, table) == \
                    naive_pair_product(r, s1, s, s2, table)


def test_orth_complement_examples():
    ident = BilinearForm(QQ, 2, [[QQ.one, QQ.zero], [QQ.zero, QQ.one]])
    out = orth_complement(ident, [])
    assert len(out.basis) == 2 and out.isotropic and not out.lagrangian
    out = orth_complement(ident, [[QQ.one, QQ.zero]])
    assert out.basis == [[QQ.zero, QQ.one]]
    assert not out.isotropic
    omega = omega_p_form(QQ, 2)
    w = [[QQ.one, QQ.zero, QQ.zero, QQ.zero], [QQ.zero, QQ.one, QQ.zero, QQ.zero]]
    out = orth_complement(omega, w)
    assert out.isotropic and out.lagrangian
    zero_sub = orth_complement(omega, [])
    assert zero_sub.isotropic and not zero_sub.lagrangian
