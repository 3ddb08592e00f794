import random
from fractions import Fraction

import pytest

from helpers import GF3, rand_scalar
from prealt.errors import SingularMap
from prealt.fields import QQ
from prealt.linalg import (
    LinearMap,
    identity_matrix,
    in_span,
    inverse,
    mat_mul,
    nullspace,
    rank,
    row_space,
    rref,
    solve,
    solve_unique,
)


def _rand_matrix(field, rows, cols, rng):
    return [[rand_scalar(field, rng) for _ in range(cols)] for _ in range(rows)]


def test_inverse_roundtrip_over_q_and_gf3():
    rng = random.Random(3)
    for field in (QQ, GF3):
        done = 0
        while done < 10:
            m = _rand_matrix(field, 3, 3, rng)
            if rank(field, m) < 3:
                continue
            inv = inverse(field, m)
            assert mat_mul(field, m, inv) == identity_matrix(field, 3)
            done += 1


def test_inverse_singular_raises():
    with pytest.raises(SingularMap):
        inverse(QQ, [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]])


def test_solve_and_nullspace_consistency():
    rng = random.Random(5)
    for field in (QQ, GF3):
        for _ in range(20):
            a = _rand_matrix(field, 3, 4, rng)
            x = [rand_scalar(field, rng) for _ in range(4)]
            b = [sum((c * v for c, v in zip(row, x)), field.zero) for row in a]
            got = solve(field, a, b)
            assert got is not None
            back = [sum((c * v for c, v in zip(row, got)), field.zero) for row in a]
            assert back == b
            for k in nullspace(field, a):
                img = [sum((c * v for c, v in zip(row, k)), field.zero) for row in a]
                assert not any(img)
            assert rank(field, a) + len(nullspace(field, a)) == 4


def test_solve_unique_requires_full_column_rank():
    a = [[Fraction(1), Fraction(1)], [Fraction(2), Fraction(2)]]
    with pytest.raises(SingularMap):
        solve_unique(QQ, a, [Fraction(1), Fraction(2)])


def test_rref_pivot_determinism():
    a = [[Fraction(0), Fraction(2)], [Fraction(3), Fraction(1)]]
    rows1, piv1 = rref(QQ, a)
    rows2, piv2 = rref(QQ, [list(r) for r in a])
    assert rows1 == rows2 and piv1 == piv2 == [0, 1]


def test_row_space_and_span_membership():
    basis = [[Fraction(1), Fraction(0), Fraction(1)], [Fraction(0), Fraction(1), Fraction(1)]]
    assert in_span(QQ, basis, [Fraction(1), Fraction(1), Fraction(2)])
    assert not in_span(QQ, basis, [Fraction(0), Fraction(0), Fraction(1)])
    assert row_space(QQ, basis) == row_space(QQ, list(reversed(basis)))


def test_linear_map_dual_and_compose():
    f = LinearMap.from_matrix(QQ, [[Fraction(1), Fraction(2)], [Fraction(0), Fraction(1)]])
    g = f.inverse()
    assert f.compose(g).entries == identity_matrix(QQ, 2)
    assert f.dual().entries == [[Fraction(1), Fraction(0)], [Fraction(2), Fraction(1)]]
    assert f.is_bijective()
