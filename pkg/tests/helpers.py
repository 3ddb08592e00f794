"""Shared test utilities: independent oracles and random generators.

The pair-product oracle below is a hand-expanded dense triple loop, one
explicit index formula per slot pattern, kept deliberately separate from
the positional rule the library implements.
"""

from __future__ import annotations

import random
from fractions import Fraction

from prealt.alternative import AlternativeAlgebra, check_alternative
from prealt.constructions import Grading, graded_split
from prealt.fields import FieldSpec, PrimeField, QQ
from prealt.prealternative import PreAlternativeAlgebra, check_prealternative
from prealt.tensors import Tensor2, Tensor3


def rand_scalar(field: FieldSpec, rng: random.Random):
    if field.characteristic:
        return field.scalar(rng.randrange(field.characteristic))
    return Fraction(rng.randint(-4, 4), rng.randint(1, 3))


def rand_tensor2(field: FieldSpec, dim: int, rng: random.Random,
                 symmetry: str | None = None) -> Tensor2:
    t = Tensor2.zeros(field, dim)
    if symmetry == "sym":
        for i in range(dim):
            for j in range(i, dim):
                c = rand_scalar(field, rng)
                t.a[i][j] = c
                t.a[j][i] = c
    elif symmetry == "skew":
        for i in range(dim):
            for j in range(i + 1, dim):
                c = rand_scalar(field, rng)
                t.a[i][j] = c
                t.a[j][i] = -c
    else:
        for i in range(dim):
            for j in range(dim):
                t.a[i][j] = rand_scalar(field, rng)
    return t


def rand_mult_table(field: FieldSpec, dim: int, rng: random.Random,
                    entries: int | None = None):
    table = [[[field.zero for _ in range(dim)] for _ in range(dim)] for _ in range(dim)]
    for _ in range(entries if entries is not None else rng.randrange(1, dim * dim + 1)):
        table[rng.randrange(dim)][rng.randrange(dim)][rng.randrange(dim)] = \
            rand_scalar(field, rng)
    return table


def rand_algebra(field: FieldSpec, dim: int, rng: random.Random) -> AlternativeAlgebra:
    """Arbitrary random algebra; not filtered for alternativity."""
    return AlternativeAlgebra(field, dim, [f"e{i + 1}" for i in range(dim)],
                              rand_mult_table(field, dim, rng))


def rand_alternative(field: FieldSpec, dim: int, rng: random.Random,
                     attempts: int = 200) -> AlternativeAlgebra:
    """Random algebra passing the alternativity gate (sparse rejection
    sampling, with graded fallbacks that are always associative)."""
    for _ in range(attempts):
        table = rand_mult_table(field, dim, rng, entries=rng.randrange(1, 4))
        alg = AlternativeAlgebra(field, dim, [f"e{i + 1}" for i in range(dim)], table)
        if check_alternative(alg).passed:
            return alg
    return rand_graded_algebra(field, dim, rng)


def rand_graded_algebra(field: FieldSpec, dim: int, rng: random.Random):
    """Random truncated graded algebra: products raise degree, top degree
    products vanish, hence two-step nilpotent and associative."""
    degrees = {1: [1], 2: [1, 2], 3: [1, 1, 2], 4: [1, 1, 1, 2]}[dim]
    alg = AlternativeAlgebra.zero(field, dim)
    top = [i for i, d in enumerate(degrees) if d == 2]
    low = [i for i, d in enumerate(degrees) if d == 1]
    for i in low:
        for j in low:
            for k in top:
                alg.mult[i][j][k] = rand_scalar(field, rng)
    return alg, degrees


def rand_valid_prealt(field: FieldSpec, dim: int, rng: random.Random) -> PreAlternativeAlgebra:
    """Random structure passing the pre-alternative gate."""
    choice = rng.randrange(4)
    if choice == 0:
        return PreAlternativeAlgebra.zero(field, dim)
    if choice == 1 and dim >= 2:
        alg, degrees = rand_graded_algebra(field, dim, rng)
        return graded_split(alg, Grading(degrees))
    for _ in range(60):
        prec = rand_mult_table(field, dim, rng, entries=rng.randrange(0, 3))
        succ = rand_mult_table(field, dim, rng, entries=rng.randrange(0, 3))
        cand = PreAlternativeAlgebra(field, dim, [f"e{i + 1}" for i in range(dim)],
                                     prec, succ)
        if check_prealternative(cand).passed:
            return cand
    alg, degrees = rand_graded_algebra(field, dim, rng)
    return graded_split(alg, Grading(degrees))


# ---------------------------------------------------------------------------
# hand-expanded dense oracle for the positional pair products


def naive_pair_product(r: Tensor2, slots_r, s: Tensor2, slots_s, table) -> Tensor3:
    """Triple-loop expansion with one explicit placement formula per slot
    pattern; independent of the library's positional rule."""
    n = r.dim
    field = r.field
    out = Tensor3.zeros(field, n)
    key = (tuple(slots_r), tuple(slots_s))
    for a1 in range(n):
        for b1 in range(n):
            cr = r.a[a1][b1]
            if not cr:
                continue
            for a2 in range(n):
                for b2 in range(n):
                    cs = s.a[a2][b2]
                    if not cs:
                        continue
                    coeff = cr * cs
                    if key == ((1, 2), (1, 3)):
                        for q in range(n):
                            out.add_term(q, b1, b2, coeff * table[a1][a2][q])
                    elif key == ((1, 3), (1, 2)):
                        for q in range(n):
                            out.add_term(q, b2, b1, coeff * table[a1][a2][q])
                    elif key == ((1, 2), (2, 3)):
                        for q in range(n):
                            out.add_term(a1, q, b2, coeff * table[b1][a2][q])
                    elif key == ((2, 3), (1, 2)):
                        for q in range(n):
                            out.add_term(a2, q, b1, coeff * table[a1][b2][q])
                    elif key == ((1, 3), (2, 3)):
                        for q in range(n):
                            out.add_term(a1, a2, q, coeff * table[b1][b2][q])
                    elif key == ((2, 3), (1, 3)):
                        for q in range(n):
                            out.add_term(a2, a1, q, coeff * table[b1][b2][q])
                    else:
                        raise AssertionError(f"no oracle formula for {key}")
    return out


#: the eighteen (first slots, second slots, product kind) patterns of the
#: six-equation system; kinds name which table to contract with.
PA_TERM_PATTERNS = [
    ((1, 2), (1, 3), "circ"), ((2, 3), (1, 2), "succ"), ((1, 3), (2, 3), "prec"),
    ((1, 3), (1, 2), "circ"), ((1, 2), (2, 3), "prec"), ((2, 3), (1, 3), "succ"),
    ((1, 2), (2, 3), "circ"), ((2, 3), (1, 3), "prec"), ((1, 3), (1, 2), "succ"),
    ((2, 3), (1, 2), "circ"), ((1, 3), (2, 3), "succ"), ((1, 2), (1, 3), "prec"),
    ((1, 3), (2, 3), "circ"), ((1, 2), (1, 3), "succ"), ((2, 3), (1, 2), "prec"),
    ((2, 3), (1, 3), "circ"), ((1, 3), (1, 2), "prec"), ((1, 2), (2, 3), "succ"),
]


def naive_pa_residuals(alg: PreAlternativeAlgebra, r: Tensor2):
    """The six residual tensors recomputed entirely through the naive
    oracle (independent of the library's pair products)."""
    n = alg.dim
    circ = [[alg.circ(i, j) for j in range(n)] for i in range(n)]
    tables = {"circ": circ, "prec": alg.prec, "succ": alg.succ}

    def term(s1, s2, kind):
        return naive_pair_product(r, s1, r, s2, tables[kind])

    groups = [PA_TERM_PATTERNS[i : i + 3] for i in range(0, 18, 3)]
    return [term(*g[0]) - term(*g[1]) - term(*g[2]) for g in groups]


def naive_aybe_residual(alg: AlternativeAlgebra, r: Tensor2, variant: str) -> Tensor3:
    term = lambda s1, s2: naive_pair_product(r, s1, r, s2, alg.mult)
    if variant == "A1":
        return term((2, 3), (1, 2)) - term((1, 2), (1, 3)) - term((1, 3), (2, 3))
    return term((1, 2), (2, 3)) - term((2, 3), (1, 3)) - term((1, 3), (1, 2))


GF3 = PrimeField(3)
GF5 = PrimeField(5)
