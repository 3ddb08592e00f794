"""Built-in example algebras used throughout the tests and the CLI.

Entries are constructed over the rationals by default; pass a prime
field to get the exact mod-p reduction of the same structure constants.
"""

from __future__ import annotations

from .alternative import AlternativeAlgebra
from .errors import UnknownName
from .fields import QQ, FieldSpec
from .prealternative import PreAlternativeAlgebra

#: Oriented lines of the Fano plane fixing the octonion table below:
#: for each listed triple (i, j, k) and its cyclic rotations,
#: e_i o e_j = e_k, and reversing the order flips the sign.
FANO_TRIPLES = ((1, 2, 3), (1, 4, 5), (1, 7, 6), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 6, 5))


def zero_algebra(dim: int, field: FieldSpec = QQ) -> AlternativeAlgebra:
    """The zero product on ``dim`` generators."""
    return AlternativeAlgebra.zero(field, dim)


def n2(field: FieldSpec = QQ) -> AlternativeAlgebra:
    """Two-dimensional nilpotent algebra with the single product e1 o e1 = e2."""
    return AlternativeAlgebra.from_triples(field, 2, [(0, 0, 1, field.one)])


def p2(field: FieldSpec = QQ) -> PreAlternativeAlgebra:
    """Grading-weighted splitting of :func:`n2`:
    e1 < e1 = e1 > e1 = (1/2) e2."""
    half = field.ratio(1, 2)
    return PreAlternativeAlgebra.from_triples(
        field, 2, [(0, 0, 1, half)], [(0, 0, 1, half)]
    )


def p3_graded(field: FieldSpec = QQ) -> PreAlternativeAlgebra:
    """Splitting of the truncated polynomial-style algebra
    x1 o x1 = x2, x1 o x2 = x2 o x1 = x3 with degrees (1, 2, 3):
    x_i > x_j carries weight j/(i+j) and x_i < x_j weight i/(i+j)."""
    r = field.ratio
    labels = ["x1", "x2", "x3"]
    prec = [(0, 0, 1, r(1, 2)), (0, 1, 2, r(1, 3)), (1, 0, 2, r(2, 3))]
    succ = [(0, 0, 1, r(1, 2)), (0, 1, 2, r(2, 3)), (1, 0, 2, r(1, 3))]
    return PreAlternativeAlgebra.from_triples(field, 3, prec, succ, labels)


def octonion(field: FieldSpec = QQ) -> AlternativeAlgebra:
    """Octonions over the field: basis e0 (unit), e1..e7 with
    e_i o e_i = -e0 and the signed products read off :data:`FANO_TRIPLES`."""
    one = field.one
    triples = [(0, 0, 0, one)]
    for i in range(1, 8):
        triples.append((0, i, i, one))
        triples.append((i, 0, i, one))
        triples.append((i, i, 0, -one))
    for (i, j, k) in FANO_TRIPLES:
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            triples.append((a, b, c, one))
            triples.append((b, a, c, -one))
    return AlternativeAlgebra.from_triples(
        field, 8, triples, labels=[f"e{i}" for i in range(8)]
    )


def halved_idempotent(field: FieldSpec = QQ) -> PreAlternativeAlgebra:
    """Non-example: the idempotent line e o e = e split evenly,
    e < e = e > e = (1/2) e.  Fails the square-argument r-axiom."""
    half = field.ratio(1, 2)
    return PreAlternativeAlgebra.from_triples(field, 1, [(0, 0, 0, half)], [(0, 0, 0, half)])


def halved_field_negative(field: FieldSpec = QQ) -> PreAlternativeAlgebra:
    """Non-example: the line e o e = -e split evenly,
    e < e = e > e = -(1/2) e."""
    c = -field.ratio(1, 2)
    return PreAlternativeAlgebra.from_triples(field, 1, [(0, 0, 0, c)], [(0, 0, 0, c)])


def lookup(name: str, field: FieldSpec = QQ):
    """Catalog access by name; ``zero-<n>`` takes the dimension inline."""
    if name.startswith("zero-"):
        try:
            dim = int(name[len("zero-"):])
        except ValueError:
            raise UnknownName(f"bad catalog name {name!r}") from None
        if dim < 0:
            raise UnknownName(f"bad catalog name {name!r}")
        return zero_algebra(dim, field)
    builders = {
        "n2": n2,
        "p2": p2,
        "p3-graded": p3_graded,
        "octonion": octonion,
        "halved-idempotent": halved_idempotent,
        "halved-field-negative": halved_field_negative,
    }
    if name not in builders:
        raise UnknownName(f"unknown catalog name {name!r}")
    return builders[name](field)


CATALOG_NAMES = ("zero-n", "n2", "p2", "p3-graded", "octonion",
                 "halved-idempotent", "halved-field-negative")
