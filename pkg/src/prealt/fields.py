"""Exact scalars: arbitrary-precision rationals and odd prime fields.

Rational scalars are ``fractions.Fraction`` values (always stored reduced,
with positive denominator).  Prime-field scalars are :class:`FpElement`
residues normalized to ``[0, p)``.  Both kinds support ``+ - * /``, unary
minus, equality against ``int`` literals and truthiness (``bool(x)`` is
False exactly for the field zero), so all higher-level code is written
once against that common protocol.

Characteristic 2 is rejected outright: the linearized axiom suites used
everywhere in this package are only equivalent to the quadratic ones when
2 is invertible.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import BadCharacteristic, ParseError


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class FpElement:
    """Residue modulo an odd prime.  Immutable value object."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise ValueError(f"mixed moduli {self.p} and {other.p}")
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return other % self.p
        return None

    def __add__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FpElement(self.value + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FpElement(self.value - v, self.p)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FpElement(v - self.value, self.p)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FpElement(self.value * v, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        if v % self.p == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return FpElement(self.value * pow(v, -1, self.p), self.p)

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        if self.value == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return FpElement(v * pow(self.value, -1, self.p), self.p)

    def __neg__(self):
        return FpElement(-self.value, self.p)

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value}"


class FieldSpec:
    """Common interface of the two supported coefficient fields."""

    characteristic: int

    @property
    def zero(self):
        raise NotImplementedError

    @property
    def one(self):
        raise NotImplementedError

    def scalar(self, n: int):
        """Image of the integer ``n`` in the field."""
        raise NotImplementedError

    def ratio(self, num: int, den: int):
        """Exact quotient ``num/den``; `BadCharacteristic` if ``den`` dies."""
        raise NotImplementedError

    def parse(self, obj):
        """Decode one JSON-level scalar (string for Q, int for GF(p))."""
        raise NotImplementedError

    def encode(self, x):
        """JSON-level encoding of a scalar, inverse of :meth:`parse`."""
        raise NotImplementedError

    def contains(self, x) -> bool:
        raise NotImplementedError


class Rationals(FieldSpec):
    """The field of rational numbers, scalars are ``Fraction`` values."""

    characteristic = 0

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def scalar(self, n: int):
        return Fraction(n)

    def ratio(self, num: int, den: int):
        if den == 0:
            raise BadCharacteristic("zero denominator over the rationals")
        return Fraction(num, den)

    def parse(self, obj):
        if not isinstance(obj, str):
            raise ParseError(f"rational scalar must be a string, got {obj!r}")
        try:
            return Fraction(obj)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational literal {obj!r}") from exc

    def encode(self, x) -> str:
        return str(x)

    def contains(self, x) -> bool:
        return isinstance(x, Fraction)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class PrimeField(FieldSpec):
    """GF(p) for an odd prime p."""

    def __init__(self, p: int):
        if p == 2:
            raise BadCharacteristic("characteristic 2 is not supported")
        if not _is_prime(p):
            raise ParseError(f"{p} is not prime")
        self.p = p
        self.characteristic = p

    @property
    def zero(self):
        return FpElement(0, self.p)

    @property
    def one(self):
        return FpElement(1, self.p)

    def scalar(self, n: int):
        return FpElement(n, self.p)

    def ratio(self, num: int, den: int):
        if den % self.p == 0:
            raise BadCharacteristic(f"{den} is not invertible mod {self.p}")
        return FpElement(num, self.p) / den

    def parse(self, obj):
        if isinstance(obj, bool) or not isinstance(obj, int):
            raise ParseError(f"GF({self.p}) scalar must be an integer, got {obj!r}")
        if not 0 <= obj < self.p:
            raise ParseError(f"GF({self.p}) scalar {obj} out of range [0, {self.p})")
        return FpElement(obj, self.p)

    def encode(self, x) -> int:
        return x.value

    def contains(self, x) -> bool:
        return isinstance(x, FpElement) and x.p == self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


#: The rational field, shared instance.
QQ = Rationals()


def convert_scalar(x, src: FieldSpec, dst: FieldSpec):
    """Carry a scalar from ``src`` into ``dst``.

    Q -> GF(p) reduces numerator and denominator mod p; the denominator
    must stay invertible.  Identical fields pass through unchanged.
    """
    if src == dst:
        return x
    if isinstance(src, Rationals) and isinstance(dst, PrimeField):
        return dst.ratio(x.numerator, x.denominator)
    raise ParseError(f"cannot convert scalars from {src!r} to {dst!r}")
