"""Exact scalar arithmetic over the rationals and over prime fields.

Matrices in this package store raw values (``Fraction`` over the rationals,
``int`` residues over a prime field) tagged with a single field object per
matrix.  ``FieldScalar`` wraps one value together with its field for use at
API boundaries, where mixing fields must be rejected loudly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import FieldMismatchError, InputError

# Default prime for generic-point sampling; large enough that accidental
# rank drop is negligible at the matrix sizes this package handles.
DEFAULT_SAMPLING_PRIME = 32003


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class Field:
    """Common interface for the two concrete fields."""

    tag: str

    def normalize(self, value):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def scalar_to_json(self, a):
        raise NotImplementedError

    def scalar_from_json(self, obj):
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Field) and self.tag == other.tag

    def __hash__(self):
        return hash(self.tag)

    def __repr__(self):
        return self.tag


class RationalField(Field):
    """The field of rationals; values are ``fractions.Fraction``."""

    tag = "Q"

    def normalize(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            return Fraction(value)
        raise InputError(f"cannot coerce {value!r} into Q")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in Q")
        return 1 / a

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def scalar_to_json(self, a):
        if a.denominator == 1:
            return int(a)
        return f"{a.numerator}/{a.denominator}"

    def scalar_from_json(self, obj):
        if isinstance(obj, bool) or not isinstance(obj, (int, str)):
            raise InputError(f"bad rational entry {obj!r}")
        return self.normalize(obj)


class PrimeField(Field):
    """The prime field with ``p`` elements; values are residues in [0, p)."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise InputError(f"{p} is not prime")
        self.p = p
        self.tag = f"Fp:{p}"

    def normalize(self, value):
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, str):
            return int(value) % self.p
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise InputError(f"denominator of {value} vanishes mod {self.p}")
            return (value.numerator * pow(value.denominator, -1, self.p)) % self.p
        raise InputError(f"cannot coerce {value!r} into {self.tag}")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of zero in {self.tag}")
        return pow(a, self.p - 2, self.p)

    def zero(self):
        return 0

    def one(self):
        return 1

    def scalar_to_json(self, a):
        return a

    def scalar_from_json(self, obj):
        if isinstance(obj, bool) or not isinstance(obj, (int, str)):
            raise InputError(f"bad {self.tag} entry {obj!r}")
        return self.normalize(int(obj))


QQ = RationalField()
GF2 = PrimeField(2)
GF3 = PrimeField(3)


def field_from_tag(tag: str) -> Field:
    """Parse a field tag of the form ``"Q"`` or ``"Fp:<p>"``."""
    if tag == "Q":
        return QQ
    if tag.startswith("Fp:"):
        try:
            p = int(tag[3:])
        except ValueError as exc:
            raise InputError(f"bad field tag {tag!r}") from exc
        return PrimeField(p)
    raise InputError(f"unknown field tag {tag!r}")


@dataclass(frozen=True)
class FieldScalar:
    """One exact scalar tagged with the field it lives in."""

    field: Field
    value: object

    @staticmethod
    def of(field: Field, value) -> "FieldScalar":
        return FieldScalar(field, field.normalize(value))

    def _check(self, other: "FieldScalar"):
        if self.field != other.field:
            raise FieldMismatchError(
                f"cannot combine scalars over {self.field} and {other.field}"
            )

    def __add__(self, other):
        self._check(other)
        return FieldScalar(self.field, self.field.add(self.value, other.value))

    def __sub__(self, other):
        self._check(other)
        return FieldScalar(self.field, self.field.sub(self.value, other.value))

    def __mul__(self, other):
        self._check(other)
        return FieldScalar(self.field, self.field.mul(self.value, other.value))

    def __neg__(self):
        return FieldScalar(self.field, self.field.neg(self.value))

    def inverse(self) -> "FieldScalar":
        return FieldScalar(self.field, self.field.inv(self.value))

    def is_zero(self) -> bool:
        return self.value == self.field.zero()
