"""Exact base fields: the rationals and prime fields F_p."""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class FieldError(ValueError):
    """Raised on mixed fields or impossible scalar operations."""


def _integer_root(a: int, r: int) -> int | None:
    """Exact r-th root of a nonnegative integer, or None."""
    if a < 2:
        return a
    x = int(round(a ** (1.0 / r)))
    for cand in (x - 1, x, x + 1):
        if cand >= 0 and cand**r == a:
            return cand
    # float guess can be far off for huge a; fall back to bisection
    lo, hi = 0, 1 << (a.bit_length() // r + 1)
    while lo <= hi:
        mid = (lo + hi) // 2
        p = mid**r
        if p == a:
            return mid
        if p < a:
            lo = mid + 1
        else:
            hi = mid - 1
    return None


class Rationals:
    """The field Q, with elements stored as int or Fraction."""

    characteristic = 0
    name = "rational"

    def convert(self, value):
        if isinstance(value, ModP):
            raise FieldError("cannot convert a prime-field element to a rational")
        if isinstance(value, bool):
            return int(value)
        if isinstance(value, int):
            return value
        if isinstance(value, Fraction):
            return value.numerator if value.denominator == 1 else value
        if isinstance(value, str):
            return self.convert(Fraction(value.strip()))
        if isinstance(value, float):
            raise FieldError("floating-point coefficients are not supported")
        return self.convert(Fraction(value))

    def inv(self, value):
        if not value:
            raise ZeroDivisionError("inverse of zero")
        return Fraction(1, value) if isinstance(value, int) else 1 / value

    def root(self, value, r: int):
        """An r-th root of value in Q, or None if there is none."""
        value = Fraction(value)
        if value == 0:
            return 0
        sign = 1
        if value < 0:
            if r % 2 == 0:
                return None
            sign, value = -1, -value
        num = _integer_root(value.numerator, r)
        den = _integer_root(value.denominator, r)
        if num is None or den is None:
            return None
        return self.convert(sign * Fraction(num, den))

    def format(self, value) -> str:
        value = Fraction(value)
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """The prime field F_p."""

    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise FieldError(f"{p} is not prime")
        self.p = p

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def name(self) -> str:
        return f"prime:{self.p}"

    def convert(self, value) -> ModP:
        if isinstance(value, ModP):
            if value.p != self.p:
                raise FieldError(f"mixed fields: F_{value.p} and F_{self.p}")
            return value
        if isinstance(value, str):
            value = Fraction(value.strip())
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise FieldError(f"denominator of {value} vanishes mod {self.p}")
            return ModP(value.numerator * pow(value.denominator, -1, self.p), self.p)
        if isinstance(value, int):
            return ModP(value, self.p)
        raise FieldError(f"cannot convert {value!r} into F_{self.p}")

    def inv(self, value) -> ModP:
        return self.convert(value).inverse()

    def root(self, value, r: int):
        value = self.convert(value)
        if value.value == 0:
            return value
        g = gcd(r, self.p - 1)
        if g == 1:
            return ModP(pow(value.value, pow(r, -1, self.p - 1), self.p), self.p)
        for x in range(1, self.p):
            if pow(x, r, self.p) == value.value:
                return ModP(x, self.p)
        return None

    def format(self, value) -> str:
        return str(self.convert(value).value)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


class ModP:
    """An element of F_p. Interoperates with plain ints."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other) -> int:
        if isinstance(other, ModP):
            if other.p != self.p:
                raise FieldError(f"mixed fields: F_{self.p} and F_{other.p}")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(self.value * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return ModP(-self.value, self.p)

    def __pow__(self, k: int):
        return ModP(pow(self.value, k, self.p), self.p)

    def inverse(self) -> ModP:
        if self.value == 0:
            raise ZeroDivisionError("inverse of zero")
        return ModP(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * ModP(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(o, self.p) * self.inverse()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return (self.value - o) % self.p == 0

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value} mod {self.p}"


QQ = Rationals()


def field_from_name(name: str):
    """Parse ``"rational"`` or ``"prime:p"``."""
    if name == "rational":
        return QQ
    if name.startswith("prime:"):
        try:
            return PrimeField(int(name.split(":", 1)[1]))
        except ValueError as exc:
            raise FieldError(f"bad field descriptor {name!r}: {exc}") from None
    raise FieldError(f"unknown field {name!r}")
