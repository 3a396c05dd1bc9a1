"""Truncated formal power series in one variable ``t`` over an exact field.

A :class:`Series` of precision ``N`` stores the coefficients of
``t^0 .. t^(N-1)`` and means "known modulo ``t^N``".  Every operation returns
its result at the precision it can actually guarantee:

* ``a + b``, ``a * b``: ``min(N_a, N_b)``.
* ``compose(g, f)`` with ``e = ord(f) >= 1``: ``min(N_f, N_g * e)``.  Terms
  ``g_k f^k`` with ``k >= N_g`` are unknown and start at degree ``N_g * e``;
  the truncation error of ``f`` enters ``f^k`` at degree ``>= N_f``.  A zero
  ``f`` counts as ``e = N_f``.
* ``comp_inverse``, ``unit_inverse``, ``unit_root``: same precision as the input.

Results are truncated to the guarantee, never padded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .fields import QQ, FieldError


class SeriesError(ValueError):
    pass


@dataclass(frozen=True)
class Order:
    """Order in ``t``: ``Finite(m)`` or ``AtLeast(N)`` (all known coefficients vanish)."""

    value: int
    finite: bool = True

    @classmethod
    def at_least_bound(cls, bound: int) -> Order:
        return cls(bound, finite=False)

    def at_least(self, q: int) -> bool:
        """Whether the order is known to be ``>= q``."""
        return self.value >= q

    def __add__(self, other: Order) -> Order:
        return Order(self.value + other.value, self.finite and other.finite)

    def __str__(self) -> str:
        return f"Finite({self.value})" if self.finite else f"AtLeast({self.value})"


def Finite(m: int) -> Order:
    return Order(m, True)


def AtLeast(n: int) -> Order:
    return Order(n, False)


class Series:
    """Immutable truncated power series ``sum_j coeffs[j] t^j  mod t^precision``."""

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs, field=QQ, precision: int | None = None):
        coeffs = [field.convert(c) for c in coeffs]
        if precision is not None:
            if precision < 1:
                raise SeriesError("precision must be positive")
            coeffs = coeffs[:precision] + [field.convert(0)] * (precision - len(coeffs))
        if not coeffs:
            raise SeriesError("a series needs at least one known coefficient")
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "field", field)

    @classmethod
    def _raw(cls, coeffs, field) -> Series:
        s = object.__new__(cls)
        object.__setattr__(s, "coeffs", tuple(coeffs))
        object.__setattr__(s, "field", field)
        return s

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    def __reduce__(self):
        return (_rebuild_series, (self.coeffs, self.field))

    # constructors

    @classmethod
    def zero(cls, precision: int, field=QQ) -> Series:
        return cls._raw([field.convert(0)] * precision, field)

    @classmethod
    def one(cls, precision: int, field=QQ) -> Series:
        return cls.monomial(0, precision, field=field)

    @classmethod
    def t(cls, precision: int, field=QQ) -> Series:
        return cls.monomial(1, precision, field=field)

    @classmethod
    def monomial(cls, k: int, precision: int, coeff=1, field=QQ) -> Series:
        c = [field.convert(0)] * precision
        if k < precision:
            c[k] = field.convert(coeff)
        return cls._raw(c, field)

    @classmethod
    def from_dict(cls, terms: dict[int, object], precision: int, field=QQ) -> Series:
        c = [field.convert(0)] * precision
        for k, v in terms.items():
            if k < precision:
                c[k] = c[k] + field.convert(v)
        return cls._raw(c, field)

    # basic accessors

    @property
    def precision(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, j: int):
        return self.coeffs[j]

    def __len__(self) -> int:
        return len(self.coeffs)

    def order(self) -> Order:
        for j, c in enumerate(self.coeffs):
            if c:
                return Finite(j)
        return AtLeast(len(self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def truncate(self, precision: int) -> Series:
        if precision > self.precision:
            raise SeriesError(f"cannot raise precision {self.precision} to {precision}")
        return Series._raw(self.coeffs[:precision], self.field)

    def shift_down(self, k: int) -> Series:
        """Divide by ``t^k``; the dropped coefficients must vanish."""
        if any(self.coeffs[:k]):
            raise SeriesError(f"series is not divisible by t^{k}")
        if k >= self.precision:
            raise SeriesError("division by t^k exhausts the precision")
        return Series._raw(self.coeffs[k:], self.field)

    def leading(self):
        o = self.order()
        return self.coeffs[o.value] if o.finite else None

    # ring structure

    def _check(self, other: Series) -> None:
        if self.field != other.field:
            raise FieldError(f"mixed base fields: {self.field!r} and {other.field!r}")

    def __add__(self, other):
        if not isinstance(other, Series):
            return self + Series.monomial(0, self.precision, other, self.field)
        self._check(other)
        return Series._raw([a + b for a, b in zip(self.coeffs, other.coeffs)], self.field)

    __radd__ = __add__

    def __neg__(self):
        return Series._raw([-a for a in self.coeffs], self.field)

    def __sub__(self, other):
        if not isinstance(other, Series):
            return self + (-self.field.convert(other))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Series):
            c = self.field.convert(other)
            return Series._raw([c * a for a in self.coeffs], self.field)
        self._check(other)
        n = min(self.precision, other.precision)
        zero = self.field.convert(0)
        out = [zero] * n
        bnz = [(j, b) for j, b in enumerate(other.coeffs[:n]) if b]
        for i, a in enumerate(self.coeffs[:n]):
            if not a:
                continue
            lim = n - i
            for j, b in bnz:
                if j >= lim:
                    break
                out[i + j] = out[i + j] + a * b
        return Series._raw(out, self.field)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Series:
        if k < 0:
            return unit_inverse(self) ** (-k)
        result = Series.one(self.precision, self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.field))

    def __repr__(self):
        return f"Series({self.format()}, N={self.precision})"

    def format(self, var: str = "t") -> str:
        parts = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            s = self.field.format(c)
            mono = "" if j == 0 else (var if j == 1 else f"{var}^{j}")
            if not mono:
                parts.append(s)
            elif s == "1":
                parts.append(mono)
            elif s == "-1":
                parts.append("-" + mono)
            else:
                parts.append(f"{s}*{mono}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"


def _rebuild_series(coeffs, field) -> Series:
    return Series._raw(coeffs, field)


def ord(s: Series) -> Order:  # noqa: A001 - mirrors the mathematical name
    return s.order()


def add(a: Series, b: Series) -> Series:
    return a + b


def mul(a: Series, b: Series) -> Series:
    return a * b


def scale(c, a: Series) -> Series:
    return a * c


def compose(g: Series, f: Series) -> Series:
    """``g(f(t))`` at precision ``min(N_f, N_g * ord(f))``."""
    g._check(f)
    o = f.order()
    if o.finite and o.value == 0:
        raise SeriesError("composition requires positive order")
    prec = min(f.precision, g.precision * o.value)
    f = f.truncate(prec)
    # Horner: g_0 + f (g_1 + f (g_2 + ...)); only g_k with k*e < prec matter
    kmax = min(g.precision, (prec - 1) // o.value + 1)
    acc = Series.monomial(0, prec, g.coeffs[kmax - 1], g.field)
    for k in range(kmax - 2, -1, -1):
        acc = acc * f + g.coeffs[k]
    return acc


def comp_inverse(f: Series) -> Series:
    """Compositional inverse ``s`` of an order-1 series: ``s(f(t)) = f(s(t)) = t``.

    Solves for the coefficients of ``t = sum_j a_j f^j`` one degree at a time:
    the ``t^d`` coefficient is ``a_d b_1^d + Q_d(a_1..a_{d-1}, b)`` and ``b_1``
    is invertible.
    """
    o = f.order()
    if not (o.finite and o.value == 1):
        raise SeriesError(f"no compositional inverse at this order ({o})")
    n = f.precision
    field = f.field
    zero = field.convert(0)
    b1 = f.coeffs[1]
    a = [zero] * n
    a[1] = field.inv(b1)
    # acc = sum_{j<d} a_j f^j, powers[j] = f^j, both mod t^n
    power = f
    acc = f * a[1]
    b1_power = b1
    for d in range(2, n):
        power = power * f
        b1_power = b1_power * b1
        # coefficient of t^d in acc must be cancelled by a_d f^d, whose t^d coefficient is b1^d
        a[d] = -acc.coeffs[d] * field.inv(b1_power)
        acc = acc + power * a[d]
    return Series._raw(a, field)


def unit_inverse(u: Series) -> Series:
    """Multiplicative inverse of a unit (nonzero constant term)."""
    if not u.coeffs[0]:
        raise SeriesError("not a unit")
    field = u.field
    n = u.precision
    inv0 = field.inv(u.coeffs[0])
    w = [inv0] + [field.convert(0)] * (n - 1)
    for k in range(1, n):
        s = field.convert(0)
        for j in range(1, k + 1):
            if u.coeffs[j]:
                s = s + u.coeffs[j] * w[k - j]
        w[k] = -s * inv0
    return Series._raw(w, field)


def _binomial_root_coeffs(r: int, count: int) -> list[Fraction]:
    """``binom(1/r, i)`` for ``0 <= i < count``."""
    e = Fraction(1, r)
    out = [Fraction(1)]
    for i in range(1, count):
        out.append(out[-1] * (e - (i - 1)) / i)
    return out


def unit_root(u: Series, r: int) -> Series:
    """A unit ``v`` with ``v^r = u``, via ``u_0^(1/r) (1 + u_1)^(1/r)`` and the binomial series.

    The binomial coefficients ``binom(1/r, i)`` only have primes dividing ``r``
    in their denominators, so in ``F_p`` with ``p`` not dividing ``r`` they
    reduce to well-defined field elements.
    """
    if r < 1:
        raise SeriesError("root index must be a positive integer")
    if not u.coeffs[0]:
        raise SeriesError("not a unit")
    field = u.field
    p = field.characteristic
    if p and r % p == 0:
        raise SeriesError(f"cannot take {r}-th roots in characteristic {p}")
    u0 = u.coeffs[0]
    root0 = field.root(u0, r)
    if root0 is None:
        raise UnitRootError(u0, r)
    if r == 1:
        return u
    n = u.precision
    u1 = u * field.inv(u0) - 1
    binoms = _binomial_root_coeffs(r, n)
    # Horner in u1 (ord u1 >= 1, so only n terms matter)
    acc = Series.monomial(0, n, binoms[n - 1], field)
    for i in range(n - 2, -1, -1):
        acc = acc * u1 + field.convert(binoms[i])
    return acc * root0


class UnitRootError(SeriesError):
    def __init__(self, leading, r: int):
        super().__init__(f"leading coefficient {leading} has no {r}-th root in the base field")
        self.leading = leading
        self.r = r
