"""Sparse exact polynomials.

:class:`Poly` lives in the coordinate ring ``k[x_1..x_n]`` (exponent vectors);
:class:`JetPoly` lives in the jet ring ``k[x_{i,j}]`` (variables keyed by
``(i, j)``).  Both store only nonzero coefficients.
"""

from __future__ import annotations

import ast
import re
from fractions import Fraction

from .fields import QQ, FieldError
from .series import Series


class PolyError(ValueError):
    pass


class PolyParseError(PolyError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at column {position})")
        self.position = position


class _SparsePoly:
    __slots__ = ("terms", "field")

    def __init__(self, terms, field=QQ):
        clean = {}
        for mono, c in dict(terms).items():
            c = field.convert(c)
            if c:
                clean[mono] = clean.get(mono, 0) + c
        self.terms = {m: c for m, c in clean.items() if c}
        self.field = field

    def _new(self, terms):
        out = object.__new__(type(self))
        out.terms = {m: c for m, c in terms.items() if c}
        out.field = self.field
        self._copy_shape(out)
        return out

    def _copy_shape(self, out):
        pass

    def _coerce(self, other):
        if isinstance(other, type(self)):
            if other.field != self.field:
                raise FieldError("mixed base fields in polynomial arithmetic")
            return other
        return self._constant(self.field.convert(other))

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return self._new(terms)

    __radd__ = __add__

    def __neg__(self):
        return self._new({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        terms: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = self._mono_mul(m1, m2)
                terms[m] = terms.get(m, 0) + c1 * c2
        return self._new(terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise PolyError("negative powers are not polynomials")
        result = self._constant(self.field.convert(1))
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, type(self)):
            return self.terms == other.terms and self.field == other.field
        if isinstance(other, (int, Fraction)):
            return self == self._constant(self.field.convert(other))
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        return f"{type(self).__name__}({self})"


class Poly(_SparsePoly):
    """Polynomial in ``x_1..x_n``; monomials are exponent tuples of length ``n``."""

    __slots__ = ("nvars",)

    def __init__(self, terms, nvars: int, field=QQ):
        for mono in dict(terms):
            if len(mono) != nvars or any(e < 0 for e in mono):
                raise PolyError(f"bad exponent vector {mono} for {nvars} variables")
        self.nvars = nvars
        super().__init__(terms, field)

    def _copy_shape(self, out):
        out.nvars = self.nvars

    def _coerce(self, other):
        other = super()._coerce(other)
        if other.nvars != self.nvars:
            raise PolyError(f"variable-count mismatch: {self.nvars} vs {other.nvars}")
        return other

    def _constant(self, c):
        return self._new({(0,) * self.nvars: c})

    @staticmethod
    def _mono_mul(a, b):
        return tuple(x + y for x, y in zip(a, b))

    @classmethod
    def var(cls, i: int, nvars: int, field=QQ) -> Poly:
        """The coordinate ``x_i`` (1-based)."""
        if not 1 <= i <= nvars:
            raise PolyError(f"x{i} is not a variable of k[x1..x{nvars}]")
        mono = tuple(1 if k == i - 1 else 0 for k in range(nvars))
        return cls({mono: 1}, nvars, field)

    @classmethod
    def const(cls, c, nvars: int, field=QQ) -> Poly:
        return cls({(0,) * nvars: c}, nvars, field)

    @classmethod
    def univariate(cls, coeffs, i: int, nvars: int, field=QQ) -> Poly:
        """``sum_j coeffs[j] x_i^j``."""
        terms = {}
        for j, c in enumerate(coeffs):
            mono = tuple(j if k == i - 1 else 0 for k in range(nvars))
            terms[mono] = c
        return cls(terms, nvars, field)

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def substitute(self, values, one=None):
        """Evaluate at ``values[k]`` for ``x_{k+1}``; works for scalars or Series."""
        if len(values) != self.nvars:
            raise PolyError(f"expected {self.nvars} values, got {len(values)}")
        if one is None:
            one = _one_like(values, self.field)
        cache: dict = {}

        def power(k, e):
            key = (k, e)
            if key not in cache:
                cache[key] = values[k] if e == 1 else power(k, e - 1) * values[k]
            return cache[key]

        acc = one * 0
        for mono, c in self.terms.items():
            term = one * c
            for k, e in enumerate(mono):
                if e:
                    term = term * power(k, e)
            acc = acc + term
        return acc

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, key=lambda m: (-sum(m), tuple(-e for e in m))):
            c = self.terms[mono]
            vars_ = "*".join(
                f"x{k + 1}" if e == 1 else f"x{k + 1}^{e}" for k, e in enumerate(mono) if e
            )
            parts.append(_format_term(self.field.format(c), vars_))
        return " + ".join(parts).replace("+ -", "- ")


class JetPoly(_SparsePoly):
    """Polynomial in jet variables ``x_{i,j}``; monomials are sorted ``((i, j), e)`` tuples."""

    __slots__ = ()

    def _constant(self, c):
        return self._new({(): c})

    @staticmethod
    def _mono_mul(a, b):
        d = dict(a)
        for v, e in b:
            d[v] = d.get(v, 0) + e
        return tuple(sorted(d.items()))

    @classmethod
    def var(cls, i: int, j: int, field=QQ) -> JetPoly:
        return cls({(((i, j), 1),): 1}, field)

    @classmethod
    def const(cls, c, field=QQ) -> JetPoly:
        return cls({(): c}, field)

    def variables(self) -> set:
        return {v for mono in self.terms for v, _ in mono}

    def evaluate(self, point):
        """Evaluate at a mapping ``(i, j) -> scalar``."""
        missing = self.variables() - set(point)
        if missing:
            raise PolyError(f"missing jet variable assignments: {sorted(missing)}")
        acc = self.field.convert(0)
        for mono, c in self.terms.items():
            term = c
            for v, e in mono:
                term = term * self.field.convert(point[v]) ** e
            acc = acc + term
        return acc

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, key=lambda m: (-sum(e for _, e in m), m)):
            vars_ = "*".join(
                f"x{i}_{j}" if e == 1 else f"x{i}_{j}^{e}" for (i, j), e in mono
            )
            parts.append(_format_term(self.field.format(self.terms[mono]), vars_))
        return " + ".join(parts).replace("+ -", "- ")


def _format_term(coeff: str, vars_: str) -> str:
    if not vars_:
        return coeff
    if coeff == "1":
        return vars_
    if coeff == "-1":
        return "-" + vars_
    return f"{coeff}*{vars_}"


def _one_like(values, field):
    for v in values:
        if isinstance(v, Series):
            return Series.one(min(s.precision for s in values if isinstance(s, Series)), v.field)
    return field.convert(1)


_VAR = re.compile(r"x(\d+)$")


def parse_poly(text: str, nvars: int, field=QQ) -> Poly:
    """Parse an expression like ``"x1^3 - 2*x2^2 + 1/2"`` into a :class:`Poly`.

    Accepts ``+ - *``, integer powers via ``^`` or ``**``, integer or rational
    constants, parentheses, and division by constants.  Errors carry the
    column where parsing failed.
    """
    src = text.replace("^", "**")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise PolyParseError(f"syntax error in {text!r}", exc.offset or 0) from None

    def walk(node):
        col = getattr(node, "col_offset", 0)
        if isinstance(node, ast.Constant):
            if isinstance(node.value, bool) or not isinstance(node.value, int):
                raise PolyParseError(f"unsupported constant {node.value!r}", col)
            return Poly.const(node.value, nvars, field)
        if isinstance(node, ast.Name):
            m = _VAR.match(node.id)
            if not m:
                raise PolyParseError(f"unknown name {node.id!r}", col)
            i = int(m.group(1))
            if not 1 <= i <= nvars:
                raise PolyParseError(f"variable {node.id} outside x1..x{nvars}", col)
            return Poly.var(i, nvars, field)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            val = walk(node.operand)
            return -val if isinstance(node.op, ast.USub) else val
        if isinstance(node, ast.BinOp) and isinstance(node.op, ast.Pow):
            k = node.right
            if not (isinstance(k, ast.Constant) and type(k.value) is int and k.value >= 0):
                raise PolyParseError("exponent must be a nonnegative integer literal", col)
            return walk(node.left) ** k.value
        if isinstance(node, ast.BinOp):
            left, right = walk(node.left), walk(node.right)
            if isinstance(node.op, ast.Add):
                return left + right
            if isinstance(node.op, ast.Sub):
                return left - right
            if isinstance(node.op, ast.Mult):
                return left * right
            if isinstance(node.op, ast.Div):
                k = _as_constant(right)
                if k is None or k == 0:
                    raise PolyParseError("can only divide by a nonzero constant", col)
                return left * field.inv(k)
        raise PolyParseError(f"unsupported syntax {type(node).__name__}", col)

    return walk(tree.body)


def _as_constant(p: Poly):
    if not p.terms:
        return 0
    if len(p.terms) == 1:
        (mono, c), = p.terms.items()
        if not any(mono):
            return c
    return None
