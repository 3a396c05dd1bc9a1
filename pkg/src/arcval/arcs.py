"""Arcs on affine n-space centered at the origin, and orders of vanishing along them."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .fields import QQ, FieldError
from .poly import Poly
from .series import Order, Series, compose


class ArcError(ValueError):
    pass


class TrivialArcError(ArcError):
    def __init__(self, what: str = "operation"):
        super().__init__(f"{what} is undefined on the trivial arc")


@dataclass(frozen=True)
class Arc:
    """``n`` component series ``(gamma^*(x_1), ..., gamma^*(x_n))`` at a common precision."""

    components: tuple[Series, ...]

    def __post_init__(self):
        comps = tuple(self.components)
        if len(comps) < 2:
            raise ArcError("arcs need ambient dimension n >= 2")
        fields = {c.field for c in comps}
        if len(fields) != 1:
            raise FieldError("arc components live in different fields")
        prec = min(c.precision for c in comps)
        comps = tuple(c.truncate(prec) for c in comps)
        for i, c in enumerate(comps, 1):
            if c.coeffs[0]:
                raise ArcError(f"component x{i} has nonzero constant term; arcs must be origin-centered")
        object.__setattr__(self, "components", comps)

    @classmethod
    def from_coeffs(cls, rows, precision: int, field=QQ) -> Arc:
        """Build from per-component coefficient lists starting at ``t^1``."""
        rows = [list(r) for r in rows]
        for i, r in enumerate(rows, 1):
            if len(r) > precision - 1:
                raise ArcError(f"component x{i} lists {len(r)} coefficients; at most {precision - 1} fit")
        return cls(tuple(Series([0] + r, field, precision=precision) for r in rows))

    @classmethod
    def from_terms(cls, terms, precision: int, field=QQ) -> Arc:
        """Build from ``{exponent: coeff}`` dicts, one per component."""
        return cls(tuple(Series.from_dict(d, precision, field) for d in terms))

    @property
    def n(self) -> int:
        return len(self.components)

    @property
    def precision(self) -> int:
        return self.components[0].precision

    @property
    def field(self):
        return self.components[0].field

    def __getitem__(self, i: int) -> Series:
        """Component ``gamma^*(x_i)``, 1-based."""
        return self.components[i - 1]

    def orders(self) -> list[Order]:
        return [c.order() for c in self.components]

    def truncate(self, precision: int) -> Arc:
        return Arc(tuple(c.truncate(precision) for c in self.components))

    def reparametrize(self, h: Series) -> Arc:
        """``alpha o h``: compose every component with ``h``."""
        return Arc(tuple(compose(c, h) for c in self.components))

    def coefficient_table(self) -> list[list]:
        """Coefficients of ``t^1 .. t^(N-1)`` for each component."""
        return [list(c.coeffs[1:]) for c in self.components]

    def __str__(self):
        return "(" + ", ".join(c.format() for c in self.components) + f"; N={self.precision})"


def ord_poly(arc: Arc, psi: Poly) -> Order:
    """``ord_t psi(gamma^*(x_1), ..., gamma^*(x_n))``."""
    if psi.nvars != arc.n:
        raise ArcError(f"polynomial in {psi.nvars} variables, arc in dimension {arc.n}")
    if psi.field != arc.field:
        raise FieldError("polynomial and arc live in different fields")
    return psi.substitute(list(arc.components)).order()


def ord_ideal(arc: Arc, gens) -> Order:
    """Order of the ideal generated by ``gens``: the minimum over the generators."""
    gens = list(gens)
    if not gens:
        raise ArcError("ord of an ideal needs a nonempty generator list")
    return min((ord_poly(arc, g) for g in gens), key=lambda o: (o.value, not o.finite))


def is_trivial(arc: Arc) -> bool:
    """All components vanish to the known precision (truncation-limited)."""
    return all(c.is_zero() for c in arc.components)


def is_nonsingular(arc: Arc) -> bool:
    return any(o.finite and o.value == 1 for o in arc.orders())


@dataclass(frozen=True)
class SemigroupWitness:
    """Realized orders of the subalgebra generated by an arc, below the precision bound."""

    index: int
    orders: tuple[int, ...]
    bound: int


def realized_orders(arc: Arc) -> SemigroupWitness:
    """Order-semigroup closure of the components.

    Keeps one representative series per realized order.  New elements (the
    components, then every pairwise product of representatives) are reduced
    by leading-term cancellation against existing representatives until they
    vanish modulo ``t^N`` or reach an unclaimed order, which they then claim.
    At the fixpoint the representatives form a triangular basis of the
    subalgebra's maximal ideal modulo ``t^N``, so their orders are exactly the
    realized finite orders below ``N``.
    """
    if is_trivial(arc):
        raise TrivialArcError("normalization_index")
    field = arc.field
    bound = arc.precision
    reps: dict[int, Series] = {}

    def reduce(s: Series):
        while True:
            o = s.order()
            if not o.finite:
                return None
            rep = reps.get(o.value)
            if rep is None:
                return s
            s = s - rep * (s.coeffs[o.value] * field.inv(rep.coeffs[o.value]))

    pending = [c for c in arc.components]
    done_pairs: set[tuple[int, int]] = set()
    while pending:
        for s in pending:
            r = reduce(s)
            if r is not None:
                reps[r.order().value] = r
        pending = []
        keys = sorted(reps)
        for a in keys:
            for b in keys:
                if b < a or (a, b) in done_pairs:
                    continue
                done_pairs.add((a, b))
                if a + b < bound:
                    pending.append(reps[a] * reps[b])
    orders = tuple(sorted(reps))
    d = 0
    for o in orders:
        d = gcd(d, o)
    return SemigroupWitness(d, orders, bound)


def normalization_index(arc: Arc) -> int:
    """gcd of the finite positive orders realized along the arc (1 means normalized).

    Orders at or above the precision are invisible, so the value certifies
    only the gcd of the witnessed orders (see :func:`realized_orders`).
    """
    return realized_orders(arc).index
