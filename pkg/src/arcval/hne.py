"""Hamburger-Noether desingularization of normalized arcs."""

from __future__ import annotations

from dataclasses import dataclass

from .arcs import Arc, ArcError, TrivialArcError, is_nonsingular, is_trivial, normalization_index
from .blowup import CenterSequence, PrecisionExhaustedError, blowup_lift, select_pivot
from .poly import Poly
from .series import Order, Series, comp_inverse, compose


class NotNormalizedError(ArcError):
    """The arc's orders share a common factor ``d > 1``; no nonsingular lift exists."""

    def __init__(self, index: int):
        super().__init__(
            f"arc is not normalized: its finite orders are all divisible by d = {index}"
        )
        self.index = index


@dataclass(frozen=True)
class HneResult:
    """Outcome of :func:`hne_expand`.

    ``lifted`` is the arc in the depth-``r`` chart, nonsingular with ``x_pivot``
    of order 1.  ``P[i]`` is the series with ``lifted[i] = P[i](lifted[pivot])``
    for every other coordinate ``i``; the coordinate ``x_pivot`` plays the
    role of ``x_1`` in the expansion.
    """

    source: Arc
    charts: CenterSequence
    lifted: Arc
    pivot: int
    P: dict
    iteration_orders: tuple[int, ...]

    @property
    def depth(self) -> int:
        return len(self.charts)

    @property
    def n(self) -> int:
        return self.lifted.n

    @property
    def field(self):
        return self.lifted.field

    @property
    def residual_precision(self) -> int:
        return self.lifted.precision

    @property
    def others(self) -> list[int]:
        return [i for i in range(1, self.n + 1) if i != self.pivot]

    @property
    def hne_coeffs(self) -> dict:
        """``c[i][j]`` = coefficient of ``t^j`` in ``P_i``; index 0 is always 0."""
        return {i: list(p.coeffs) for i, p in self.P.items()}

    def coeff(self, i: int, j: int):
        if j >= self.residual_precision:
            raise PrecisionExhaustedError(
                f"c_{{{i},{j}}} is beyond the residual precision {self.residual_precision}",
                self.depth,
            )
        return self.P[i].coeffs[j]

    def truncated_kernel_poly(self, i: int, q: int) -> Poly:
        """``x_i - sum_{j<q} c_{i,j} x_pivot^j`` (the ``z_i`` of the valuation ideal ``a_q``)."""
        coeffs = [self.coeff(i, j) for j in range(q)]
        poly = Poly.univariate(coeffs, self.pivot, self.n, self.field)
        return Poly.var(i, self.n, self.field) - poly


def hne_expand(arc: Arc) -> HneResult:
    """Blow up centers until the lift is nonsingular, then read off the ``P_i``.

    Each blowup keeps the minimal coordinate order or lowers it; a drop is an
    iteration and appends to ``iteration_orders``, which therefore strictly
    decreases and ends at 1.  In the final chart ``P_i`` is computed as
    ``lifted[i] o s`` where ``s`` inverts ``lifted[pivot]`` under composition.
    """
    if is_trivial(arc):
        raise TrivialArcError("hne_expand")
    d = normalization_index(arc)
    if d != 1:
        raise NotNormalizedError(d)
    current = arc
    steps = []
    orders = [select_pivot(arc)[1]]
    while not is_nonsingular(current):
        try:
            rec = blowup_lift(current)
        except PrecisionExhaustedError as exc:
            raise PrecisionExhaustedError(
                f"precision exhausted after {len(steps)} blowups before reaching a nonsingular lift ({exc})",
                len(steps),
            ) from None
        steps.append(rec)
        current = rec.lifted
        piv = select_pivot(current)
        if piv is None:
            raise PrecisionExhaustedError(
                f"lift vanished to precision after {len(steps)} blowups", len(steps)
            )
        if piv[1] < orders[-1]:
            orders.append(piv[1])
    pivot, _ = select_pivot(current)
    s = comp_inverse(current[pivot])
    P = {i: compose(current[i], s) for i in range(1, current.n + 1) if i != pivot}
    return HneResult(arc, CenterSequence(tuple(steps), False, arc), current, pivot, P, tuple(orders))


def _valuation_point(h: HneResult) -> list[Series]:
    prec = h.residual_precision
    return [
        Series.t(prec, h.field) if i == h.pivot else h.P[i]
        for i in range(1, h.n + 1)
    ]


def eval_valuation(h: HneResult, psi: Poly) -> Order:
    """``ord_t psi(..., t at x_pivot, P_i(t) at x_i, ...)`` in the depth-r chart."""
    if psi.nvars != h.n:
        raise ArcError(f"polynomial in {psi.nvars} variables, chart has {h.n} coordinates")
    return psi.substitute(_valuation_point(h)).order()


def kernel_generators(h: HneResult) -> list[tuple[int, Series]]:
    """The relations ``x_i - P_i(x_pivot)``, as ``(i, P_i)`` pairs."""
    return [(i, h.P[i]) for i in h.others]
