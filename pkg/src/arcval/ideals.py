"""Valuation ideals ``a_q``, jet ideals ``I_q``, and their membership tests.

All generators live in the depth-r chart of an :class:`~arcval.hne.HneResult`,
where ``x_pivot`` has order 1 along the reference arc.  Jet variables are
``x_{i,j}`` with ``j >= 1``; the ``j = 0`` variables are pinned to zero since
arcs are origin-centered.
"""

from __future__ import annotations

from functools import lru_cache

from .arcs import Arc, ArcError, ord_poly
from .blowup import PrecisionExhaustedError
from .hne import HneResult
from .poly import JetPoly, Poly
from .series import Series


@lru_cache(maxsize=None)
def _generic_power_coeff(var: int, j: int, m: int, field) -> JetPoly:
    """``[t^m] (x_{var,1} t + x_{var,2} t^2 + ...)^j`` as a jet polynomial."""
    if j == 0:
        return JetPoly.const(1 if m == 0 else 0, field)
    if m < j:
        return JetPoly.const(0, field)
    acc = JetPoly.const(0, field)
    for k in range(1, m - j + 2):
        acc = acc + JetPoly.var(var, k, field) * _generic_power_coeff(var, j - 1, m - k, field)
    return acc


def f_poly(h: HneResult, i: int, q: int) -> JetPoly:
    """``f_{i,q}``: the ``t^q`` coefficient of ``sum_{j<=q} c_{i,j} (X_1 t + X_2 t^2 + ...)^j``.

    ``X_k`` is the jet variable ``x_{pivot,k}``.
    """
    if i == h.pivot or i not in h.P:
        raise ArcError(f"f_{{i,q}} is defined for the non-pivot coordinates, not x{i}")
    if q < 1:
        raise ValueError("q must be positive")
    acc = JetPoly.const(0, h.field)
    for j in range(1, q + 1):
        c = h.coeff(i, j)
        if c:
            acc = acc + _generic_power_coeff(h.pivot, j, q, h.field) * c
    return acc


def aq_generators(h: HneResult, q: int) -> list[Poly]:
    """``x_pivot^q`` and ``z_i = x_i - sum_{j<q} c_{i,j} x_pivot^j``."""
    if q < 1:
        raise ValueError("q must be positive")
    gens = [Poly.var(h.pivot, h.n, h.field) ** q]
    gens += [h.truncated_kernel_poly(i, q) for i in h.others]
    return gens


def iq_generators(h: HneResult, q: int) -> list[JetPoly]:
    """``x_{i,j} - f_{i,j}(x_{pivot,1..j})`` for non-pivot ``i`` and ``1 <= j <= q-1``."""
    if q < 1:
        raise ValueError("q must be positive")
    return [
        JetPoly.var(i, j, h.field) - f_poly(h, i, j)
        for i in h.others
        for j in range(1, q)
    ]


def cont_membership(h: HneResult, beta: Arc, q: int) -> bool:
    """Whether ``ord_beta(a_q) >= q``, with ``beta`` in the same chart as ``h.lifted``."""
    if beta.n != h.n:
        raise ArcError(f"arc dimension {beta.n} does not match chart dimension {h.n}")
    if beta.precision < q:
        raise PrecisionExhaustedError(
            f"deciding order >= {q} needs precision {q}, arc has {beta.precision}"
        )
    return all(ord_poly(beta, g).at_least(q) for g in aq_generators(h, q))


def jet_point(arc: Arc) -> dict:
    """``x_{i,j} -> `` coefficient of ``t^j`` in ``arc[i]``, for ``1 <= j < N``."""
    return {
        (i, j): c
        for i, comp in enumerate(arc.components, 1)
        for j, c in enumerate(comp.coeffs)
        if j >= 1
    }


def vIq_membership(h: HneResult, point: dict, q: int) -> bool:
    """Whether the jet point lies on ``V(I_q)``."""
    return all(not g.evaluate(point) for g in iq_generators(h, q))


def valuation_ideal_contains(h: HneResult, f: Poly, q: int) -> bool:
    """Decide ``f in a_q`` for a polynomial ``f`` in the depth-r chart.

    Reduces ``f`` modulo the ``z_i`` to a polynomial ``g(x_pivot)`` and checks
    that ``x_pivot^q`` divides it (only ``g mod x_pivot^q`` is computed).
    """
    if q > h.residual_precision:
        raise PrecisionExhaustedError(f"a_{q} needs c_(i,j) for j < {q}", h.depth)
    point = [
        Series.t(q, h.field) if i == h.pivot else Series(h.P[i].coeffs[:q], h.field)
        for i in range(1, h.n + 1)
    ]
    return f.substitute(point).order().at_least(q)
