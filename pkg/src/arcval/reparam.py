"""Recognize ``gamma = alpha o h`` and construct the reparametrization ``h``."""

from __future__ import annotations

from dataclasses import dataclass

from .arcs import Arc, ArcError, is_trivial
from .blowup import lift_along
from .hne import HneResult, hne_expand
from .series import Series, comp_inverse, compose


class NotReparametrizationError(ArcError):
    """``gamma`` is not ``alpha o h``; carries the first witness found."""

    def __init__(self, message: str, *, step=None, component=None, index=None,
                 expected=None, got=None):
        super().__init__(message)
        self.step = step
        self.component = component
        self.index = index
        self.expected = expected
        self.got = got

    def witness(self) -> dict:
        if self.step is not None:
            return {"kind": "center", "step": self.step + 1}
        return {"kind": "kernel", "component": self.component, "order": self.index}


@dataclass(frozen=True)
class ReparamResult:
    h: Series
    N: int | None  # ord(h); None for the trivial arc
    verified_to: int
    trivial: bool = False


def _first_mismatch(a: Series, b: Series, limit: int):
    for j in range(limit):
        if a.coeffs[j] != b.coeffs[j]:
            return j
    return None


def solve_reparam(alpha: Arc, gamma: Arc, hne: HneResult | None = None,
                  check_to: int | None = None) -> ReparamResult:
    """Find ``h`` with ``gamma = alpha o h`` to the known precision.

    ``gamma`` is lifted through the centers of ``alpha`` up to the chart where
    ``alpha`` is nonsingular with ``x_pivot`` of order 1; there
    ``h = s o gamma_r[pivot]`` with ``s`` the compositional inverse of
    ``alpha_r[pivot]``.  Every component is then checked in the final chart
    and in the original one.  ``check_to`` caps the number of coefficients
    compared.

    The trivial ``gamma`` returns ``h = 0`` with ``trivial=True``.
    """
    if alpha.n != gamma.n or alpha.field != gamma.field:
        raise ArcError("alpha and gamma must share dimension and field")
    if is_trivial(gamma):
        return ReparamResult(Series.zero(gamma.precision, gamma.field), None, gamma.precision, True)
    hne = hne or hne_expand(alpha)
    lifted, step = lift_along(gamma, hne.charts)
    if lifted is None:
        raise NotReparametrizationError(
            f"centers diverge from alpha's at blowup {step + 1}", step=step
        )
    cap = check_to if check_to is not None else max(alpha.precision, gamma.precision)
    s = comp_inverse(hne.lifted[hne.pivot])
    h = compose(s, lifted[hne.pivot])

    verified = cap
    for i in hne.others:
        image = compose(hne.lifted[i], h)
        limit = min(image.precision, lifted.precision, cap)
        j = _first_mismatch(image, lifted[i], limit)
        if j is not None:
            raise NotReparametrizationError(
                f"x{i} - P_{i}(x{hne.pivot}) has order {j} along the lifted arc",
                component=i, index=j, expected=image.coeffs[j], got=lifted[i].coeffs[j],
            )
        verified = min(verified, limit)
    for i in range(1, alpha.n + 1):
        image = compose(alpha[i], h)
        limit = min(image.precision, gamma.precision, cap)
        j = _first_mismatch(image, gamma[i], limit)
        if j is not None:
            raise NotReparametrizationError(
                f"alpha o h differs from gamma in x{i} at t^{j}",
                component=i, index=j, expected=image.coeffs[j], got=gamma[i].coeffs[j],
            )
        verified = min(verified, limit)
    o = h.order()
    return ReparamResult(h, o.value if o.finite else None, verified)
