"""Lifting arcs through point blowups, chart by chart.

The blowup of the origin is never materialized.  A lift is recorded by the
chart it lands in (the pivot coordinate ``x_m`` of minimal order) and the
constants ``c_i`` that locate the new center on the exceptional divisor; in
the new chart the coordinates are ``x_m`` and ``x_i / x_m - c_i``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arcs import Arc, TrivialArcError, is_trivial
from .series import Series, unit_inverse


class PrecisionExhaustedError(ArithmeticError):
    def __init__(self, message: str, depth: int = 0):
        super().__init__(message)
        self.depth = depth


@dataclass(frozen=True)
class BlowupRecord:
    pivot: int  # 1-based
    pivot_order: int
    constants: dict  # i -> c_i for i != pivot, 1-based
    lifted: Arc

    @property
    def center(self) -> tuple:
        """Chart data identifying the new center: pivot plus sorted constants."""
        return (self.pivot, tuple(sorted(self.constants.items())))

    @property
    def precision(self) -> int:
        return self.lifted.precision


def select_pivot(arc: Arc) -> tuple[int, int] | None:
    """Lowest index among the coordinates of minimal finite order, with that order."""
    best = None
    for i, o in enumerate(arc.orders(), 1):
        if o.finite and (best is None or o.value < best[1]):
            best = (i, o.value)
    return best


def blowup_lift(arc: Arc) -> BlowupRecord:
    """Lift ``arc`` through the blowup of the origin.

    The lifted arc has precision ``N - e`` where ``e`` is the pivot order:
    dividing by ``gamma^*(x_m) = t^e u`` loses ``e`` coefficients.
    """
    if is_trivial(arc):
        raise TrivialArcError("blowup_lift")
    pivot = select_pivot(arc)
    if pivot is None:  # pragma: no cover - is_trivial catches this
        raise PrecisionExhaustedError("no coordinate has a known finite order")
    m, e = pivot
    new_prec = arc.precision - e
    if new_prec < 1:
        raise PrecisionExhaustedError(
            f"pivot order {e} consumes all {arc.precision} known coefficients"
        )
    unit_inv = unit_inverse(arc[m].shift_down(e))
    comps = []
    constants = {}
    for i in range(1, arc.n + 1):
        if i == m:
            comps.append(arc[m].truncate(new_prec))
            continue
        q = arc[i].shift_down(e) * unit_inv
        c = q.coeffs[0]
        constants[i] = c
        comps.append(q - c)
    return BlowupRecord(m, e, constants, Arc(tuple(comps)))


@dataclass(frozen=True)
class CenterSequence:
    """Chart records of successive lifts; ``exhausted`` marks an early stop."""

    steps: tuple[BlowupRecord, ...]
    exhausted: bool = False
    start: Arc | None = field(default=None, compare=False)

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def centers(self) -> list[tuple]:
        return [s.center for s in self.steps]

    @property
    def pivots(self) -> list[int]:
        return [s.pivot for s in self.steps]

    @property
    def final(self) -> Arc | None:
        return self.steps[-1].lifted if self.steps else self.start


def center_sequence(arc: Arc, r: int) -> CenterSequence:
    """Iterate :func:`blowup_lift` ``r`` times, stopping early when precision runs out."""
    if r < 0:
        raise ValueError("depth must be nonnegative")
    if r and is_trivial(arc):
        raise TrivialArcError("center_sequence")
    steps = []
    current = arc
    for _ in range(r):
        if is_trivial(current):
            # the pivot of a nontrivial arc vanished under truncation
            return CenterSequence(tuple(steps), True, arc)
        try:
            rec = blowup_lift(current)
        except PrecisionExhaustedError:
            return CenterSequence(tuple(steps), True, arc)
        steps.append(rec)
        current = rec.lifted
    return CenterSequence(tuple(steps), False, arc)


def first_divergence(a: CenterSequence, b: CenterSequence) -> int | None:
    """0-based index of the first step where the centers differ, over the common prefix."""
    for k, (x, y) in enumerate(zip(a.steps, b.steps)):
        if x.center != y.center:
            return k
    return None


def lift_along(arc: Arc, reference: CenterSequence, depth: int | None = None):
    """Lift ``arc`` through the first ``depth`` centers of ``reference``.

    Returns ``(lifted_arc, None)`` on success or ``(None, k)`` with the 0-based
    step ``k`` at which the arc leaves the reference sequence.  Raises
    :class:`PrecisionExhaustedError` if the arc runs out of precision first.
    """
    depth = len(reference) if depth is None else depth
    current = arc
    for k in range(depth):
        if is_trivial(current):
            raise PrecisionExhaustedError(f"arc vanished to precision at step {k}", k)
        try:
            rec = blowup_lift(current)
        except PrecisionExhaustedError as exc:
            if select_pivot(current)[0] != reference.steps[k].pivot:
                return None, k
            raise PrecisionExhaustedError(str(exc), k) from None
        if rec.center != reference.steps[k].center:
            return None, k
        current = rec.lifted
    return current, None
