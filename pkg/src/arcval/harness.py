"""Exhaustive desk-scale check that the arc sets attached to a normalized arc coincide.

For a reference arc ``alpha`` every enumerated arc ``beta`` is tested for

* ``in_C``   - its center sequence agrees with ``alpha``'s on every step
  decidable at the known precision;
* ``in_Cpp`` - ``beta`` lies in ``Cont^{>=q}(a_q)`` for every ``q`` up to the
  decision threshold (membership is monotone in ``q``, so the threshold level
  implies the lower ones; levels ``q <= q_max`` are also reported);
* ``in_Y``   - ``beta`` kills the kernel relations ``x_i - P_i(x_pivot)`` to the
  threshold;
* ``in_R``   - ``beta = alpha o h`` for a computed ``h``;
* ``in_Cv``  - ``in_R`` with ``ord(h) = 1``; these arcs have exactly the
  valuation of ``alpha``, so they form a subset of the common set.

For a singular ``alpha`` (HNE depth ``r > 0``) the ideal-based tests run in
the depth-``r`` chart after lifting ``beta`` through ``alpha``'s first ``r``
centers; an arc that leaves those centers is outside all of the sets.
The threshold is ``min(precision of lifted beta, residual precision of
alpha)``: the largest ``q`` for which ``a_q`` is known and ``ord >= q`` is
decidable along ``beta``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .arcs import Arc, ArcError, is_trivial
from .blowup import (
    CenterSequence,
    PrecisionExhaustedError,
    blowup_lift,
    center_sequence,
    lift_along,
)
from .fields import QQ
from .hne import HneResult, eval_valuation, hne_expand
from .ideals import cont_membership, jet_point, vIq_membership
from .poly import Poly
from .reparam import NotReparametrizationError, solve_reparam
from .series import compose


class EnumerationTooLargeError(ValueError):
    pass


class NotNonsingularError(ArcError):
    pass


DEFAULT_CAP = 10**6


def enumeration_size(n: int, coeff_set, degree_bound: int) -> int:
    return len(list(coeff_set)) ** (n * degree_bound)


def enumerate_arcs(n: int, coeff_set, degree_bound: int, precision: int,
                   field=QQ, cap: int = DEFAULT_CAP):
    """Yield every arc whose components have support in degrees ``1..D``
    with coefficients from ``coeff_set``.  There are ``|coeff_set|^(n D)``."""
    coeff_set = [field.convert(c) for c in coeff_set]
    if degree_bound >= precision:
        raise ValueError(f"degree bound {degree_bound} must be below the precision {precision}")
    size = enumeration_size(n, coeff_set, degree_bound)
    if size > cap:
        raise EnumerationTooLargeError(
            f"enumeration too large: {size} arcs exceeds the cap of {cap}; "
            "reduce the coefficient set, degree bound or dimension"
        )
    for flat in itertools.product(coeff_set, repeat=n * degree_bound):
        rows = [flat[k * degree_bound:(k + 1) * degree_bound] for k in range(n)]
        yield Arc.from_coeffs(rows, precision, field)


@dataclass
class MembershipReport:
    arc_id: int
    arc: Arc
    in_Cv: bool
    in_C: bool
    in_Cpp: bool
    in_Y: bool
    in_R: bool
    trivial: bool = False
    threshold: int | None = None
    reparam_order: int | None = None
    cpp_profile: tuple = ()
    iq_profile: tuple = ()
    caveats: dict = field(default_factory=dict)
    undetermined: str | None = None

    @property
    def flags(self) -> dict:
        return {
            "in_Cv": self.in_Cv,
            "in_C": self.in_C,
            "in_Cpp": self.in_Cpp,
            "in_Y": self.in_Y,
            "in_R": self.in_R,
        }

    @property
    def agree(self) -> bool:
        return self.in_C == self.in_Cpp == self.in_Y == self.in_R

    @property
    def cv_consistent(self) -> bool:
        return not self.in_Cv or (self.in_C and self.in_Cpp and self.in_Y and self.in_R)

    @property
    def aq_iq_consistent(self) -> bool:
        return self.cpp_profile == self.iq_profile

    def to_json(self) -> dict:
        return {
            "id": self.arc_id,
            "arc": [[self.arc.field.format(c) for c in comp.coeffs[1:]] for comp in self.arc.components],
            "flags": self.flags,
            "trivial": self.trivial,
            "threshold": self.threshold,
            "reparam_order": self.reparam_order,
            "cpp_profile": list(self.cpp_profile),
            "iq_profile": list(self.iq_profile),
            "caveats": self.caveats,
            "undetermined": self.undetermined,
        }


@dataclass
class TheoremSummary:
    total: int
    members: int
    disagreements: list
    cv_violations: list
    aq_iq_exceptions: list
    undetermined: list
    params: dict

    @property
    def ok(self) -> bool:
        return not (self.disagreements or self.cv_violations or self.aq_iq_exceptions)

    def to_json(self) -> dict:
        return {
            "total": self.total,
            "members": self.members,
            "disagreements": [r.to_json() for r in self.disagreements],
            "cv_violations": [r.to_json() for r in self.cv_violations],
            "aq_iq_exceptions": [r.to_json() for r in self.aq_iq_exceptions],
            "undetermined": [r.to_json() for r in self.undetermined],
            "params": self.params,
            "ok": self.ok,
        }


class TheoremContext:
    """Everything about ``alpha`` the per-arc checks share."""

    def __init__(self, alpha: Arc, q_max: int = 5, hne: HneResult | None = None):
        self.alpha = alpha
        self.q_max = q_max
        self.hne = hne or hne_expand(alpha)
        self.centers: CenterSequence = center_sequence(alpha, alpha.precision)

    def centers_agree(self, beta: Arc) -> tuple[bool, int]:
        """Compare centers step by step; stop at the first difference or when
        either arc runs out of precision.  Returns ``(agree, steps compared)``."""
        current = beta
        for k, ref in enumerate(self.centers.steps):
            if is_trivial(current):
                return True, k
            try:
                rec = blowup_lift(current)
            except PrecisionExhaustedError:
                piv = _pivot(current)
                return piv == ref.pivot, k + (piv != ref.pivot)
            if rec.center != ref.center:
                return False, k + 1
            current = rec.lifted
        return True, len(self.centers)

    def evaluate(self, arc_id: int, beta: Arc) -> MembershipReport:
        if beta.n != self.alpha.n:
            raise ArcError("beta and alpha must have the same dimension")
        if is_trivial(beta):
            return MembershipReport(
                arc_id, beta, in_Cv=False, in_C=True, in_Cpp=True, in_Y=True, in_R=True,
                trivial=True, caveats={"trivial": "trivial arc; in the closure of C(v) only"},
            )
        h = self.hne
        caveats: dict = {}
        in_C, depth = self.centers_agree(beta)
        caveats["in_C"] = f"centers compared through {depth} blowups"

        try:
            lifted, step = lift_along(beta, h.charts)
        except PrecisionExhaustedError as exc:
            return MembershipReport(
                arc_id, beta, False, in_C, False, False, False,
                caveats=caveats, undetermined=f"lifting to the HNE chart: {exc}",
            )
        threshold = None
        cpp_profile: tuple = ()
        iq_profile: tuple = ()
        if lifted is None:
            in_Cpp = in_Y = False
            caveats["in_Cpp"] = caveats["in_Y"] = f"leaves alpha's centers at blowup {step + 1} <= depth {h.depth}"
        else:
            threshold = min(lifted.precision, h.residual_precision)
            top = min(self.q_max, threshold)
            cpp_profile = tuple(cont_membership(h, lifted, q) for q in range(1, top + 1))
            point = jet_point(lifted)
            iq_profile = tuple(vIq_membership(h, point, q) for q in range(1, top + 1))
            in_Cpp = all(cpp_profile) and cont_membership(h, lifted, threshold)
            in_Y = all(
                (lifted[i] - compose(h.P[i], lifted[h.pivot])).order().at_least(threshold)
                for i in h.others
            )
            caveats["in_Cpp"] = f"q <= {threshold}"
            caveats["in_Y"] = f"kernel relations vanish to order >= {threshold}"

        try:
            res = solve_reparam(self.alpha, beta, hne=h, check_to=threshold)
            in_R, order = True, res.N
            caveats["in_R"] = f"verified to t^{res.verified_to}"
        except NotReparametrizationError as exc:
            in_R, order = False, None
            caveats["in_R"] = str(exc)
        except PrecisionExhaustedError as exc:
            return MembershipReport(
                arc_id, beta, False, in_C, in_Cpp, in_Y, False, threshold=threshold,
                caveats=caveats, undetermined=f"reparametrization: {exc}",
            )
        return MembershipReport(
            arc_id, beta, in_Cv=in_R and order == 1, in_C=in_C, in_Cpp=in_Cpp, in_Y=in_Y,
            in_R=in_R, threshold=threshold, reparam_order=order,
            cpp_profile=cpp_profile, iq_profile=iq_profile, caveats=caveats,
        )


def _pivot(arc: Arc):
    from .blowup import select_pivot

    piv = select_pivot(arc)
    return piv[0] if piv else None


def check_theorem(alpha: Arc, coeff_set=(-1, 0, 1), degree_bound: int = 3,
                  precision: int | None = None, q_max: int = 5, cap: int = DEFAULT_CAP,
                  n_jobs: int | None = None, arcs=None):
    """Evaluate every enumerated arc and summarize agreement of the set memberships.

    Returns ``(reports, summary)``.  ``arcs`` overrides the enumeration.
    """
    precision = precision or alpha.precision
    ctx = TheoremContext(alpha, q_max=q_max)
    if arcs is None:
        arcs = enumerate_arcs(alpha.n, coeff_set, degree_bound, precision, alpha.field, cap)
    arcs = list(arcs)
    if n_jobs and n_jobs != 1:
        from joblib import Parallel, delayed

        reports = Parallel(n_jobs=n_jobs)(
            delayed(ctx.evaluate)(k, beta) for k, beta in enumerate(arcs)
        )
    else:
        reports = [ctx.evaluate(k, beta) for k, beta in enumerate(arcs)]
    reports.sort(key=lambda r: r.arc_id)
    decided = [r for r in reports if r.undetermined is None]
    summary = TheoremSummary(
        total=len(reports),
        members=sum(r.in_R for r in decided),
        disagreements=[r for r in decided if not r.agree],
        cv_violations=[r for r in decided if not r.cv_consistent],
        aq_iq_exceptions=[r for r in decided if not r.aq_iq_consistent],
        undetermined=[r for r in reports if r.undetermined is not None],
        params={
            "alpha": str(alpha),
            "coeffs": [alpha.field.format(alpha.field.convert(c)) for c in coeff_set],
            "degree": degree_bound,
            "precision": precision,
            "q_max": q_max,
            "hne_depth": ctx.hne.depth,
            "residual_precision": ctx.hne.residual_precision,
        },
    )
    return reports, summary


def random_polys(n: int, count: int, degree: int = 4, rng=None, field=QQ,
                 kernel_hint: HneResult | None = None) -> list[Poly]:
    """Random polynomials of total degree ``<= degree`` with small integer coefficients.

    With ``kernel_hint`` about a fifth of the samples are built from the
    truncated kernel relations so that high orders are exercised too.
    """
    import random

    rng = rng or random.Random(0)
    monos = [m for m in itertools.product(range(degree + 1), repeat=n) if sum(m) <= degree]
    out = []
    for k in range(count):
        terms = {}
        for _ in range(rng.randint(1, 5)):
            terms[rng.choice(monos)] = rng.randint(-3, 3)
        p = Poly(terms, n, field)
        if kernel_hint is not None and k % 5 == 4 and kernel_hint.others:
            i = rng.choice(kernel_hint.others)
            z = kernel_hint.truncated_kernel_poly(i, min(degree + 1, kernel_hint.residual_precision))
            p = z * Poly(terms, n, field) if p.terms else z
        out.append(p)
    return out


@dataclass
class BaseCaseReport:
    formula_mismatches: list
    aq_iq_exceptions: list
    val_c_violations: list
    samples: int
    arcs_checked: int

    @property
    def ok(self) -> bool:
        return not (self.formula_mismatches or self.aq_iq_exceptions or self.val_c_violations)

    def to_json(self) -> dict:
        return {
            "samples": self.samples,
            "arcs_checked": self.arcs_checked,
            "formula_mismatches": self.formula_mismatches,
            "aq_iq_exceptions": self.aq_iq_exceptions,
            "val_c_violations": self.val_c_violations,
            "ok": self.ok,
        }


def check_base_case(alpha: Arc, samples: int = 200, q_max: int = 5, coeff_set=(-1, 0, 1),
                    degree_bound: int = 2, precision: int | None = None, seed: int = 0,
                    cap: int = DEFAULT_CAP) -> BaseCaseReport:
    """Computational consequences of the nonsingular case.

    (a) ``eval_valuation`` agrees with direct substitution along ``alpha``;
    (b) Cont membership and ``V(I_q)`` membership agree for enumerated arcs;
    (c) members of ``C'' `` never have smaller order than ``v`` on the sample,
        and ``alpha`` attains ``v``.
    """
    import random

    from .arcs import is_nonsingular, ord_poly

    if not is_nonsingular(alpha):
        raise NotNonsingularError("check_base_case needs a nonsingular arc (some coordinate of order 1)")
    h = hne_expand(alpha)
    psis = random_polys(alpha.n, samples, rng=random.Random(seed), field=alpha.field, kernel_hint=h)
    mismatches = []
    values = []
    for k, psi in enumerate(psis):
        v = eval_valuation(h, psi)
        direct = ord_poly(alpha, psi)
        values.append(v)
        if v != direct:
            mismatches.append({"psi": str(psi), "eval_valuation": str(v), "ord_poly": str(direct)})
    precision = precision or alpha.precision
    aq_iq = []
    violations = []
    count = 0
    for beta in enumerate_arcs(alpha.n, coeff_set, degree_bound, precision, alpha.field, cap):
        count += 1
        point = jet_point(beta)
        top = min(q_max, beta.precision)
        for q in range(1, top + 1):
            if cont_membership(h, beta, q) != vIq_membership(h, point, q):
                aq_iq.append({"arc": str(beta), "q": q})
        if is_trivial(beta) or not cont_membership(h, beta, beta.precision):
            continue
        for psi, v in zip(psis, values):
            if not v.finite:
                continue
            if not ord_poly(beta, psi).at_least(v.value):
                violations.append({"arc": str(beta), "psi": str(psi), "v": str(v)})
    return BaseCaseReport(mismatches, aq_iq, violations, len(psis), count)
