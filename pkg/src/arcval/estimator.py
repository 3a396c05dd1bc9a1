"""scikit-learn style front end.

``ArcValuation`` is fitted on a normalized arc and transforms polynomials into
their valuations.  ``ArcSetClassifier`` is fitted on a reference arc and
predicts whether candidate arcs lie in its arc set.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .arcs import Arc, ArcError, ord_poly
from .fields import QQ, field_from_name
from .hne import eval_valuation, hne_expand
from .io import ArcDocument, document_from_json
from .poly import Poly, parse_poly


def check_arc(arc, precision: int | None = None, field=None) -> Arc:
    """Coerce ``arc`` to an :class:`Arc`.

    Accepts an ``Arc``, an :class:`ArcDocument`, a document dict, or a list of
    per-component coefficient lists starting at ``t^1`` (then ``precision`` is
    required).
    """
    if isinstance(arc, Arc):
        out = arc
    elif isinstance(arc, ArcDocument):
        out = arc.to_arc()
    elif isinstance(arc, dict):
        out = document_from_json(arc).to_arc()
    elif isinstance(arc, (list, tuple)):
        if precision is None:
            raise ValueError("precision is required when an arc is given as coefficient lists")
        fld = field_from_name(field) if isinstance(field, str) else (field or QQ)
        out = Arc.from_coeffs(arc, precision, fld)
    else:
        raise TypeError(f"cannot interpret {type(arc).__name__} as an arc")
    if precision is not None and precision < out.precision:
        out = out.truncate(precision)
    return out


def check_polys(polys, nvars: int, field=QQ) -> list[Poly]:
    """Coerce an iterable of :class:`Poly` or strings in ``x1..xn``."""
    if isinstance(polys, (str, Poly)):
        polys = [polys]
    out = []
    for p in polys:
        if isinstance(p, str):
            p = parse_poly(p, nvars, field)
        elif not isinstance(p, Poly):
            raise TypeError(f"expected a polynomial, got {type(p).__name__}")
        if p.nvars != nvars:
            raise ArcError(f"polynomial in {p.nvars} variables, arc has {nvars} coordinates")
        out.append(p)
    return out


class ArcValuation(TransformerMixin, BaseEstimator):
    """The valuation ``v = ord_alpha`` of a normalized arc.

    ``transform`` returns an object array of :class:`~arcval.series.Order`
    values.  For a nonsingular arc they come from the Hamburger-Noether
    expansion; otherwise polynomials in the original coordinates are
    substituted along the arc itself.
    """

    def __init__(self, precision=None):
        self.precision = precision

    def fit(self, X, y=None):
        arc = check_arc(X, self.precision)
        self.arc_ = arc
        self.hne_ = hne_expand(arc)
        self.n_features_in_ = arc.n
        return self

    def transform(self, X):
        check_is_fitted(self, "hne_")
        polys = check_polys(X, self.arc_.n, self.arc_.field)
        if self.hne_.depth == 0:
            vals = [eval_valuation(self.hne_, p) for p in polys]
        else:
            vals = [ord_poly(self.arc_, p) for p in polys]
        out = np.empty(len(vals), dtype=object)
        out[:] = vals
        return out


class ArcSetClassifier(ClassifierMixin, BaseEstimator):
    """Membership in the common arc set of a normalized reference arc.

    ``predict`` returns a boolean array (the agreed ``in_R`` flag) and
    ``reports`` the full per-arc flags.
    """

    def __init__(self, q_max=5, precision=None):
        self.q_max = q_max
        self.precision = precision

    def fit(self, X, y=None):
        from .harness import TheoremContext

        arc = check_arc(X, self.precision)
        self.context_ = TheoremContext(arc, q_max=self.q_max)
        self.classes_ = np.array([False, True])
        return self

    def reports(self, X):
        check_is_fitted(self, "context_")
        alpha = self.context_.alpha
        arcs = [check_arc(b, alpha.precision, alpha.field) for b in X]
        return [self.context_.evaluate(k, b) for k, b in enumerate(arcs)]

    def predict(self, X):
        return np.array([r.in_R for r in self.reports(X)], dtype=bool)


__all__ = ["ArcSetClassifier", "ArcValuation", "check_arc", "check_polys"]
