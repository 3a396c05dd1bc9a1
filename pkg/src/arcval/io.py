"""JSON arc documents.

An arc document looks like::

    {"components": [[1], [0, 1]], "field": "rational", "n": 2,
     "precision": 16, "schema": "arcval.arc/1"}

``components[i][j-1]`` is the coefficient of ``t^j`` in ``x_{i+1}``.
Coefficients are JSON integers or strings ``"a/b"``.  The canonical form
(what :func:`dump_document` writes) has sorted keys, fractions in lowest
terms with a positive denominator, integral values as plain integers and no
trailing zeros; re-dumping a parsed canonical document reproduces it byte for
byte.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .arcs import Arc, ArcError
from .fields import QQ, FieldError, ModP, field_from_name

SCHEMA = "arcval.arc/1"
REPORT_SCHEMA = "arcval.report/1"


class DocumentError(ValueError):
    """Malformed arc document; ``location`` points at the offending spot."""

    def __init__(self, message: str, location: str = ""):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location


@dataclass(frozen=True)
class ArcDocument:
    field: str
    n: int
    precision: int
    components: tuple  # tuple of tuples of int | Fraction, trailing zeros stripped

    def to_arc(self) -> Arc:
        fld = field_from_name(self.field)
        return Arc.from_coeffs([[fld.convert(c) for c in row] for row in self.components],
                               self.precision, fld)

    @classmethod
    def from_arc(cls, arc: Arc) -> ArcDocument:
        rows = tuple(_strip(tuple(_plain(c) for c in row)) for row in arc.coefficient_table())
        return cls(arc.field.name, arc.n, arc.precision, rows)

    def to_json(self) -> dict:
        return {
            "components": [[_encode(c) for c in row] for row in self.components],
            "field": self.field,
            "n": self.n,
            "precision": self.precision,
            "schema": SCHEMA,
        }


def _plain(c):
    if isinstance(c, ModP):
        return c.value
    return c


def _strip(row: tuple) -> tuple:
    end = len(row)
    while end and not row[end - 1]:
        end -= 1
    return row[:end]


def _encode(c):
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _decode(value, where: str):
    if isinstance(value, bool) or isinstance(value, float):
        raise DocumentError("coefficients must be integers or \"a/b\" strings", where)
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            c = Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise DocumentError(f"bad rational {value!r}", where) from None
        if "." in value or "e" in value.lower():
            raise DocumentError(f"decimal notation {value!r} is not exact; use \"a/b\"", where)
        return c.numerator if c.denominator == 1 else c
    raise DocumentError(f"unexpected {type(value).__name__} coefficient", where)


def _require_int(data: dict, key: str, minimum: int) -> int:
    if key not in data:
        raise DocumentError(f"missing key {key!r}", "$")
    v = data[key]
    if isinstance(v, bool) or not isinstance(v, int):
        raise DocumentError(f"{key} must be an integer", f"$.{key}")
    if v < minimum:
        raise DocumentError(f"{key} must be at least {minimum}", f"$.{key}")
    return v


def document_from_json(data) -> ArcDocument:
    if not isinstance(data, dict):
        raise DocumentError("top level must be an object", "$")
    schema = data.get("schema", SCHEMA)
    if schema != SCHEMA:
        raise DocumentError(f"unsupported schema {schema!r}, expected {SCHEMA!r}", "$.schema")
    unknown = set(data) - {"schema", "field", "n", "precision", "components"}
    if unknown:
        raise DocumentError(f"unknown keys {sorted(unknown)}", "$")
    field_name = data.get("field", "rational")
    try:
        fld = field_from_name(field_name)
    except FieldError as exc:
        raise DocumentError(str(exc), "$.field") from None
    n = _require_int(data, "n", 2)
    precision = _require_int(data, "precision", 2)
    comps = data.get("components")
    if not isinstance(comps, list):
        raise DocumentError("components must be a list", "$.components")
    if len(comps) != n:
        raise DocumentError(f"{len(comps)} components for n = {n}", "$.components")
    rows = []
    for i, row in enumerate(comps):
        where = f"$.components[{i}]"
        if not isinstance(row, list):
            raise DocumentError("each component must be a list", where)
        if len(row) > precision - 1:
            raise DocumentError(
                f"{len(row)} coefficients but precision {precision} allows at most {precision - 1}", where
            )
        vals = []
        for j, v in enumerate(row):
            c = _decode(v, f"{where}[{j}]")
            if fld is not QQ:
                try:
                    c = fld.convert(c).value
                except FieldError as exc:
                    raise DocumentError(str(exc), f"{where}[{j}]") from None
            vals.append(c)
        rows.append(_strip(tuple(vals)))
    return ArcDocument(fld.name, n, precision, tuple(rows))


def parse_document(text: str) -> ArcDocument:
    """Parse JSON text; syntax errors report line, column and offset."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(exc.msg, f"line {exc.lineno} column {exc.colno} (char {exc.pos})") from None
    return document_from_json(data)


def dumps_canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True) + "\n"


def dump_document(doc: ArcDocument) -> str:
    return dumps_canonical(doc.to_json())


def load_arc(path) -> Arc:
    with open(path, encoding="utf-8") as fh:
        doc = parse_document(fh.read())
    try:
        return doc.to_arc()
    except ArcError as exc:
        raise DocumentError(str(exc), str(path)) from None


def save_arc(arc: Arc, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_document(ArcDocument.from_arc(arc)))


def series_coeffs(s, field) -> list:
    """Coefficient list of a series in document encoding (index ``j`` is ``t^j``)."""
    return [_encode(_plain(c)) if field is QQ else _plain(c) for c in s.coeffs]
