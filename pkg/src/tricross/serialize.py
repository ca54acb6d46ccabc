"""JSON documents for labels, drawings and construction specs.

Every document is a JSON object with ``"schema": 1`` and a ``"kind"``:

``k22n-labels``
    ``{"n", "type", "x": [4], "y": [4]}``
``tripartite-labels``
    ``{"m", "n", "p", "tables": {name: [...]}}`` with the nine table names of
    :data:`tricross.model.TABLES`
``geometric``
    ``{"circles": [{"name", "orientation", "polygon"}], "vertices": [{"id",
    "circle", "label", "point"}], "edges": [{"u", "v", "waypoints"}],
    "parts": {"M", "N", "P"}}``
``construction-spec``
    ``{"n", "variant", "groups": [4], "bend_savings", "red_green", "red_red"}``

Coordinates are integers or exact rationals written ``{"num": p, "den": q}``
with ``q > 1`` in lowest terms.  :func:`dumps` always writes the canonical
form: keys in the order above, two-space indentation, one trailing newline.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Dict, List, Union

from .constructions import ConstructionSpec
from .cyclic import DomainError
from .model import (
    TABLES,
    Circle,
    Edge,
    GeometricDrawing,
    K22nLabels,
    TripartiteLabels,
    ValidationError,
    Vertex,
    validate_geometry,
    validate_k22n,
    validate_tripartite,
)

__all__ = ["SCHEMA", "ParseError", "dumps", "loads", "canonicalize", "to_doc", "from_doc"]

SCHEMA = 1

Document = Union[K22nLabels, TripartiteLabels, GeometricDrawing, ConstructionSpec]

_FIELDS = {
    "k22n-labels": ("n", "type", "x", "y"),
    "tripartite-labels": ("m", "n", "p", "tables"),
    "geometric": ("circles", "vertices", "edges", "parts"),
    "construction-spec": ("n", "variant", "groups", "bend_savings", "red_green", "red_red"),
}


class ParseError(DomainError):
    """Malformed document; ``location`` is a JSON path such as ``$.edges[3].u``."""

    def __init__(self, location: str, message: str):
        self.location = location
        super().__init__(f"{location}: {message}")


# -- writing ----------------------------------------------------------------


def _num(v) -> Any:
    v = Fraction(v)
    return v.numerator if v.denominator == 1 else {"num": v.numerator, "den": v.denominator}


def _pt(p) -> List[Any]:
    return [_num(p[0]), _num(p[1])]


def to_doc(obj: Document) -> Dict[str, Any]:
    """The canonical JSON-ready dict for ``obj``."""
    if isinstance(obj, K22nLabels):
        body = {"n": obj.n, "type": obj.type, "x": list(obj.x), "y": list(obj.y)}
        kind = "k22n-labels"
    elif isinstance(obj, TripartiteLabels):
        body = {
            "m": obj.m,
            "n": obj.n,
            "p": obj.p,
            "tables": {name: list(obj.tables[name]) for name in TABLES if name in obj.tables},
        }
        kind = "tripartite-labels"
    elif isinstance(obj, GeometricDrawing):
        body = {
            "circles": [
                {"name": c.name, "orientation": c.orientation, "polygon": [_pt(p) for p in c.polygon]}
                for c in obj.circles
            ],
            "vertices": [{"id": v.id, "circle": v.circle, "label": v.label, "point": _pt(v.point)} for v in obj.vertices],
            "edges": [{"u": e.u, "v": e.v, "waypoints": [_pt(p) for p in e.waypoints]} for e in obj.edges],
            "parts": {name: list(obj.parts[name]) for name in sorted(obj.parts)},
        }
        kind = "geometric"
    elif isinstance(obj, ConstructionSpec):
        body = {
            "n": obj.n,
            "variant": obj.variant,
            "groups": list(obj.groups),
            "bend_savings": obj.bend_savings,
            "red_green": obj.red_green,
            "red_red": obj.red_red,
        }
        kind = "construction-spec"
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    return {"schema": SCHEMA, "kind": kind, **body}


def dumps(obj: Document) -> str:
    return json.dumps(to_doc(obj), indent=2, ensure_ascii=False) + "\n"


# -- reading ----------------------------------------------------------------


def _expect_keys(doc: Any, where: str, required, optional=()) -> Dict[str, Any]:
    if not isinstance(doc, dict):
        raise ParseError(where, f"expected an object, got {type(doc).__name__}")
    for key in doc:
        if key not in required and key not in optional:
            raise ParseError(f"{where}.{key}", f"unknown field {key!r}")
    for key in required:
        if key not in doc:
            raise ParseError(where, f"missing field {key!r}")
    return doc


def _int(v: Any, where: str) -> int:
    if not isinstance(v, int) or isinstance(v, bool):
        raise ParseError(where, f"expected an integer, got {v!r}")
    return v


def _str(v: Any, where: str) -> str:
    if not isinstance(v, str):
        raise ParseError(where, f"expected a string, got {v!r}")
    return v


def _list(v: Any, where: str, length: int = -1) -> list:
    if not isinstance(v, list):
        raise ParseError(where, f"expected an array, got {type(v).__name__}")
    if length >= 0 and len(v) != length:
        raise ParseError(where, f"expected {length} entries, got {len(v)}")
    return v


def _ints(v: Any, where: str, length: int = -1) -> List[int]:
    return [_int(x, f"{where}[{i}]") for i, x in enumerate(_list(v, where, length))]


def _rational(v: Any, where: str) -> Fraction:
    if isinstance(v, dict):
        _expect_keys(v, where, ("num", "den"))
        num = _int(v["num"], f"{where}.num")
        den = _int(v["den"], f"{where}.den")
        if den <= 1:
            raise ParseError(f"{where}.den", f"denominator must be > 1 (write integers plainly), got {den}")
        q = Fraction(num, den)
        if q.denominator != den:
            raise ParseError(where, f"{num}/{den} is not in lowest terms")
        return q
    return Fraction(_int(v, where))


def _point(v: Any, where: str) -> tuple:
    x, y = _list(v, where, 2)
    return _rational(x, f"{where}[0]"), _rational(y, f"{where}[1]")


def _k22n(doc, where) -> K22nLabels:
    return K22nLabels(
        _int(doc["n"], f"{where}.n"),
        _int(doc["type"], f"{where}.type"),
        tuple(_ints(doc["x"], f"{where}.x", 4)),
        tuple(_ints(doc["y"], f"{where}.y", 4)),
    )


def _tripartite(doc, where) -> TripartiteLabels:
    tables = _expect_keys(doc["tables"], f"{where}.tables", tuple(TABLES))
    return TripartiteLabels(
        _int(doc["m"], f"{where}.m"),
        _int(doc["n"], f"{where}.n"),
        _int(doc["p"], f"{where}.p"),
        {name: tuple(_ints(tables[name], f"{where}.tables.{name}")) for name in TABLES},
    )


def _geometric(doc, where) -> GeometricDrawing:
    circles = []
    for i, c in enumerate(_list(doc["circles"], f"{where}.circles")):
        w = f"{where}.circles[{i}]"
        _expect_keys(c, w, ("name", "orientation", "polygon"))
        poly = [_point(p, f"{w}.polygon[{j}]") for j, p in enumerate(_list(c["polygon"], f"{w}.polygon"))]
        for j, p in enumerate(poly):
            if p[0].denominator != 1 or p[1].denominator != 1:
                raise ParseError(f"{w}.polygon[{j}]", "circle corners must have integer coordinates")
        circles.append(Circle(_str(c["name"], f"{w}.name"), poly, _str(c["orientation"], f"{w}.orientation")))
    vertices = []
    for i, v in enumerate(_list(doc["vertices"], f"{where}.vertices")):
        w = f"{where}.vertices[{i}]"
        _expect_keys(v, w, ("id", "circle", "label", "point"))
        vertices.append(
            Vertex(
                _str(v["id"], f"{w}.id"),
                _str(v["circle"], f"{w}.circle"),
                _int(v["label"], f"{w}.label"),
                _point(v["point"], f"{w}.point"),
            )
        )
    edges = []
    for i, e in enumerate(_list(doc["edges"], f"{where}.edges")):
        w = f"{where}.edges[{i}]"
        _expect_keys(e, w, ("u", "v", "waypoints"))
        wps = _list(e["waypoints"], f"{w}.waypoints")
        if len(wps) > 1:
            raise ParseError(f"{w}.waypoints", f"an edge has at most one waypoint, got {len(wps)}")
        edges.append(
            Edge(
                _str(e["u"], f"{w}.u"),
                _str(e["v"], f"{w}.v"),
                tuple(_point(p, f"{w}.waypoints[{j}]") for j, p in enumerate(wps)),
            )
        )
    parts = _expect_keys(doc["parts"], f"{where}.parts", ("M", "N", "P"))
    parts = {
        k: tuple(_str(x, f"{where}.parts.{k}[{j}]") for j, x in enumerate(_list(parts[k], f"{where}.parts.{k}")))
        for k in ("M", "N", "P")
    }
    return GeometricDrawing(circles, vertices, edges, parts)


def _spec(doc, where) -> ConstructionSpec:
    return ConstructionSpec(
        _int(doc["n"], f"{where}.n"),
        _str(doc["variant"], f"{where}.variant"),
        tuple(_ints(doc["groups"], f"{where}.groups", 4)),
        _int(doc["bend_savings"], f"{where}.bend_savings"),
        _int(doc["red_green"], f"{where}.red_green"),
        _int(doc["red_red"], f"{where}.red_red"),
    )


def _spec_violations(s: ConstructionSpec) -> List[str]:
    from .constructions import build

    try:
        ref = build(s.n, s.variant, s.groups)
    except DomainError as exc:
        return [str(exc)]
    return [] if ref == s else [f"construction spec fields disagree with the recipe for {s.variant}: expected {ref}"]


_READERS = {
    "k22n-labels": (_k22n, validate_k22n),
    "tripartite-labels": (_tripartite, validate_tripartite),
    "geometric": (_geometric, validate_geometry),
    "construction-spec": (_spec, _spec_violations),
}


def from_doc(doc: Any, validate: bool = True) -> Document:
    """Build the value described by a decoded JSON document."""
    where = "$"
    if not isinstance(doc, dict):
        raise ParseError(where, "expected an object")
    if "kind" not in doc:
        raise ParseError(where, "missing field 'kind'")
    kind = doc["kind"]
    if kind not in _FIELDS:
        raise ParseError(f"{where}.kind", f"unknown kind {kind!r}; expected one of {', '.join(_FIELDS)}")
    _expect_keys(doc, where, ("schema", "kind") + _FIELDS[kind])
    if doc["schema"] != SCHEMA:
        raise ParseError(f"{where}.schema", f"unsupported schema {doc['schema']!r}; this version reads {SCHEMA}")
    reader, validator = _READERS[kind]
    value = reader(doc, where)
    if validate:
        problems = validator(value)
        if problems:
            raise ValidationError(problems)
    return value


def loads(text: str, validate: bool = True) -> Document:
    """Parse a document; :class:`ParseError` names the offending location."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno} column {exc.colno}", exc.msg) from None
    return from_doc(doc, validate=validate)


def canonicalize(text: str) -> str:
    """The canonical serialization of the document in ``text``."""
    return dumps(loads(text, validate=False))
