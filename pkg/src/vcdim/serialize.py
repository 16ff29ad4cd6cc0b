"""JSON manifold-description documents.

A document is an object with a ``summands`` list. Each summand is tagged by
``type``::

    {"type": "seifert", "base": {"genus": 0, "orientable": true,
                                 "cones": [[2, 1], [3, 1], [7, 1]]},
     "b": -1}
    {"type": "hyperbolic"}
    {"type": "torus_bundle", "monodromy": [[1, 1], [0, 1]]}
    {"type": "double_of_k", "gluing": [[1, 1], [1, 2]]}
    {"type": "geometric", "geometry": "S3", "pi1_order": 2}
    {"type": "jsj",
     "vertices": [{"id": "A", "kind": "seifert",
                   "base": {"genus": 0, "cones": [[2, 1], [3, 1]], "boundary": 1},
                   "fibers": [[1, 0]]},
                  {"id": "H", "kind": "hyperbolic", "cusps": 1},
                  {"id": "K", "kind": "k"}],
     "edges": [{"a": ["A", 0], "b": ["H", 0], "gluing": [[0, 1], [1, 0]]}]}

Only integers are accepted as numbers. Top-level ``name``, ``description``
and ``expected`` keys are carried by corpus files and ignored here.
"""
from __future__ import annotations

import json
from typing import Any, Optional

from .model import (
    INFINITE,
    DeclaredGeometric,
    Diagnostic,
    DoubleOfK,
    Geometry,
    HyperbolicClosed,
    HyperbolicPiece,
    IntMatrix2,
    Jsj,
    JsjEdge,
    JsjGraph,
    KPiece,
    ManifoldDescription,
    OrbifoldBase,
    SeifertClosed,
    SeifertInvariants,
    SeifertPiece,
    TorusBundle,
    ZeroSlope,
    canonicalize_slope,
    validate_description,
)

TOP_LEVEL_KEYS = {"summands", "name", "description", "expected"}


class _Bad(Exception):
    def __init__(self, where: str, message: str):
        super().__init__(message)
        self.where = where
        self.message = message


class _Float:
    """Marker for a float literal, so it can be rejected with a location."""

    def __init__(self, text):
        self.text = text


def _reject_constant(name):
    return _Float(name)


def _int(value, where) -> int:
    if isinstance(value, _Float):
        raise _Bad(where, f"expected an integer, got non-integer number {value.text}")
    if isinstance(value, bool) or not isinstance(value, int):
        raise _Bad(where, f"expected an integer, got {_describe(value)}")
    return value


def _describe(value) -> str:
    if isinstance(value, _Float):
        return value.text
    return type(value).__name__ if not isinstance(value, str) else repr(value)


def _obj(value, where, allowed, required=()) -> dict:
    if not isinstance(value, dict):
        raise _Bad(where, f"expected an object, got {_describe(value)}")
    for key in value:
        if key not in allowed:
            raise _Bad(f"{where}.{key}", f"unknown field {key!r}")
    for key in required:
        if key not in value:
            raise _Bad(where, f"missing field {key!r}")
    return value


def _list(value, where) -> list:
    if not isinstance(value, list):
        raise _Bad(where, f"expected a list, got {_describe(value)}")
    return value


def _str(value, where) -> str:
    if not isinstance(value, str):
        raise _Bad(where, f"expected a string, got {_describe(value)}")
    return value


def _pair(value, where) -> tuple[int, int]:
    items = _list(value, where)
    if len(items) != 2:
        raise _Bad(where, f"expected a pair, got {len(items)} entries")
    return _int(items[0], f"{where}[0]"), _int(items[1], f"{where}[1]")


def _matrix(value, where) -> IntMatrix2:
    rows = _list(value, where)
    if len(rows) != 2:
        raise _Bad(where, "expected a 2x2 matrix as two rows")
    (a, b), (c, d) = _pair(rows[0], f"{where}[0]"), _pair(rows[1], f"{where}[1]")
    return IntMatrix2(a, b, c, d)


def _base(value, where) -> OrbifoldBase:
    obj = _obj(value, where, {"genus", "orientable", "cones", "boundary"})
    orientable = obj.get("orientable", True)
    if not isinstance(orientable, bool):
        raise _Bad(f"{where}.orientable", f"expected true or false, got {_describe(orientable)}")
    cones = tuple(_pair(c, f"{where}.cones[{i}]") for i, c in enumerate(_list(obj.get("cones", []), f"{where}.cones")))
    return OrbifoldBase(
        genus=_int(obj.get("genus", 0), f"{where}.genus"),
        orientable=orientable,
        cone_points=cones,
        boundary_count=_int(obj.get("boundary", 0), f"{where}.boundary"),
    )


def _order(value, where):
    if value == INFINITE:
        return INFINITE
    return _int(value, where)


def _vertex(value, where):
    obj = _obj(value, where, {"id", "kind", "base", "fibers", "cusps"}, ("id", "kind"))
    vid = _str(obj["id"], f"{where}.id")
    kind = obj["kind"]
    if kind == "seifert":
        _obj(obj, where, {"id", "kind", "base", "fibers"}, ("base", "fibers"))
        fibers = []
        for i, f in enumerate(_list(obj["fibers"], f"{where}.fibers")):
            p, q = _pair(f, f"{where}.fibers[{i}]")
            try:
                fibers.append(canonicalize_slope(p, q))
            except ZeroSlope:
                raise _Bad(f"{where}.fibers[{i}]", "fiber slope (0, 0) is undefined") from None
        return SeifertPiece(vid, _base(obj["base"], f"{where}.base"), tuple(fibers))
    if kind == "hyperbolic":
        _obj(obj, where, {"id", "kind", "cusps"}, ("cusps",))
        return HyperbolicPiece(vid, _int(obj["cusps"], f"{where}.cusps"))
    if kind == "k":
        _obj(obj, where, {"id", "kind"})
        return KPiece(vid)
    raise _Bad(f"{where}.kind", f"unknown vertex kind {kind!r} (expected seifert, hyperbolic or k)")


def _socket(value, where):
    items = _list(value, where)
    if len(items) != 2:
        raise _Bad(where, "expected [vertex id, socket index]")
    return _str(items[0], f"{where}[0]"), _int(items[1], f"{where}[1]")


def _summand(value, where):
    obj = _obj(value, where, {"type", "base", "b", "pi1_order", "monodromy", "gluing",
                              "vertices", "edges", "geometry"}, ("type",))
    kind = obj["type"]
    if kind == "seifert":
        _obj(obj, where, {"type", "base", "b", "pi1_order"}, ("base", "b"))
        order = _int(obj["pi1_order"], f"{where}.pi1_order") if "pi1_order" in obj else None
        inv = SeifertInvariants(_base(obj["base"], f"{where}.base"), _int(obj["b"], f"{where}.b"))
        return SeifertClosed(inv, order)
    if kind == "hyperbolic":
        _obj(obj, where, {"type"})
        return HyperbolicClosed()
    if kind == "torus_bundle":
        _obj(obj, where, {"type", "monodromy"}, ("monodromy",))
        return TorusBundle(_matrix(obj["monodromy"], f"{where}.monodromy"))
    if kind == "double_of_k":
        _obj(obj, where, {"type", "gluing"}, ("gluing",))
        return DoubleOfK(_matrix(obj["gluing"], f"{where}.gluing"))
    if kind == "jsj":
        _obj(obj, where, {"type", "vertices", "edges"}, ("vertices", "edges"))
        vertices = tuple(_vertex(v, f"{where}.vertices[{i}]")
                         for i, v in enumerate(_list(obj["vertices"], f"{where}.vertices")))
        edges = []
        for i, e in enumerate(_list(obj["edges"], f"{where}.edges")):
            here = f"{where}.edges[{i}]"
            e = _obj(e, here, {"a", "b", "gluing"}, ("a", "b", "gluing"))
            edges.append(JsjEdge(_socket(e["a"], f"{here}.a"), _socket(e["b"], f"{here}.b"),
                                 _matrix(e["gluing"], f"{here}.gluing")))
        return Jsj(JsjGraph(vertices, tuple(edges)))
    if kind == "geometric":
        _obj(obj, where, {"type", "geometry", "pi1_order"}, ("geometry",))
        tag = obj["geometry"]
        try:
            geometry = Geometry(tag)
        except ValueError:
            names = ", ".join(g.value for g in Geometry)
            raise _Bad(f"{where}.geometry", f"unknown geometry {tag!r} (expected one of {names})") from None
        order = _order(obj["pi1_order"], f"{where}.pi1_order") if "pi1_order" in obj else None
        return DeclaredGeometric(geometry, order)
    raise _Bad(f"{where}.type", f"unknown summand type {kind!r}")


def parse_document(doc: Any) -> tuple[Optional[ManifoldDescription], list[Diagnostic]]:
    try:
        obj = _obj(doc, "document", TOP_LEVEL_KEYS, ("summands",))
        raw = _list(obj["summands"], "summands")
    except _Bad as exc:
        return None, [Diagnostic("parse", exc.where, exc.message)]
    summands, diags = [], []
    for i, s in enumerate(raw):
        try:
            summands.append(_summand(s, f"summands[{i}]"))
        except _Bad as exc:
            diags.append(Diagnostic("parse", exc.where, exc.message))
    if diags:
        return None, diags
    m = ManifoldDescription(tuple(summands))
    diags = validate_description(m)
    return (None, diags) if diags else (m, [])


def load_json(text: str):
    """Decode JSON keeping floats and NaN/Infinity as rejectable markers."""
    return json.loads(text, parse_float=_Float, parse_constant=_reject_constant)


def parse_description(text) -> tuple[Optional[ManifoldDescription], list[Diagnostic]]:
    """Parse and structurally validate a document; never raises.

    Returns the description and an empty list, or ``None`` and the
    diagnostics explaining why not.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8-sig")
        except UnicodeDecodeError as exc:
            return None, [Diagnostic("parse", f"byte {exc.start}", "document is not valid UTF-8")]
    try:
        doc = load_json(text)
    except json.JSONDecodeError as exc:
        return None, [Diagnostic("parse", f"line {exc.lineno}, column {exc.colno}", exc.msg)]
    except RecursionError:
        return None, [Diagnostic("parse", "document", "document is nested too deeply")]
    except ValueError as exc:
        # e.g. integer literals beyond the interpreter's digit limit
        return None, [Diagnostic("parse", "document", str(exc))]
    return parse_document(doc)


# Serialization

def _base_dict(base: OrbifoldBase) -> dict:
    return {
        "genus": base.genus,
        "orientable": base.orientable,
        "cones": [list(c) for c in base.cone_points],
        "boundary": base.boundary_count,
    }


def _vertex_dict(v) -> dict:
    if isinstance(v, SeifertPiece):
        return {"id": v.id, "kind": "seifert", "base": _base_dict(v.base), "fibers": [list(f.vector()) for f in v.fibers]}
    if isinstance(v, HyperbolicPiece):
        return {"id": v.id, "kind": "hyperbolic", "cusps": v.cusps}
    return {"id": v.id, "kind": "k"}


def summand_to_dict(s) -> dict:
    if isinstance(s, SeifertClosed):
        out = {"type": "seifert", "base": _base_dict(s.inv.base), "b": s.inv.b}
        if s.pi1_order is not None:
            out["pi1_order"] = s.pi1_order
        return out
    if isinstance(s, HyperbolicClosed):
        return {"type": "hyperbolic"}
    if isinstance(s, TorusBundle):
        return {"type": "torus_bundle", "monodromy": s.monodromy.rows()}
    if isinstance(s, DoubleOfK):
        return {"type": "double_of_k", "gluing": s.gluing.rows()}
    if isinstance(s, Jsj):
        return {
            "type": "jsj",
            "vertices": [_vertex_dict(v) for v in s.graph.vertices],
            "edges": [{"a": list(e.a), "b": list(e.b), "gluing": e.gluing.rows()} for e in s.graph.edges],
        }
    out = {"type": "geometric", "geometry": s.geometry.value}
    if s.pi1_order is not None:
        out["pi1_order"] = s.pi1_order
    return out


def description_to_dict(m: ManifoldDescription) -> dict:
    return {"summands": [summand_to_dict(s) for s in m.summands]}


def serialize(m: ManifoldDescription) -> str:
    return json.dumps(description_to_dict(m), indent=2, sort_keys=True) + "\n"
