"""JSON forms of layouts, graphs, trees, assignments and reports.

Rationals are written as ``"p"`` or ``"p/q"`` strings so nothing is lost.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Mapping

from .dualgraph import PlaneGraph
from .errors import InvalidInputError, LayoutError
from .geometry import Contact, Layout, MaximalSegment, Rect, as_rational, validate_layout
from .trees import tree_from_dict, tree_to_dict


def q(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _rational(value) -> Fraction:
    try:
        return as_rational(value)
    except (TypeError, ValueError, ZeroDivisionError, LayoutError) as exc:
        raise InvalidInputError(f"not a rational: {value!r}") from exc


def _rect(d: Mapping, rid=None) -> Rect:
    try:
        coords = [_rational(d[k]) for k in ("x0", "y0", "x1", "y1")]
    except KeyError as exc:
        raise InvalidInputError(f"rect is missing {exc}") from exc
    return Rect(rid if rid is not None else str(d.get("id", "")), *coords)


def layout_to_json(layout: Layout) -> dict:
    b = layout.bbox
    return {
        "bbox": {"x0": q(b.x0), "y0": q(b.y0), "x1": q(b.x1), "y1": q(b.y1)},
        "rects": [
            {"id": r.id, "x0": q(r.x0), "y0": q(r.y0), "x1": q(r.x1), "y1": q(r.y1)} for r in layout.rects
        ],
    }


def layout_from_json(data: Any) -> Layout:
    """Parse and validate; malformed input raises InvalidInputError."""
    if not isinstance(data, dict) or "bbox" not in data or "rects" not in data:
        raise InvalidInputError("layout JSON needs 'bbox' and 'rects'")
    if not isinstance(data["rects"], list):
        raise InvalidInputError("'rects' must be a list")
    bbox = _rect(data["bbox"], "bbox")
    rects = []
    for d in data["rects"]:
        if not isinstance(d, dict) or "id" not in d:
            raise InvalidInputError("every rect needs an 'id'")
        rects.append(_rect(d, str(d["id"])))
    return validate_layout(bbox, rects)


def graph_to_json(g: PlaneGraph) -> dict:
    return {
        "vertices": list(g.vertices),
        "rotation": {v: list(g.rotation[v]) for v in g.vertices},
        "outer_face": list(g.outer_face),
    }


def graph_from_json(data: Any) -> PlaneGraph:
    if not isinstance(data, dict) or not {"vertices", "rotation", "outer_face"} <= data.keys():
        raise InvalidInputError("graph JSON needs 'vertices', 'rotation' and 'outer_face'")
    verts = tuple(data["vertices"])
    rotation = data["rotation"]
    if not isinstance(rotation, dict):
        raise InvalidInputError("'rotation' must be an object")
    try:
        return PlaneGraph(verts, {v: tuple(rotation[v]) for v in verts}, tuple(data["outer_face"]))
    except KeyError as exc:
        raise InvalidInputError(f"no rotation for vertex {exc}") from exc
    except (LayoutError, TypeError, ValueError) as exc:
        raise InvalidInputError(str(exc)) from exc


def tree_to_json(tree) -> dict:
    return tree_to_dict(tree)


def tree_from_json(data: Any):
    try:
        return tree_from_dict(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInputError(f"bad slicing tree: {exc}") from exc


def assignment_to_json(ratios: Mapping[str, Fraction]) -> dict:
    return {"ratios": {k: q(v) for k, v in sorted(ratios.items())}}


def assignment_from_json(data: Any) -> dict[str, Fraction]:
    if isinstance(data, dict) and "ratios" in data:
        data = data["ratios"]
    if not isinstance(data, dict):
        raise InvalidInputError("assignment JSON needs a 'ratios' object")
    out = {}
    for k, v in data.items():
        x = _rational(v)
        if x <= 0:
            raise InvalidInputError(f"ratio of {k} must be positive")
        out[str(k)] = x
    return out


def segment_to_json(s: MaximalSegment) -> dict:
    (x0, y0), (x1, y1) = s.endpoints()
    return {"orientation": s.orientation, "from": [q(x0), q(y0)], "to": [q(x1), q(y1)]}


def contact_to_json(c: Contact) -> dict:
    return {"a": c.a, "b": c.b, "orientation": c.orientation}


def load_json(path) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise InvalidInputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"{path} is not valid JSON: {exc.msg}") from exc


def dumps(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=False)
