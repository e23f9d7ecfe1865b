"""JSON input documents.

Every rational travels as a ``"p/q"`` string. A document may carry an explicit
``"kind"``; otherwise the kind is inferred from its keys.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Union

from logpair.chern import Component, SurfaceChernData
from logpair.cones import LineArrangement, PolarizedCone, WeightedPlanePair
from logpair.errors import InputError, SchemaError
from logpair.euler import Rank2BundleData
from logpair.pairs import MarkedSphere
from logpair.rational import as_rat, render

KINDS = (
    "marked_sphere",
    "cone",
    "arrangement",
    "weighted_plane",
    "surface_chern",
    "bundle",
    "volume_formula",
)

Payload = Union[
    MarkedSphere,
    PolarizedCone,
    LineArrangement,
    WeightedPlanePair,
    SurfaceChernData,
    Rank2BundleData,
    dict,
]


@dataclass(frozen=True)
class InputDocument:
    kind: str
    payload: Any


def infer_kind(raw: dict) -> str:
    if "kind" in raw:
        kind = raw["kind"]
        if kind not in KINDS:
            raise SchemaError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
        return kind
    if "lines" in raw:
        return "arrangement"
    if "points" in raw:
        return "cone" if "polarization_degree" in raw else "marked_sphere"
    if "a" in raw and "b" in raw:
        return "weighted_plane"
    if "euler_number" in raw:
        return "surface_chern"
    if "e" in raw and "d" in raw:
        return "bundle"
    if "lambda" in raw:
        return "volume_formula"
    raise SchemaError(f"cannot infer document kind from keys {sorted(raw)}")


def _require(raw: dict, key: str) -> Any:
    try:
        return raw[key]
    except KeyError:
        raise SchemaError(f"missing field {key!r}") from None


def _list(raw: dict, key: str, default: Any = None) -> list:
    value = raw.get(key, default) if default is not None else _require(raw, key)
    if not isinstance(value, list):
        raise SchemaError(f"field {key!r} must be a list")
    return value


def _labelled(entries: list, weight_key: str = "delta") -> tuple[tuple[str, Any], ...]:
    out = []
    for entry in entries:
        if not isinstance(entry, dict):
            raise SchemaError(f"expected an object with label and {weight_key}, got {entry!r}")
        out.append((str(_require(entry, "label")), as_rat(_require(entry, weight_key))))
    return tuple(out)


def parse_document(raw: object) -> InputDocument:
    if not isinstance(raw, dict):
        raise SchemaError("input document must be a JSON object")
    kind = infer_kind(raw)
    try:
        payload = _PARSERS[kind](raw)
    except InputError:
        raise
    except (TypeError, ValueError) as exc:
        raise SchemaError(str(exc)) from exc
    return InputDocument(kind, payload)


def _sphere(raw: dict) -> MarkedSphere:
    return MarkedSphere(_labelled(_list(raw, "points")))


def _cone(raw: dict) -> PolarizedCone:
    return PolarizedCone(_sphere(raw), as_rat(_require(raw, "polarization_degree")))


def _arrangement(raw: dict) -> LineArrangement:
    return LineArrangement(_labelled(_list(raw, "lines")))


def _weighted_plane(raw: dict) -> WeightedPlanePair:
    return WeightedPlanePair(
        a=_require(raw, "a"),
        b=_require(raw, "b"),
        c0=as_rat(raw.get("c0", "0")),
        c_inf=as_rat(raw.get("c_inf", "0")),
        branches=_labelled(_list(raw, "branches", []), "c"),
    )


def _surface(raw: dict) -> SurfaceChernData:
    components = []
    for entry in _list(raw, "components", []):
        if not isinstance(entry, dict):
            raise SchemaError(f"component must be an object, got {entry!r}")
        components.append(
            Component(
                label=str(_require(entry, "label")),
                delta=as_rat(_require(entry, "delta")),
                self_int=_require(entry, "self_int"),
                K_dot=_require(entry, "K_dot"),
                genus=entry.get("genus"),
            )
        )
    pair_int = raw.get("pair_int", [])
    if not isinstance(pair_int, list) or not all(isinstance(r, list) for r in pair_int):
        raise SchemaError("pair_int must be a list of lists")
    return SurfaceChernData(
        euler_number=_require(raw, "euler_number"),
        K_squared=_require(raw, "K_squared"),
        components=tuple(components),
        pair_int=tuple(tuple(r) for r in pair_int),
    )


def _bundle(raw: dict) -> Rank2BundleData:
    return Rank2BundleData(
        e=as_rat(_require(raw, "e")),
        d=as_rat(_require(raw, "d")),
        sub_degrees=tuple(as_rat(s) for s in _list(raw, "sub_degrees", [])),
    )


def _volume_formula(raw: dict) -> dict:
    return {"lambda": as_rat(_require(raw, "lambda")), "Ln": as_rat(_require(raw, "Ln"))}


_PARSERS = {
    "marked_sphere": _sphere,
    "cone": _cone,
    "arrangement": _arrangement,
    "weighted_plane": _weighted_plane,
    "surface_chern": _surface,
    "bundle": _bundle,
    "volume_formula": _volume_formula,
}


def _points_json(points) -> list[dict]:
    return [{"label": label, "delta": render(d)} for label, d in points]


def document_to_json(doc: InputDocument) -> dict:
    """Canonical JSON form; ``parse_document`` of it reproduces ``doc``."""
    p = doc.payload
    if doc.kind == "marked_sphere":
        body = {"points": _points_json(p.points)}
    elif doc.kind == "cone":
        body = {
            "points": _points_json(p.base.points),
            "polarization_degree": render(p.polarization_degree),
        }
    elif doc.kind == "arrangement":
        body = {"lines": _points_json(p.weights)}
    elif doc.kind == "weighted_plane":
        body = {
            "a": p.a,
            "b": p.b,
            "c0": render(p.c0),
            "c_inf": render(p.c_inf),
            "branches": [{"label": label, "c": render(c)} for label, c in p.branches],
        }
    elif doc.kind == "surface_chern":
        comps = []
        for c in p.components:
            entry = {"label": c.label, "delta": render(c.delta), "self_int": c.self_int, "K_dot": c.K_dot}
            if c.genus is not None:
                entry["genus"] = c.genus
            comps.append(entry)
        body = {
            "euler_number": p.euler_number,
            "K_squared": p.K_squared,
            "components": comps,
            "pair_int": [list(row) for row in p.pair_int],
        }
    elif doc.kind == "bundle":
        body = {"e": render(p.e), "d": render(p.d), "sub_degrees": [render(s) for s in p.sub_degrees]}
    else:
        body = {"lambda": render(p["lambda"]), "Ln": render(p["Ln"])}
    return {"kind": doc.kind, **body}
