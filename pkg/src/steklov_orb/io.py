"""JSON encodings. Rationals travel as strings ``"p/q"``; never as floats."""

from __future__ import annotations

from fractions import Fraction

import jsonschema

from .ball_quotients import FLOAT, RATIONAL, FourierDTN, HarmonicDimensionTable, OrthogonalGroup, close_group
from .bounds import CellComplex
from .errors import DomainError
from .spectra import ArithmeticSpectrum, BoundaryData, SpectrumView, Unit, as_rational, fmt_rational
from .sunada import FiniteGroup, SubgroupCollection

RATIONAL_RE = r"^\s*[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?(\s*/\s*[+-]?\d+)?\s*$"
_rational = {"type": "string", "pattern": RATIONAL_RE}
_index_list = {"type": "array", "items": {"type": "integer", "minimum": 0}}

SCHEMAS = {
    "boundary": {
        "type": "object",
        "properties": {
            "type_one": {"type": "array", "items": _rational},
            "type_two": {"type": "array", "items": _rational},
        },
        "required": ["type_one", "type_two"],
        "additionalProperties": False,
    },
    "spectrum": {
        "type": "object",
        "properties": {
            "unit": {"enum": ["pi", "abs"]},
            "zeros": {"type": "integer", "minimum": 0},
            "progressions": {"type": "array", "items": {
                "type": "array", "prefixItems": [_rational, {"type": "integer", "minimum": 1}],
                "minItems": 2, "maxItems": 2}},
        },
        "required": ["unit", "zeros", "progressions"],
    },
    "view": {
        "type": "object",
        "properties": {"unit": {"enum": ["pi", "abs"]}, "values": {"type": "array", "items": _rational}},
        "required": ["unit", "values"],
    },
    "orthogonal_group": {
        "type": "object",
        "properties": {
            "dim": {"type": "integer", "minimum": 1},
            "mode": {"enum": [RATIONAL, FLOAT]},
            "generators": {"type": "array", "minItems": 1,
                           "items": {"type": "array", "items": _rational}},
            "max_order": {"type": "integer", "minimum": 1},
        },
        "required": ["dim", "mode", "generators"],
    },
    "matrix_action": {
        "type": "object",
        "properties": {
            "dim": {"type": "integer", "minimum": 1},
            "mode": {"enum": [RATIONAL, FLOAT]},
            "images": {"type": "array", "minItems": 1, "items": {"type": "array", "items": _rational}},
        },
        "required": ["dim", "mode", "images"],
    },
    "finite_group": {
        "type": "object",
        "properties": {
            "order": {"type": "integer", "minimum": 1},
            "table": {"type": "array", "items": _index_list},
            "labels": {"type": "array", "items": {"type": "string"}},
        },
        "required": ["order", "table"],
    },
    "collections": {
        "type": "object",
        "properties": {"H": {"type": "array", "items": _index_list},
                       "K": {"type": "array", "items": _index_list}},
        "required": ["H", "K"],
    },
    "cells": {
        "type": "object",
        "properties": {"cells": {"type": "array", "items": {
            "type": "array", "prefixItems": [{"enum": [0, 1, 2]}, {"type": "integer", "minimum": 1}],
            "minItems": 2, "maxItems": 2}}},
        "required": ["cells"],
    },
}


def validate(doc, schema_name: str):
    try:
        jsonschema.validate(doc, SCHEMAS[schema_name])
    except jsonschema.ValidationError as exc:
        raise DomainError(f"invalid {schema_name} JSON: {exc.message}") from exc
    return doc


def rat(x: Fraction) -> str:
    return fmt_rational(x)


# -- encoders ----------------------------------------------------------------------

def boundary_to_json(bd: BoundaryData) -> dict:
    return {"type_one": [rat(x) for x in bd.type_one], "type_two": [rat(x) for x in bd.type_two]}


def spectrum_to_json(spec: ArithmeticSpectrum) -> dict:
    return {"unit": spec.unit.value, "zeros": spec.zeros,
            "progressions": [[rat(d), m] for d, m in spec.progressions]}


def view_to_json(view: SpectrumView, with_float: bool = False) -> dict:
    out = {"unit": view.unit.value, "values": [rat(v) for v in view.values]}
    if with_float:
        out["values_approx"] = [float(v) for v in view.values]
        out["approximate_note"] = ("decimal renderings are approximate"
                                   + ("; multiply by pi" if view.unit is Unit.PI else ""))
    return out


def dtn_to_json(op: FourierDTN) -> dict:
    return {"label": op.label, "modes": list(range(op.modes + 1)),
            "eigenvalues": [rat(v) for v in op.eigenvalues]}


def dims_to_json(table: HarmonicDimensionTable) -> dict:
    return {"dim": table.dim, "group_order": table.group_order, "max_degree": table.max_degree,
            "dims": list(table.dims)}


# -- decoders ----------------------------------------------------------------------

def boundary_from_json(doc) -> BoundaryData:
    validate(doc, "boundary")
    return BoundaryData(tuple(doc["type_one"]), tuple(doc["type_two"]))


def spectrum_from_json(doc) -> ArithmeticSpectrum:
    validate(doc, "spectrum")
    return ArithmeticSpectrum(Unit(doc["unit"]), doc["zeros"],
                              tuple((as_rational(d), m) for d, m in doc["progressions"]))


def view_from_json(doc) -> SpectrumView:
    validate(doc, "view")
    return SpectrumView(Unit(doc["unit"]), tuple(doc["values"]))


def _square(flat: list, n: int, what: str):
    if len(flat) != n * n:
        raise DomainError(f"{what}: expected {n * n} row-major entries, got {len(flat)}")
    return [flat[i * n:(i + 1) * n] for i in range(n)]


def _matrix(flat, n, mode, what):
    rows = _square(flat, n, what)
    if mode == RATIONAL:
        return [[as_rational(x) for x in row] for row in rows]
    return [[float(as_rational(x)) for x in row] for row in rows]


def group_from_json(doc) -> OrthogonalGroup:
    validate(doc, "orthogonal_group")
    n, mode = doc["dim"], doc["mode"]
    gens = [_matrix(g, n, mode, f"generator {i}") for i, g in enumerate(doc["generators"])]
    return close_group(gens, max_order=doc.get("max_order", 100_000), mode=mode)


def group_to_json(group: OrthogonalGroup, max_order: int | None = None) -> dict:
    def enc(x):
        return rat(x) if group.mode == RATIONAL else repr(float(x))
    return {"dim": group.dim, "mode": group.mode,
            "generators": [[enc(x) for row in g for x in row] for g in group.generators],
            "max_order": max_order or group.order}


def action_images_from_json(doc) -> list:
    validate(doc, "matrix_action")
    n, mode = doc["dim"], doc["mode"]
    return [_matrix(g, n, mode, f"image {i}") for i, g in enumerate(doc["images"])]


def finite_group_from_json(doc) -> FiniteGroup:
    validate(doc, "finite_group")
    if len(doc["table"]) != doc["order"]:
        raise DomainError("table size does not match order")
    return FiniteGroup(tuple(tuple(r) for r in doc["table"]), tuple(doc.get("labels", ())))


def finite_group_to_json(group: FiniteGroup) -> dict:
    return {"order": group.order, "table": [list(r) for r in group.table], "labels": list(group.labels)}


def collections_from_json(doc) -> tuple[SubgroupCollection, SubgroupCollection]:
    validate(doc, "collections")
    return (SubgroupCollection(tuple(frozenset(h) for h in doc["H"])),
            SubgroupCollection(tuple(frozenset(k) for k in doc["K"])))


def cells_from_json(doc) -> CellComplex:
    validate(doc, "cells")
    return CellComplex(tuple((d, k) for d, k in doc["cells"]))
