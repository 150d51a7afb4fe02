"""Bit-exact JSON serialization of designs, reports and fingerprints.

The interchange format is canonical JSON: UTF-8, lexicographically sorted
keys, minimal separators, integers only, one trailing newline.  Parsing
validates the schema and reports violations with a JSON path; a parsed
document re-serializes to the identical bytes.
"""

from __future__ import annotations

import json
from typing import Any

from .designs import Design, Params
from .errors import DocumentError
from .gf import GF
from .verify import Fingerprint

SCHEMA_VERSION = 1


def field_to_json(field: GF) -> dict:
    return {"p": field.p, "e": field.e, "modulus": list(field.modulus)}


def field_from_json(obj: Any, path: str) -> GF:
    if not isinstance(obj, dict):
        raise DocumentError(path, "field must be an object")
    for key in ("p", "e", "modulus"):
        if key not in obj:
            raise DocumentError(f"{path}/{key}", "missing")
    p, e, modulus = obj["p"], obj["e"], obj["modulus"]
    if not isinstance(p, int) or not isinstance(e, int):
        raise DocumentError(path, "p and e must be integers")
    if not isinstance(modulus, list) or not all(isinstance(c, int) for c in modulus):
        raise DocumentError(f"{path}/modulus", "must be a list of integers")
    try:
        return GF(p, e, modulus)
    except ValueError as exc:
        raise DocumentError(path, str(exc)) from exc


def _point_to_json(point: Any, field: GF | None, ambient_dim: int | None) -> Any:
    if ambient_dim is not None and field is not None:
        if field.e == 1:
            return list(point)
        return [list(field.coeffs(x)) for x in point]
    if isinstance(point, tuple):
        return [_label_to_json(x) for x in point]
    return _label_to_json(point)


def _label_to_json(label: Any) -> Any:
    if isinstance(label, tuple):
        return [_label_to_json(x) for x in label]
    if isinstance(label, (int, str)):
        return label
    raise DocumentError("/points", f"unsupported label type {type(label).__name__}")


def _label_from_json(obj: Any, path: str) -> Any:
    if isinstance(obj, list):
        return tuple(_label_from_json(x, path) for x in obj)
    if isinstance(obj, (int, str)):
        return obj
    raise DocumentError(path, f"unsupported label type {type(obj).__name__}")


def _point_from_json(obj: Any, field: GF | None, ambient_dim: int | None, path: str) -> Any:
    if ambient_dim is None or field is None:
        return _label_from_json(obj, path)
    if not isinstance(obj, list) or len(obj) != ambient_dim + 1:
        raise DocumentError(path, f"coordinate array must have length {ambient_dim + 1}")
    coords = []
    for i, entry in enumerate(obj):
        if field.e == 1:
            if not isinstance(entry, int):
                raise DocumentError(f"{path}/{i}", "coordinate must be an integer")
            if not 0 <= entry < field.q:
                raise DocumentError(f"{path}/{i}", f"coordinate {entry} out of range [0, {field.q})")
            coords.append(entry)
        else:
            if not isinstance(entry, list) or len(entry) != field.e:
                raise DocumentError(f"{path}/{i}", f"coordinate must be a list of {field.e} residues")
            try:
                coords.append(field.from_coeffs(entry))
            except ValueError as exc:
                raise DocumentError(f"{path}/{i}", str(exc)) from exc
    return tuple(coords)


def design_to_document(design: Design, fp: Fingerprint | None = None) -> dict:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "field": field_to_json(design.field) if design.field is not None else None,
        "ambient_dim": design.ambient_dim,
        "points": [_point_to_json(p, design.field, design.ambient_dim) for p in design.points],
        "classes": [list(c) for c in design.classes],
        "blocks": [list(b) for b in design.blocks],
        "params": {
            "t": design.params.t,
            "s": design.params.s,
            "k": design.params.k,
            "lambda": design.params.lam,
        },
        "provenance": design.provenance,
    }
    if fp is not None:
        doc["fingerprint"] = fp.to_dict()
    return doc


def _require_int_list(obj: Any, path: str) -> list[int]:
    if not isinstance(obj, list) or not all(isinstance(x, int) for x in obj):
        raise DocumentError(path, "must be a list of integers")
    return obj


def _forbid_floats(obj: Any, path: str) -> None:
    if isinstance(obj, float):
        raise DocumentError(path, "floating point values are not allowed")
    if isinstance(obj, dict):
        for k, v in obj.items():
            _forbid_floats(v, f"{path}/{k}")
    elif isinstance(obj, list):
        for i, v in enumerate(obj):
            _forbid_floats(v, f"{path}/{i}")


def document_to_design(doc: Any) -> Design:
    if not isinstance(doc, dict):
        raise DocumentError("/", "document must be a JSON object")
    _forbid_floats(doc, "")
    version = doc.get("schema_version")
    if version != SCHEMA_VERSION:
        raise DocumentError("/schema_version", f"unsupported version {version!r}, expected {SCHEMA_VERSION}")
    for key in ("field", "ambient_dim", "points", "classes", "blocks", "params", "provenance"):
        if key not in doc:
            raise DocumentError(f"/{key}", "missing")
    unknown = set(doc) - {
        "schema_version", "field", "ambient_dim", "points", "classes", "blocks",
        "params", "provenance", "fingerprint",
    }
    if unknown:
        raise DocumentError(f"/{sorted(unknown)[0]}", "unknown key")

    field = None if doc["field"] is None else field_from_json(doc["field"], "/field")
    ambient = doc["ambient_dim"]
    if ambient is not None and (not isinstance(ambient, int) or ambient < 0):
        raise DocumentError("/ambient_dim", "must be null or a non-negative integer")
    if ambient is not None and field is None:
        raise DocumentError("/field", "coordinates need a field")

    raw_points = doc["points"]
    if not isinstance(raw_points, list) or not raw_points:
        raise DocumentError("/points", "must be a non-empty array")
    points = [
        _point_from_json(p, field, ambient, f"/points/{i}") for i, p in enumerate(raw_points)
    ]
    v = len(points)

    raw_classes = doc["classes"]
    if not isinstance(raw_classes, list) or not raw_classes:
        raise DocumentError("/classes", "must be a non-empty array")
    classes = []
    for i, cls in enumerate(raw_classes):
        members = _require_int_list(cls, f"/classes/{i}")
        if members != sorted(members):
            raise DocumentError(f"/classes/{i}", "class members must be sorted ascending")
        classes.append(tuple(members))

    raw_blocks = doc["blocks"]
    if not isinstance(raw_blocks, list):
        raise DocumentError("/blocks", "must be an array")
    blocks = []
    for i, blk in enumerate(raw_blocks):
        members = _require_int_list(blk, f"/blocks/{i}")
        if members != sorted(set(members)):
            raise DocumentError(f"/blocks/{i}", "block must be sorted ascending without repeats")
        if members and (members[0] < 0 or members[-1] >= v):
            raise DocumentError(f"/blocks/{i}", "block contains out-of-range point ids")
        blocks.append(tuple(members))
    if blocks != sorted(blocks):
        raise DocumentError("/blocks", "block list must be sorted lexicographically")

    raw_params = doc["params"]
    if not isinstance(raw_params, dict):
        raise DocumentError("/params", "must be an object")
    for key in ("t", "s", "k", "lambda"):
        if key not in raw_params:
            raise DocumentError(f"/params/{key}", "missing")
        if not isinstance(raw_params[key], int) or raw_params[key] < 1:
            raise DocumentError(f"/params/{key}", "must be a positive integer")
    params = Params(raw_params["t"], raw_params["s"], raw_params["k"], raw_params["lambda"])

    provenance = doc["provenance"]
    if not isinstance(provenance, dict):
        raise DocumentError("/provenance", "must be an object")

    from .errors import ConstructionError

    try:
        return Design(params, points, classes, blocks, field=field, ambient_dim=ambient, provenance=provenance)
    except ConstructionError as exc:
        raise DocumentError("/", str(exc)) from exc


def serialize_document(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False, allow_nan=False) + "\n"


def serialize_design(design: Design, fp: Fingerprint | None = None) -> str:
    return serialize_document(design_to_document(design, fp))


def parse_document(text: str) -> Design:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError("/", f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    return document_to_design(doc)


def parse_document_raw(text: str) -> dict:
    """Parse and validate, returning the raw document dict (fingerprint kept)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError("/", f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    document_to_design(doc)
    return doc
