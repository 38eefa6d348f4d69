"""JSON schemas for everything the command line writes."""

from __future__ import annotations

import jsonschema

_edge = {"type": "array", "items": {"type": "integer", "minimum": 0}, "minItems": 2, "maxItems": 2}
_rational = {"type": "string", "pattern": r"^-?\d+/\d+$"}

VIOLATION = {
    "type": "object",
    "required": ["ok"],
    "properties": {
        "ok": {"type": "boolean"},
        "violation": {
            "type": ["object", "null"],
            "required": ["kind", "edges", "colors"],
            "properties": {
                "kind": {"enum": ["proper", "bichromatic"]},
                "edges": {"type": "array", "items": _edge},
                "colors": {"type": "array", "items": {"type": "integer"}},
                "cycle": {"type": "array", "items": {"type": "integer"}},
                "vertex": {"type": "integer"},
            },
        },
        "error": {"type": "string"},
    },
}

CONFIGURATION = {
    "type": ["object", "null"],
    "required": ["tag", "witness", "delta"],
    "properties": {
        "tag": {"type": "string", "pattern": r"^A[1-8]\.[1-8]$"},
        "witness": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "delta": {"type": "integer"},
    },
}

TRACE = {
    "type": "object",
    "required": ["input", "palette_size", "colors_used", "ok", "blocks", "steps"],
    "properties": {
        "input": {"type": "string"},
        "palette_size": {"type": "integer"},
        "colors_used": {"type": "integer"},
        "ok": {"type": "boolean"},
        "blocks": {"type": "integer"},
        "steps": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["tag", "kind", "rung", "nodes"],
                "properties": {
                    "tag": {"type": ["string", "null"]},
                    "kind": {"enum": ["BaseDistinct", "MergeA11", "MergeA22", "DeleteEdge"]},
                    "rung": {"type": ["integer", "null"], "minimum": 0, "maximum": 4},
                    "nodes": {"type": "integer", "minimum": 0},
                },
            },
        },
    },
}

DISCHARGE = {
    "type": "object",
    "required": ["h", "faces", "initial", "transfers", "final", "total", "near_misses"],
    "properties": {
        "total": _rational,
        "transfers": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["rule", "source", "sink", "amount"],
                "properties": {"rule": {"type": "string"}, "source": {"type": "string"},
                               "sink": {"type": "string"}, "amount": _rational,
                               "via": {"type": ["string", "null"]}},
            },
        },
        "final": {
            "type": "array",
            "items": {"type": "object", "required": ["element", "charge", "positive"],
                      "properties": {"charge": _rational, "positive": {"type": "boolean"}}},
        },
    },
}

ORACLE = {
    "type": "object",
    "required": ["result"],
    "properties": {
        "result": {"enum": ["Index", "Some", "No", "BudgetExceeded"]},
        "index": {"type": "integer"},
        "k": {"type": "integer"},
        "nodes": {"type": "integer"},
    },
}

MANIFEST = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["name", "n", "m", "delta", "seed"],
        "properties": {"name": {"type": "string"}, "n": {"type": "integer"}, "m": {"type": "integer"},
                       "delta": {"type": "integer"}, "seed": {"type": ["integer", "null"]}},
    },
}


def validate(doc, schema) -> None:
    jsonschema.validate(doc, schema)
