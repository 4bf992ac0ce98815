"""JSON Schema for the report written by ``cellci decide --json``."""

_MONOMIAL = {"type": "string", "pattern": r"^(1|x_-?\d+_-?\d+(\^\d+)?(\*x_-?\d+_-?\d+(\^\d+)?)*)$"}

CERTIFICATE_SCHEMA = {
    "type": "object",
    "required": ["verdict", "branch"],
    "properties": {
        "verdict": {"type": "boolean"},
        "branch": {"enum": ["chessboard-positive", "edge-negative"]},
        "vertex_order": {"type": "array", "items": {"type": "string", "pattern": r"^-?\d+ -?\d+$"}},
        "leading_terms": {"type": "array", "items": _MONOMIAL},
        "witness": {
            "type": "array", "minItems": 2, "maxItems": 2,
            "items": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
        },
        "mu": {"type": "integer", "minimum": 0},
        "height_bound": {"type": "integer", "minimum": 0},
        "note": {"type": "string"},
    },
    "additionalProperties": False,
}

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": [
        "rank", "vertices", "mu", "height", "lattice_rank", "is_chessboard",
        "is_ci", "status", "certificate", "engine",
    ],
    "properties": {
        "rank": {"type": "integer", "minimum": 0},
        "vertices": {"type": "integer", "minimum": 0},
        "mu": {"type": "integer", "minimum": 0},
        "height": {"type": ["integer", "null"], "minimum": 0},
        "lattice_rank": {"type": "integer", "minimum": 0},
        "is_chessboard": {"type": "boolean"},
        "is_ci": {"type": "boolean"},
        "status": {"enum": ["verified", "unverified", "violation"]},
        "initial_ideal_ci": {"type": ["boolean", "null"]},
        "height_equals_rank": {"type": ["boolean", "null"]},
        "certificate": CERTIFICATE_SCHEMA,
        "engine": {
            "type": "object",
            "required": ["order", "spairs_processed", "budget"],
            "properties": {
                "order": {"type": "string"},
                "spairs_processed": {"type": "integer", "minimum": 0},
                "budget": {"type": "integer", "minimum": 0},
                "offset": {"type": "array", "items": {"type": "integer"}},
                "basis_size": {"type": "integer", "minimum": 0},
            },
        },
        "timings": {"type": "object", "additionalProperties": {"type": "number"}},
    },
    "additionalProperties": False,
}
