"""JSON Schemas for the documents emitted by the command line tool.

Every document carries ``schema_version``; large integers are decimal strings.
"""

_ORDER_STR = {"type": "string", "pattern": "^[0-9]+$"}
_VERSION = {"const": 1}
_PARAMS = {
    "type": "object",
    "required": ["m", "k", "y", "c"],
    "properties": {k: {"type": "integer", "minimum": 1} for k in ("m", "k", "y", "c")},
    "additionalProperties": False,
}

ORDER = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "shuffle group order",
    "type": "object",
    "required": ["schema_version", "deck", "m", "engine", "order", "in_order", "out_order"],
    "properties": {
        "schema_version": _VERSION,
        "deck": {"type": "integer", "minimum": 1},
        "m": {"type": "integer", "minimum": 2},
        "engine": {"enum": ["bfs", "chain"]},
        "order": _ORDER_STR,
        "in_order": {"type": "integer", "minimum": 1},
        "out_order": {"type": "integer", "minimum": 1},
    },
    "additionalProperties": False,
}

TABLE = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "shuffle group order table",
    "type": "object",
    "required": ["schema_version", "max_deck", "rows"],
    "properties": {
        "schema_version": _VERSION,
        "max_deck": {"type": "integer"},
        "rows": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["deck", "m", "order"],
                "properties": {
                    "deck": {"type": "integer", "minimum": 4},
                    "m": {"type": "integer", "minimum": 2},
                    "order": _ORDER_STR,
                },
                "additionalProperties": False,
            },
        },
    },
    "additionalProperties": False,
}

PREDICTION = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "structure prediction",
    "type": "object",
    "required": ["schema_version", "params", "t", "abelian_rank", "action",
                 "predicted_order", "structure"],
    "properties": {
        "schema_version": _VERSION,
        "params": _PARAMS,
        "t": {"type": "integer", "minimum": 1},
        "abelian_rank": {"type": "integer", "minimum": 0},
        "action": {"enum": ["cyclic-shift", "twisted"]},
        "predicted_order": _ORDER_STR,
        "structure": {"type": "string"},
    },
    "additionalProperties": False,
}

VERIFICATION = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "structure verification report",
    "type": "object",
    "required": ["schema_version", "params", "predicted_order", "computed_order",
                 "order_matches", "generator_checks", "commutation_ok", "conjugation_ok",
                 "product_relation_ok", "complement_ok", "verdict"],
    "properties": {
        "schema_version": _VERSION,
        "params": _PARAMS,
        "predicted_order": _ORDER_STR,
        "computed_order": _ORDER_STR,
        "order_matches": {"type": "boolean"},
        "generator_checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["label", "involution", "digit_action_matches"],
                "properties": {
                    "label": {"type": "string"},
                    "involution": {"type": "boolean"},
                    "digit_action_matches": {"type": "boolean"},
                },
                "additionalProperties": False,
            },
        },
        "commutation_ok": {"type": "boolean"},
        "conjugation_ok": {"type": "boolean"},
        "product_relation_ok": {"type": ["boolean", "null"]},
        "complement_ok": {"type": "boolean"},
        "verdict": {"type": "boolean"},
    },
    "additionalProperties": False,
}

TRACE = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "card position trace",
    "type": "object",
    "required": ["schema_version", "deck", "m", "card", "sequence", "positions"],
    "properties": {
        "schema_version": _VERSION,
        "deck": {"type": "integer", "minimum": 1},
        "m": {"type": "integer", "minimum": 2},
        "card": {"type": "integer", "minimum": 0},
        "sequence": {"type": "string", "pattern": "^[OI]*$"},
        "positions": {"type": "array", "items": {"type": "integer", "minimum": 0}},
    },
    "additionalProperties": False,
}
