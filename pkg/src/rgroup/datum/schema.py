# Libraries
from jsonschema import Draft202012Validator

_NAME = {"type": "string", "pattern": "^[A-Za-z_][A-Za-z0-9_]*$"}
_LABEL = {"type": "string", "minLength": 1}
_WORD = {"type": "string", "minLength": 1}
_LABEL_MAP = {"type": "object", "additionalProperties": _LABEL}

DATUM_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "rgroup inducing datum",
    "type": "object",
    "required": ["group", "twists", "labels", "actions", "pi", "delta_prime", "w_sigma_hat"],
    "additionalProperties": False,
    "properties": {
        "group": {
            "type": "object",
            "required": ["r", "blocks", "m"],
            "additionalProperties": False,
            "properties": {
                "r": {"type": "integer", "minimum": 1},
                "blocks": {"type": "array", "minItems": 1, "items": {"type": "integer", "minimum": 1}},
                "m": {"type": "integer", "minimum": 0},
                "parity": {"enum": ["even", "odd"]},
            },
        },
        "twists": {
            "type": "object",
            "required": ["generators"],
            "additionalProperties": False,
            "properties": {
                "generators": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["name", "order"],
                        "additionalProperties": False,
                        "properties": {"name": _NAME, "order": {"type": "integer", "minimum": 1}},
                    },
                },
                "eps": {"type": "object", "additionalProperties": _WORD},
            },
        },
        "labels": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["id", "size"],
                "additionalProperties": False,
                "properties": {"id": _LABEL, "size": {"type": "integer", "minimum": 1}},
            },
        },
        "actions": {
            "type": "object",
            "additionalProperties": False,
            "properties": {
                "chi": {"type": "object", "additionalProperties": _LABEL_MAP},
                "eps": _LABEL_MAP,
            },
        },
        "pi": {
            "type": "object",
            "required": ["components"],
            "additionalProperties": False,
            "properties": {
                "components": {"type": "array", "minItems": 1, "items": _LABEL},
                "tau": {
                    "type": ["object", "null"],
                    "required": ["x_tau"],
                    "additionalProperties": False,
                    "properties": {
                        "x_tau": {"type": "array", "items": _WORD},
                        "generic": {"type": "boolean"},
                        "mult_one": {"type": "boolean"},
                    },
                },
            },
        },
        "delta_prime": {
            "type": "array",
            "items": {"type": "string", "pattern": r"^(e\d+[+-]e\d+|short:\d+)$"},
        },
        "w_sigma_hat": {
            "oneOf": [
                {"const": "infer"},
                {"type": "array", "minItems": 1, "items": _WORD},
            ]
        },
        "notes": {"type": "string"},
    },
}

_VALIDATOR = Draft202012Validator(DATUM_SCHEMA)


def schema_errors(document) -> list[str]:
    """All schema violations as 'path: message', ordered by location."""
    errors = sorted(_VALIDATOR.iter_errors(document), key=lambda e: list(map(str, e.path)))
    return [f"{'/'.join(str(p) for p in e.path) or '<root>'}: {e.message}" for e in errors]
