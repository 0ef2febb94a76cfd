"""JSON Schemas for every ``--json`` output of the CLI.

Exact rationals are strings matching ``RATIONAL``; approximations are numbers
in fields whose names end in ``_approx``.
"""

RATIONAL = {"type": "string", "pattern": r"^-?[0-9]+(/[0-9]+)?$"}
_PARTITION = {"type": "array", "items": {"type": "integer", "minimum": 1}}
_INT_MATRIX = {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}}
_COEFFS = {"type": "object", "additionalProperties": RATIONAL}


def _obj(properties: dict, required=None) -> dict:
    return {
        "type": "object",
        "properties": properties,
        "required": list(properties) if required is None else required,
        "additionalProperties": False,
    }


JSON_SCHEMAS = {
    "partitions": _obj(
        {"k": {"type": "integer"}, "count": {"type": "integer"}, "partitions": {"type": "array", "items": _PARTITION}}
    ),
    "ssyt": _obj(
        {
            "shape": _PARTITION,
            "count": {"type": "integer"},
            "tableaux": {"type": "array", "items": _INT_MATRIX},
            "max_entry": {"type": "integer"},
            "content": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        },
        required=["shape", "count", "tableaux"],
    ),
    "kostka": _obj({"shape": _PARTITION, "content": {"type": "array", "items": {"type": "integer"}},
                    "kostka": {"type": "integer", "minimum": 0}}),
    "kostka-matrix": _obj(
        {
            "k": {"type": "integer"},
            "order": {"type": "array", "items": _PARTITION},
            "matrix": _INT_MATRIX,
            "k_lambda": {"type": "array", "items": {"type": "integer"}},
            "inverse": _INT_MATRIX,
        },
        required=["k", "order", "matrix", "k_lambda"],
    ),
    "schur-expand": _obj(
        {
            "input": {"type": "string"},
            "monomial": {"type": "string"},
            "coefficients": _COEFFS,
            "vars": {"type": "integer"},
            "expansion": {
                "type": "array",
                "items": _obj({"exponents": {"type": "array", "items": {"type": "integer"}}, "coefficient": RATIONAL}),
            },
        },
        required=["input", "monomial", "coefficients"],
    ),
    "to-schur": _obj({"input": {"type": "string"}, "schur": {"type": "string"}, "coefficients": _COEFFS}),
    "positivity": _obj(
        {"input": {"type": "string"}, "schur_positive": {"type": "boolean"}, "schur": {"type": "string"},
         "coefficients": _COEFFS}
    ),
    "probability": _obj(
        {
            "k": {"type": "integer"},
            "method": {"enum": ["formula", "slice"]},
            "probability": RATIONAL,
            "probability_approx": {"type": "number"},
            "k_lambda": {"type": "object", "additionalProperties": {"type": "integer", "minimum": 1}},
        }
    ),
    "sample": _obj(
        {
            "degree": {"type": "integer"},
            "samples": {"type": "integer"},
            "seed": {"type": "integer"},
            "positive": {"type": "integer", "minimum": 0},
            "estimate": RATIONAL,
            "standard_error": {"type": "number", "minimum": 0},
            "exact": RATIONAL,
            "estimate_approx": {"type": "number"},
            "exact_approx": {"type": "number"},
        }
    ),
    "bialternant": _obj({"partition": _PARTITION, "point": {"type": "array", "items": RATIONAL}, "value": RATIONAL}),
    "char": _obj(
        {
            "mode": {"enum": ["sym2", "schur"]},
            "matrix": {"type": "array", "items": {"type": "array", "items": RATIONAL}},
            "partition": _PARTITION,
            "eigenvalues": {"type": "array", "items": RATIONAL},
            "value": RATIONAL,
        },
        required=["mode", "value"],
    ),
}
