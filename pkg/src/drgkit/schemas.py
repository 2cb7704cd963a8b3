"""JSON schemas for ``--format structured`` output, one per subcommand.

Exact rationals that are not integers are serialized as "p/q" strings, so
numeric fields accept either a number or such a string.
"""

from __future__ import annotations

NUMBER = {"anyOf": [{"type": "number"}, {"type": "string", "pattern": r"^-?\d+/\d+$"}]}
OPT_NUMBER = {"anyOf": [NUMBER, {"type": "null"}]}
OPT_BOOL = {"type": ["boolean", "null"]}

PARAMS = {
    "type": "object",
    "required": ["n", "k", "lambda", "mu"],
    "properties": {
        "n": {"type": "integer"},
        "k": {"type": "integer"},
        "lambda": {"type": "integer"},
        "mu": {"type": "integer"},
        "mu_exact": {"type": "boolean"},
    },
}

ARRAY = {
    "type": "object",
    "required": ["b", "c"],
    "properties": {
        "b": {"type": "array", "items": {"type": "integer"}},
        "c": {"type": "array", "items": {"type": "integer"}},
    },
}

WITNESS = {
    "anyOf": [
        {"type": "null"},
        {
            "type": "object",
            "required": ["t", "order_threshold"],
            "properties": {"t": {"type": "integer"}, "order_threshold": {"type": "integer"}},
        },
    ]
}

ENTRY = {
    "type": "object",
    "required": ["name", "holds"],
    "properties": {
        "name": {"type": "string"},
        "inputs": {"type": "object"},
        "bound": OPT_NUMBER,
        "observed": OPT_NUMBER,
        "holds": OPT_BOOL,
        "margin": OPT_NUMBER,
        "case": {"type": ["string", "null"]},
        "detail": {"type": "object"},
    },
}

RECORD = {
    "type": "object",
    "required": ["params", "tag", "families"],
    "properties": {
        "params": {"type": "array", "items": {"type": "integer"}, "minItems": 4, "maxItems": 4},
        "tag": {"type": "string"},
        "families": {"type": "array", "items": {"type": "string"}},
    },
}

LAMBDA_S = {
    "type": "object",
    "required": ["margin", "holds", "bang_koolen_margin", "bang_koolen_holds"],
    "properties": {
        "margin": NUMBER,
        "holds": {"type": "boolean"},
        "bang_koolen_margin": NUMBER,
        "bang_koolen_holds": {"type": "boolean"},
    },
}

GENERATE = {
    "type": "object",
    "required": ["family", "vertex_count", "edge_count", "expected", "edges"],
    "properties": {
        "family": {"type": "string"},
        "vertex_count": {"type": "integer"},
        "edge_count": {"type": "integer"},
        "expected": {"anyOf": [PARAMS, {"type": "null"}]},
        "edges": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
        },
    },
}

ANALYZE = {
    "type": "object",
    "required": [
        "family", "params", "intersection_array", "strongly_regular", "eigenvalues",
        "satisfies_main", "metsch_t_min", "metsch_t_corollary",
    ],
    "properties": {
        "family": {"type": ["string", "null"]},
        "params": PARAMS,
        "intersection_array": {"anyOf": [ARRAY, {"type": "null"}]},
        "strongly_regular": {"type": "boolean"},
        "eigenvalues": {"anyOf": [{"type": "array", "items": NUMBER}, {"type": "null"}]},
        "satisfies_main": {"type": "boolean"},
        "metsch_t_min": WITNESS,
        "metsch_t_corollary": WITNESS,
        "claw": {
            "type": "object",
            "required": ["size", "found"],
            "properties": {"size": {"type": "integer"}, "found": {"type": "boolean"}},
        },
    },
}

GEOMETRY = {
    "type": "object",
    "required": [
        "family", "params", "t_mode", "axioms_verified", "clique_count",
        "order_histogram", "membership_histogram", "max_membership", "witness",
    ],
    "properties": {
        "family": {"type": ["string", "null"]},
        "params": PARAMS,
        "t_mode": {"enum": ["min", "corollary"]},
        "axioms_verified": {"const": True},
        "clique_count": {"type": "integer"},
        "order_histogram": {"type": "object", "additionalProperties": {"type": "integer"}},
        "membership_histogram": {"type": "object", "additionalProperties": {"type": "integer"}},
        "max_membership": {"type": "integer"},
        "witness": {
            "type": "object",
            "required": ["t", "order_threshold", "source"],
            "properties": {
                "t": {"type": "integer"},
                "order_threshold": {"type": "integer"},
                "source": {"enum": ["theorem-search", "corollary-formula"]},
            },
        },
        "delsarte_bound": {"type": "number"},
        "delsarte_ratios": {"type": "array", "items": {"type": "number"}},
        "all_delsarte": {"type": "boolean"},
        "note": {"type": "string"},
    },
}

BOUNDS = {
    "type": "object",
    "required": ["params", "source", "entries"],
    "properties": {
        "params": PARAMS,
        "source": {"type": "string"},
        "entries": {"type": "object", "additionalProperties": ENTRY},
    },
}

SPECTRA = {
    "anyOf": [
        {
            "type": "object",
            "required": ["params", "eigenvalues", "multiplicities", "r", "s", "integral"],
            "properties": {
                "params": PARAMS,
                "eigenvalues": {"type": "array", "items": NUMBER},
                "multiplicities": {"type": "array", "items": {"type": "integer"}},
                "r": NUMBER,
                "s": NUMBER,
                "integral": {"type": "boolean"},
                "lambda_s": LAMBDA_S,
            },
        },
        {
            "type": "object",
            "required": ["family", "intersection_array", "eigenvalues", "standard_sequences"],
            "properties": {
                "family": {"type": ["string", "null"]},
                "intersection_array": ARRAY,
                "eigenvalues": {"type": "array", "items": NUMBER},
                "standard_sequences": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["index", "theta", "values", "sign_changes"],
                        "properties": {
                            "index": {"type": "integer"},
                            "theta": NUMBER,
                            "values": {"type": "array", "items": NUMBER},
                            "sign_changes": {"type": ["integer", "null"]},
                        },
                    },
                },
                "lambda_s": LAMBDA_S,
            },
        },
    ]
}

SCAN = {
    "type": "object",
    "required": [
        "n_max", "filters_active", "table", "total_feasible", "main_satisfiers",
        "matched", "unmatched", "trivially_satisfying", "min_unmatched_n",
    ],
    "properties": {
        "n_max": {"type": "integer"},
        "filters_active": {"type": "array", "items": {"type": "string"}},
        "table": {"type": "boolean"},
        "total_feasible": {"type": "integer"},
        "main_satisfiers": {"type": "array", "items": RECORD},
        "matched": {"type": "array", "items": RECORD},
        "unmatched": {"type": "array", "items": RECORD},
        "trivially_satisfying": {"type": "array", "items": RECORD},
        "min_unmatched_n": {"type": ["integer", "null"]},
    },
}

SCHEMAS = {
    "generate": GENERATE,
    "analyze": ANALYZE,
    "geometry": GEOMETRY,
    "bounds": BOUNDS,
    "spectra": SPECTRA,
    "scan": SCAN,
}
