"""JSON schemas for the command-line interfaces and file formats."""

SURFACE = {
    "type": "object",
    "properties": {
        "g": {"type": "integer", "minimum": 0},
        "b": {"type": "integer", "minimum": 0},
    },
    "required": ["g", "b"],
    "additionalProperties": False,
}

RANK_OUTPUT = {
    "type": "object",
    "properties": {
        "g": {"type": "integer"},
        "b": {"type": "integer"},
        "k": {"type": "integer"},
        "rank": {"type": "integer"},
    },
    "required": ["g", "b", "k", "rank"],
    "additionalProperties": False,
}

MU_OUTPUT = {
    "type": "object",
    "properties": {
        "g": {"type": "integer"},
        "b": {"type": "integer"},
        "xi": {"type": "integer"},
        "mu": {"type": "integer"},
        "source": {"enum": ["formula", "oracle"]},
    },
    "required": ["g", "b", "xi", "mu", "source"],
    "additionalProperties": False,
}

CLASSIFY_OUTPUT = {
    "type": "object",
    "properties": {
        "g": {"type": "integer"},
        "b": {"type": "integer"},
        "k": {"type": "integer"},
        "rank": {"type": "integer"},
        "classification": {
            "enum": ["hyperbolic", "relatively_hyperbolic", "thick"]
        },
        "classification_formula": {
            "enum": ["hyperbolic", "relatively_hyperbolic", "thick"]
        },
        "classification_oracle": {
            "enum": ["hyperbolic", "relatively_hyperbolic", "thick"]
        },
        "source": {"enum": ["formula", "oracle", "both"]},
        "match": {"type": "boolean"},
    },
    "required": ["g", "b", "k", "source"],
    "additionalProperties": False,
}

GLUING_PATTERN = {
    "type": "object",
    "properties": {
        "pieces": {"type": "array", "items": SURFACE},
        "edges": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {"type": "integer", "minimum": 0},
                "minItems": 2,
                "maxItems": 2,
            },
        },
    },
    "required": ["pieces", "edges"],
    "additionalProperties": False,
}

MULTICURVE = {
    "type": "object",
    "properties": {
        "surface": SURFACE,
        "components": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "weights": {
                        "type": "array",
                        "items": {"type": "integer", "minimum": 0},
                    },
                    "mult": {"type": "integer", "minimum": 1},
                },
                "required": ["weights"],
                "additionalProperties": False,
            },
        },
    },
    "required": ["components"],
    "additionalProperties": False,
}

TRIANGULATION = {
    "type": "object",
    "properties": {
        "surface": SURFACE,
        "triangles": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {
                    "type": "object",
                    "properties": {
                        "edge": {"type": "integer", "minimum": 0},
                        "side": {"enum": [0, 1]},
                    },
                    "required": ["edge", "side"],
                    "additionalProperties": False,
                },
                "minItems": 3,
                "maxItems": 3,
            },
        },
    },
    "required": ["triangles"],
    "additionalProperties": False,
}

GRAPH = {
    "type": "object",
    "properties": {
        "kind": {"enum": ["multicurve", "interpolating"]},
        "param": {"type": "integer", "minimum": 1},
        "max_weight": {"type": "integer", "minimum": 1},
        "surface": SURFACE,
        "vertices": {"type": "array", "items": MULTICURVE},
        "edges": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {"type": "integer", "minimum": 0},
                "minItems": 2,
                "maxItems": 2,
            },
        },
    },
    "required": ["kind", "surface", "vertices", "edges"],
    "additionalProperties": False,
}
