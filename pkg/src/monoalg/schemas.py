"""JSON schemas for the CLI's --json outputs, one per verb family."""

_PERMUTATION = {"type": "array", "items": {"type": "integer", "minimum": 0}}

ANALYZE = {
    "type": "object",
    "required": [
        "n", "components", "cyclic", "heights", "height", "leaves",
        "cycle_sizes", "min_generating",
    ],
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "components": {"type": "array", "items": _PERMUTATION},
        "cyclic": _PERMUTATION,
        "heights": _PERMUTATION,
        "height": {"type": "integer", "minimum": 0},
        "leaves": _PERMUTATION,
        "cycle_sizes": _PERMUTATION,
        "min_generating": {
            "type": "object",
            "required": ["leaves", "cycle_choices"],
            "properties": {
                "leaves": _PERMUTATION,
                "cycle_choices": {"type": "array", "items": _PERMUTATION},
            },
        },
    },
}

CHECK = {
    "type": "object",
    "required": ["property", "holds"],
    "properties": {
        "property": {"type": "string"},
        "holds": {"type": "boolean"},
    },
}

ISO = {
    "type": "object",
    "required": ["isomorphic"],
    "properties": {"isomorphic": {"type": "boolean"}},
}

AUT = {
    "type": "object",
    "required": ["count", "automorphisms"],
    "properties": {
        "count": {"type": "integer", "minimum": 1},
        "automorphisms": {"type": "array", "items": _PERMUTATION},
    },
}

ORBITS = {
    "type": "object",
    "required": ["profile", "one_orbits"],
    "properties": {
        "profile": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        "one_orbits": {"type": "array", "items": _PERMUTATION},
    },
}

CLASSIFY = {
    "type": "object",
    "required": ["transitive", "ph1", "ph2", "ph", "uh", "h", "h2", "h1"],
    "additionalProperties": {"type": "boolean"},
}

SEMILINEAR = {
    "type": "object",
    "required": ["elements", "bottom", "covers", "aut_equality", "aut_count"],
    "properties": {
        "elements": _PERMUTATION,
        "bottom": {"type": "integer", "minimum": 0},
        "covers": {"type": "array", "items": _PERMUTATION},
        "aut_equality": {"type": "boolean"},
        "aut_count": {"type": "integer", "minimum": 1},
    },
}

BY_VERB = {
    "analyze": ANALYZE,
    "check": CHECK,
    "iso": ISO,
    "aut": AUT,
    "orbits": ORBITS,
    "classify": CLASSIFY,
    "semilinear": SEMILINEAR,
}
