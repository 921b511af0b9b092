"""JSON Schemas (draft 2020-12) for CLI reports, one results schema per command.

Plain dicts so they can be dumped or checked with any validator; the
package itself never validates against them.
"""

from __future__ import annotations

_INT = {"type": "integer"}
_NODE = {"type": "integer", "minimum": 1}
_NODES = {"type": "array", "items": _NODE}
_RATIONAL = {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}
_LENGTH = {"type": "array", "items": _RATIONAL, "minItems": 1}


def _obj(required: dict, optional: dict | None = None) -> dict:
    props = dict(required, **(optional or {}))
    return {"type": "object", "properties": props, "required": sorted(required),
            "additionalProperties": False}


_PATH = _obj({"nodes": _NODES, "length": _LENGTH, "edges": _INT})
_PAIR = _obj({"i": _INT, "j": _INT, "value": _INT})
_VERDICT = _obj({
    "status": {"enum": ["holds", "violated", "vacuous"]},
    "witness": {"type": ["array", "null"], "items": _INT},
    "edges": {"type": ["integer", "null"]},
    "nodes": {"type": ["integer", "null"]},
})
_CONJECTURE = {"type": "object"}
_DIVERSITY = _obj({
    "version": _INT, "prefix_size": _INT, "paths_found": _INT,
    "paths": {"type": "array", "items": _NODES},
    "lengths": {"type": "array", "items": _LENGTH},
    "best_pairs": {"type": "object", "additionalProperties": _PAIR},
    "claim1": _VERDICT, "claim2": _VERDICT, "conjecture": _CONJECTURE,
}, {"selected": {"type": "object", "additionalProperties": _PAIR}})
_DIST_MAP = {"type": "object", "additionalProperties": _LENGTH}
_PROFILE_ITEM = {"type": "object", "required": ["count"], "properties": {
    "edge": {"type": "array", "items": _NODE, "minItems": 2, "maxItems": 2},
    "node": _NODE, "count": _INT}}

RESULTS = {
    "validate": _obj({
        "directed": {"type": "boolean"}, "n": _INT, "m": _INT, "d": _INT,
        "violations": {"type": "array", "items": _obj({
            "kind": {"enum": ["node-out-of-range", "self-loop", "parallel-edge",
                              "dimension-mismatch", "non-positive-weight"]},
            "arc": _INT, "message": {"type": "string"}})},
    }),
    "ksp": _obj({"s": _NODE, "t": _NODE, "k": _INT, "paths": {"type": "array", "items": _PATH}}),
    "diverse": _DIVERSITY,
    "spdag": _obj({
        "s": _NODE, "t": _NODE, "distance": _LENGTH, "nodes": _NODES,
        "arcs": {"type": "array", "items": _NODES},
        "dist_from_s": _DIST_MAP, "dist_to_t": _DIST_MAP,
    }),
    "disjoint": _obj({
        "version": _INT, "variant": {"enum": ["n1", "n2", "n3", "n4"]}, "r": _INT,
        "objective": {"type": ["integer", "array", "null"], "items": _INT},
        "cost": {"oneOf": [{"type": "string", "pattern": r"^\d+$"},
                           {"type": "array", "items": _INT}]},
        "paths": {"type": "array", "items": _NODES},
        "overload_profile": {"type": "array", "items": _PROFILE_ITEM},
    }, {"unbounded": {"type": "boolean"},
        "objective_levels": {"type": "array", "items": _INT}}),
    "gen": _obj({
        "family": {"type": "string"}, "n": _INT, "m": _INT, "directed": {"type": "boolean"},
        "params": {"type": "object"},
    }, {"graph": {"type": "string"}}),
    "oracle ksp": _obj({"s": _NODE, "t": _NODE, "paths": {"type": "array", "items": _PATH}}),
    "oracle spdag": _obj({"s": _NODE, "t": _NODE, "paths": {"type": "array", "items": _PATH},
                          "arcs": {"type": "array", "items": _NODES}}),
    "oracle disjoint": _obj({
        "variant": {"enum": ["n1", "n2", "n3", "n4"]}, "r": {"type": ["integer", "null"]},
        "objective": {"type": ["integer", "array", "null"], "items": _INT},
        "unbounded": {"type": "boolean"},
        "witness": {"type": "array", "items": _NODES},
    }),
    "claims": _obj({
        "summary": _obj({k: _INT for k in ("instances", "claim1_violated", "claim2_violated",
                                           "claim1_vacuous", "claim2_vacuous")}),
        "instances": {"type": "array", "items": _obj({
            "file": {"type": "string"}, "paths_found": _INT,
            "claim1": _VERDICT, "claim2": _VERDICT, "conjecture": _CONJECTURE})},
    }),
}

_ENVELOPE = {
    "version": {"type": "string"},
    "command": {"type": "array", "items": {"type": "string"}},
    "inputs": {"type": "object", "additionalProperties": {"type": "string", "pattern": "^[0-9a-f]{64}$"}},
}

ERROR = _obj(dict(_ENVELOPE, error=_obj(
    {"kind": {"enum": ["usage", "input", "infeasible", "budget"]}, "message": {"type": "string"}},
    {"achievable": _INT})))


def report_schema(command: str) -> dict:
    """Schema of a successful report; ``command`` is e.g. ``"ksp"`` or ``"oracle spdag"``."""
    return _obj(dict(_ENVELOPE, results=RESULTS[command]),
                {"timing": _obj({"seconds": {"type": "number"}})})
