"""JSON file formats and the result envelope.

Integers are JSON integers; rationals are ``"num/den"`` strings (or plain
``"n"`` when integral) so no value ever passes through a float.
"""

import hashlib
import json
from fractions import Fraction

from .cones import Fan
from .divisor import TDivisor
from .errors import InputError
from .polytope import HPolytope

SCHEMA_VERSION = "toric-sections.result/1"

_INT_VEC = {"type": "array", "items": {"type": "integer"}}
_RAT = {"type": "string", "pattern": r"^-?[0-9]+(/[0-9]+)?$"}

RESULT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["schema", "command", "inputs", "result", "version"],
    "additionalProperties": False,
    "properties": {
        "schema": {"const": SCHEMA_VERSION},
        "command": {"enum": ["validate", "cartier", "count", "polytope", "generators", "series"]},
        "inputs": {
            "type": "object",
            "additionalProperties": {"type": "string", "pattern": "^sha256:[0-9a-f]{64}$"},
        },
        "version": {"type": "string"},
        "result": {"type": "object"},
        "warnings": {"type": "array", "items": {"type": "string"}},
    },
    "allOf": [],
}

_RAT_VEC = {"type": "array", "items": _RAT}
_RESULTS = {
    "validate": {"required": ["valid", "complete", "checks", "problems", "status"],
                 "properties": {"valid": {"type": "boolean"},
                                "complete": {"type": ["boolean", "null"]},
                                "status": {"type": "string"}}},
    "cartier": {"required": ["cartier"],
                "properties": {"cartier": {"type": "boolean"},
                               "cones": {"type": "array", "items": {
                                   "type": "object", "required": ["cone", "m"],
                                   "properties": {"cone": _INT_VEC, "m": _INT_VEC}}},
                               "witness": {"anyOf": [_RAT_VEC, {"type": "null"}]}}},
    "count": {"required": ["counts"],
              "properties": {"counts": {"type": "array", "items": {
                  "type": "object", "required": ["n", "dim"],
                  "properties": {"n": {"type": "integer", "minimum": 0},
                                 "dim": {"type": "integer", "minimum": 0}}}}}},
    "polytope": {"required": ["n", "h_representation", "vertices", "dim", "lattice_points"],
                 "properties": {"vertices": {"type": "array", "items": _RAT_VEC},
                                "dim": {"type": "integer", "minimum": -1},
                                "lattice_points": {"type": "array", "items": _INT_VEC}}},
    "generators": {"required": ["trivial", "cone_rays", "generators"],
                   "properties": {"generators": {"type": "array", "items": {
                       "type": "object", "required": ["point", "degree"],
                       "properties": {"point": _INT_VEC,
                                      "degree": {"type": "integer", "minimum": 1}}}}}},
    "series": {"required": ["series", "quasi_polynomial"],
               "properties": {
                   "series": {"type": "object",
                              "required": ["numerator", "period", "pole_order"],
                              "properties": {"numerator": _INT_VEC,
                                             "period": {"type": "integer", "minimum": 1},
                                             "pole_order": {"type": "integer", "minimum": 0}}},
                   "quasi_polynomial": {"type": "object",
                                        "required": ["period", "start", "coefficients"],
                                        "properties": {"coefficients": {
                                            "type": "array", "items": _RAT_VEC}}}}},
}
_ERROR = {"required": ["error"], "properties": {"error": {"type": "string"}}}
for _name, _schema in _RESULTS.items():
    RESULT_SCHEMA["allOf"].append({
        "if": {"properties": {"command": {"const": _name}}},
        "then": {"properties": {"result": {"anyOf": [dict(_schema, type="object"),
                                                     dict(_ERROR, type="object")]}}},
    })


def _is_int(x):
    return isinstance(x, int) and not isinstance(x, bool)


def _int_list(x, what):
    if not isinstance(x, list) or not all(_is_int(e) for e in x):
        raise InputError("%s must be a list of integers" % what)
    return tuple(x)


def _load(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError("cannot read %s: %s" % (path, exc)) from exc


def digest(obj):
    blob = json.dumps(obj, sort_keys=True, separators=(",", ":")).encode()
    return "sha256:" + hashlib.sha256(blob).hexdigest()


def fan_from_json(obj):
    if not isinstance(obj, dict) or not {"rank", "rays", "max_cones"} <= obj.keys():
        raise InputError("fan file needs keys rank, rays, max_cones")
    k = obj["rank"]
    if not _is_int(k) or k < 1:
        raise InputError("rank must be a positive integer")
    if not isinstance(obj["rays"], list) or not isinstance(obj["max_cones"], list):
        raise InputError("rays and max_cones must be lists")
    rays = [_int_list(r, "ray %d" % i) for i, r in enumerate(obj["rays"])]
    for i, r in enumerate(rays):
        if len(r) != k:
            raise InputError("ray %d has length %d, expected %d" % (i, len(r), k))
    cones = [_int_list(c, "cone %d" % i) for i, c in enumerate(obj["max_cones"])]
    return Fan(k, tuple(rays), tuple(cones))


def divisor_from_json(obj, fan):
    if not isinstance(obj, dict) or "coefficients" not in obj:
        raise InputError("divisor file needs key coefficients")
    coeffs = _int_list(obj["coefficients"], "coefficients")
    if len(coeffs) != len(fan.rays):
        raise InputError("divisor has %d coefficients but the fan has %d rays"
                         % (len(coeffs), len(fan.rays)))
    return TDivisor(fan, coeffs)


def polytope_from_json(obj):
    if not isinstance(obj, dict) or not {"rank", "constraints"} <= obj.keys():
        raise InputError("polytope file needs keys rank, constraints")
    k = obj["rank"]
    if not _is_int(k) or k < 1:
        raise InputError("rank must be a positive integer")
    cons = []
    for i, c in enumerate(obj["constraints"]):
        if not isinstance(c, dict) or not _is_int(c.get("rhs")):
            raise InputError("constraint %d needs an integer rhs" % i)
        nv = _int_list(c.get("normal"), "normal of constraint %d" % i)
        if len(nv) != k:
            raise InputError("normal of constraint %d has length %d, expected %d" % (i, len(nv), k))
        cons.append((nv, c["rhs"]))
    return HPolytope(k, tuple(cons))


def load_fan(path):
    obj = _load(path)
    return fan_from_json(obj), digest(obj)


def load_divisor(path, fan):
    obj = _load(path)
    return divisor_from_json(obj, fan), digest(obj)


def load_polytope(path):
    obj = _load(path)
    return polytope_from_json(obj), digest(obj)


def rat(x):
    return str(Fraction(x))


def rat_vec(v):
    return [rat(x) for x in v]


def polytope_to_json(h):
    return {"rank": h.rank,
            "constraints": [{"normal": list(nv), "rhs": b} for nv, b in h.constraints]}


def envelope(command, inputs, result, version, warnings=()):
    out = {"schema": SCHEMA_VERSION, "command": command, "inputs": dict(inputs),
           "result": result, "version": version}
    if warnings:
        out["warnings"] = list(warnings)
    return out


def dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
