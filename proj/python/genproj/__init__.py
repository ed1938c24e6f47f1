"""Exact projections over classical sequence-space models.

Thin convenience layer over the compiled module: inputs and outputs use the
same JSON wire formats as the CLI, decoded to plain dicts here.
"""

import json as _json

try:
    from genproj import _core
except ImportError:  # dev tree: the module sits next to the build artifacts
    import _core

c0_projections = _core.c0_projections
duality_contains = _core.duality_contains
identical_points = _core.identical_points
list_cases = _core.list_cases
maximizing_set = _core.maximizing_set
norm_l1 = _core.norm_l1
norm_sup = _core.norm_sup
pair = _core.pair
pair_c = _core.pair_c
solution_set_contains = _core.solution_set_contains


def finseq(entries=None, zero=None):
    """Build the JSON form of a finitely supported sequence."""
    doc = {"entries": {str(k): str(v) for k, v in (entries or {}).items()}}
    if zero is not None:
        doc["zero"] = str(zero)
    return _json.dumps(doc)


def tailseq(prefix=(), tail=0):
    """Build the JSON form of an eventually constant sequence."""
    return _json.dumps({"prefix": [str(v) for v in prefix], "tail": str(tail)})


def ball(r, dim=4):
    return _json.dumps({"variant": "ball", "r": str(r), "dim": dim})


def simplex(r, dim=4, zero_slot=False):
    doc = {"variant": "simplex", "r": str(r), "dim": dim}
    if zero_slot:
        doc["zero_slot"] = True
    return _json.dumps(doc)


def hyperplane(k, dim=4):
    return _json.dumps({"variant": "hyperplane", "k": str(k), "dim": dim})


def nonneg_cone(dim=4):
    return _json.dumps({"variant": "nonneg_cone", "dim": dim})


def v_eval(phi_json, x_json):
    value, lower, upper = _core.v_eval(phi_json, x_json)
    return {"value": value, "lower_bound": lower, "upper_bound": upper}


def duality_box(x_json):
    return _json.loads(_core.duality_box(x_json))


def solve(kind, set_json, point_json, budget=4, l2=False):
    return _json.loads(_core.solve(kind, set_json, point_json, budget, l2))


def vi_sufficiency(set_json, phi_json, z_json, budget=4):
    return _json.loads(_core.vi_sufficiency(set_json, phi_json, z_json, budget))


def remez(expr, degree, grid=1024):
    return _json.loads(_core.remez(expr, degree, grid))


def run_case(case_id, seed=20240901):
    return _json.loads(_core.run_case(case_id, seed))
