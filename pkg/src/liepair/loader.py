"""Reading chart presentations from JSON files.

Schema (all structure values are expression strings or integers)::

    {
      "name": "optional label",
      "description": "optional prose",
      "dim_base": 1,
      "rank_B": 1,
      "rank_A": 1,
      "variables": ["x"],
      "anchor": [["1"], ["x"]],            # s+t rows (B first), n columns
      "structure": {"2,1,1": "-1"},        # [l_i, l_j] = C_ij^k l_k, 1-based
      "christoffel": {"2,1,1": "-1"},      # nabla_{l_i} b_j = G_ij^k b_k
      "matched_pair": true,
      "symmetrize_connection": false,
      "params": {"gamma": "1/2"}
    }

The structure table is completed antisymmetrically: giving C[i,j,k]
implies C[j,i,k] = -C[i,j,k]; giving both with inconsistent values, or a
nonzero diagonal i = j, is an error.  The parameter "gamma" is always
bound (default 1) so shipped charts can use it; caller overrides win
over file values.  All loading problems raise LoadError.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .algebroid import ChartAlgebroid, complete_antisymmetric
from .errors import LoadError
from .expressions import parse_poly, parse_rational
from .poly import Poly

_RESERVED = re.compile(r"^(alpha|beta|b)[0-9]+$")
_IDENT = re.compile(r"^[A-Za-z_][A-Za-z_0-9]*$")

_KNOWN_KEYS = {
    "name", "description", "dim_base", "rank_B", "rank_A", "variables",
    "anchor", "structure", "christoffel", "matched_pair",
    "symmetrize_connection", "params",
}


class LoadedChart:
    __slots__ = ("alg", "name", "variables", "params", "symmetrized")

    def __init__(self, alg, name, variables, params, symmetrized):
        self.alg = alg
        self.name = name
        self.variables = variables
        self.params = params
        self.symmetrized = symmetrized


def _require_int(data, key, minimum):
    v = data.get(key)
    if not isinstance(v, int) or isinstance(v, bool) or v < minimum:
        raise LoadError(f"'{key}' must be an integer >= {minimum}")
    return v


def _expr(value, names, params, where) -> Poly:
    if isinstance(value, bool) or isinstance(value, float):
        raise LoadError(f"{where}: expected an expression string or integer")
    if isinstance(value, int):
        return Poly.const(value)
    if isinstance(value, str):
        try:
            return parse_poly(value, names, params)
        except LoadError as exc:
            raise LoadError(f"{where}: {exc}") from None
    raise LoadError(f"{where}: expected an expression string or integer")


def _index_key(key, where):
    parts = [p.strip() for p in str(key).split(",")]
    if len(parts) != 3 or not all(p.lstrip("-").isdigit() for p in parts):
        raise LoadError(f"{where}: key {key!r} must look like \"i,j,k\"")
    return tuple(int(p) for p in parts)


def load_chart_dict(data, param_overrides=None) -> LoadedChart:
    if not isinstance(data, dict):
        raise LoadError("chart file must contain a JSON object")
    unknown = sorted(set(data) - _KNOWN_KEYS)
    if unknown:
        raise LoadError(f"unknown keys: {', '.join(unknown)}")

    n = _require_int(data, "dim_base", 0) if "dim_base" in data else 0
    s = _require_int(data, "rank_B", 1)
    t = _require_int(data, "rank_A", 0) if "rank_A" in data else 0
    m = s + t

    variables = data.get("variables", [])
    if not isinstance(variables, list) or len(variables) != n:
        raise LoadError(f"'variables' must list exactly {n} names")
    seen = set()
    for v in variables:
        if not isinstance(v, str) or not _IDENT.match(v):
            raise LoadError(f"variable name {v!r} is not an identifier")
        if _RESERVED.match(v):
            raise LoadError(f"variable name {v!r} collides with a fiber coordinate")
        if v in seen:
            raise LoadError(f"duplicate variable name {v!r}")
        seen.add(v)

    params = {"gamma": Fraction(1)}
    raw_params = data.get("params", {})
    if not isinstance(raw_params, dict):
        raise LoadError("'params' must be an object")
    for key, val in raw_params.items():
        if not isinstance(key, str) or not _IDENT.match(key) or _RESERVED.match(key):
            raise LoadError(f"parameter name {key!r} is not allowed")
        if key in seen:
            raise LoadError(f"parameter {key!r} shadows a variable")
        if isinstance(val, int) and not isinstance(val, bool):
            params[key] = Fraction(val)
        elif isinstance(val, str):
            try:
                params[key] = parse_rational(val)
            except LoadError as exc:
                raise LoadError(f"params.{key}: {exc}") from None
        else:
            raise LoadError(f"params.{key}: expected a rational string or integer")
    for key, val in (param_overrides or {}).items():
        params[key] = Fraction(val)

    anchor = data.get("anchor")
    rho = {}
    if anchor is not None:
        if not isinstance(anchor, list) or len(anchor) != m:
            raise LoadError(f"'anchor' must have {m} rows (B rows first)")
        for i, row in enumerate(anchor):
            if not isinstance(row, list) or len(row) != n:
                raise LoadError(f"anchor row {i+1} must have {n} entries")
            for j, entry in enumerate(row):
                p = _expr(entry, variables, params, f"anchor[{i+1}][{j+1}]")
                if p:
                    rho[(i, j)] = p

    raw_c = data.get("structure", {})
    if not isinstance(raw_c, dict):
        raise LoadError("'structure' must be an object")
    c_entries = {}
    for key, val in raw_c.items():
        i, j, k = _index_key(key, "structure")
        if not (1 <= i <= m and 1 <= j <= m and 1 <= k <= m):
            raise LoadError(f"structure key {key!r}: indices must lie in 1..{m}")
        p = _expr(val, variables, params, f"structure[{key}]")
        if p:
            c_entries[(i - 1, j - 1, k - 1)] = p
    try:
        c_full = complete_antisymmetric(c_entries, m)
    except ValueError as exc:
        raise LoadError(str(exc)) from None

    raw_g = data.get("christoffel", {})
    if not isinstance(raw_g, dict):
        raise LoadError("'christoffel' must be an object")
    gamma = {}
    for key, val in raw_g.items():
        i, j, k = _index_key(key, "christoffel")
        if not (1 <= i <= m and 1 <= j <= s and 1 <= k <= s):
            raise LoadError(
                f"christoffel key {key!r}: first index in 1..{m}, others in 1..{s}"
            )
        p = _expr(val, variables, params, f"christoffel[{key}]")
        if p:
            gamma[(i - 1, j - 1, k - 1)] = p

    matched = data.get("matched_pair", False)
    symmetrize = data.get("symmetrize_connection", False)
    for key, val in (("matched_pair", matched), ("symmetrize_connection", symmetrize)):
        if not isinstance(val, bool):
            raise LoadError(f"'{key}' must be a boolean")

    try:
        alg = ChartAlgebroid(n, s, t, rho=rho, C=c_full, Gamma=gamma, matched=matched)
    except ValueError as exc:
        raise LoadError(str(exc)) from None
    if symmetrize:
        alg = alg.symmetrized()

    name = data.get("name")
    if name is not None and not isinstance(name, str):
        raise LoadError("'name' must be a string")
    return LoadedChart(alg, name, list(variables), params, bool(symmetrize))


def load_chart(path, param_overrides=None) -> LoadedChart:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise LoadError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise LoadError(f"{path} is not valid JSON: {exc}") from None
    return load_chart_dict(data, param_overrides)
