"""JSON space definition files.

A space file is a JSON object with a ``name``, a ``kind`` and a kind-specific
payload.  All numbers are rationals written as strings (``"3"``, ``"-1/2"``);
JSON integers are accepted on input, floats never::

    {"name": "l1_3", "kind": "lp_ball", "n": 3, "p": "1"}
    {"name": "X", "kind": "linf_subspace", "matrix": [["1", "0"], ["0", "1"], ["1", "1"]]}
    {"name": "P", "kind": "hrep", "facets": [["1", "0"], ["1/2", "1"]]}
    {"name": "Q", "kind": "vrep", "vertices": [["1", "0"], ["1", "1"], ["0", "1"]]}
    {"name": "S", "kind": "l1_sum", "left": {...}, "right": {...}}
    {"name": "T", "kind": "linf_sum", "left": {...}, "right": {...}}
    {"name": "H", "kind": "hexagon"}
    {"name": "Z", "kind": "sum_zero"}
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from . import exactlin as el
from . import spaces
from .errors import InputError
from .spaces import PolyhedralSpace

KINDS = ("lp_ball", "linf_subspace", "hrep", "vrep", "l1_sum", "linf_sum", "hexagon", "sum_zero")


def _require(data: dict, key: str):
    if key not in data:
        raise InputError(f"space file ({data.get('kind')}) is missing {key!r}")
    return data[key]


def _rows(data: dict, key: str) -> list[list[str]]:
    rows = _require(data, key)
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) and r for r in rows):
        raise InputError(f"{key!r} must be a non-empty list of non-empty rows")
    m = el.matrix(rows)
    return el.format_matrix(m)


def _p_value(p) -> str:
    key = str(p).strip().lower()
    if key in ("inf", "infinity", "oo"):
        return "inf"
    if key == "1":
        return "1"
    raise InputError(f"unsupported p={p!r}; only 1 and inf are polyhedral")


def canonical_space_file(data: Any) -> dict:
    """Normalized form of a space file: known keys only, canonical rationals."""
    if not isinstance(data, dict):
        raise InputError("space file must be a JSON object")
    kind = _require(data, "kind")
    name = _require(data, "name")
    if kind not in KINDS:
        raise InputError(f"unknown space kind {kind!r}")
    if not isinstance(name, str):
        raise InputError("space name must be a string")
    out: dict[str, Any] = {"name": name, "kind": kind}
    if kind == "lp_ball":
        n = _require(data, "n")
        if not isinstance(n, int) or isinstance(n, bool):
            raise InputError("lp_ball 'n' must be an integer")
        out["n"] = n
        out["p"] = _p_value(_require(data, "p"))
    elif kind == "linf_subspace":
        out["matrix"] = _rows(data, "matrix")
    elif kind == "hrep":
        out["facets"] = _rows(data, "facets")
    elif kind == "vrep":
        out["vertices"] = _rows(data, "vertices")
    elif kind in ("l1_sum", "linf_sum"):
        out["left"] = canonical_space_file(_require(data, "left"))
        out["right"] = canonical_space_file(_require(data, "right"))
    return out


def parse_space(data: Any) -> PolyhedralSpace:
    c = canonical_space_file(data)
    kind, name = c["kind"], c["name"]
    if kind == "lp_ball":
        return spaces.make_lp_ball(c["n"], c["p"], name)
    if kind == "linf_subspace":
        return spaces.make_linf_subspace(c["matrix"], name)
    if kind == "hrep":
        return spaces.make_hrep_space(c["facets"], name)
    if kind == "vrep":
        return spaces.make_vrep_space(c["vertices"], name)
    if kind == "l1_sum":
        return spaces.make_l1_sum(parse_space(c["left"]), parse_space(c["right"]), name)
    if kind == "linf_sum":
        return spaces.make_linf_sum(parse_space(c["left"]), parse_space(c["right"]), name)
    if kind == "hexagon":
        return spaces.rational_hexagon_space(name)
    return spaces.sum_zero_space(name)


def emit_space(space: PolyhedralSpace) -> dict:
    return spaces.describe(space)


def load_space(path: str | Path) -> PolyhedralSpace:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        data = json.loads(text, parse_float=_reject_float)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg})") from None
    return parse_space(data)


def _reject_float(text: str):
    raise InputError(f"floating-point literal {text} in space file; write rationals as strings")


def dump_space(space: PolyhedralSpace, path: str | Path) -> None:
    Path(path).write_text(json.dumps(emit_space(space), indent=2) + "\n", encoding="utf-8")
