"""JSON formats for coset specs, explicit graphs, construction parameters and reports."""

from __future__ import annotations

import json
from pathlib import Path

from .chain import PermGroup
from .construction import ConstructionOutput, ConstructionParams
from .coset import CosetGraphSpec, ExplicitGraph
from .perm import CycleParseError, Permutation, from_cycles

__all__ = [
    "InputError",
    "load_json",
    "dump_json",
    "parse_perm",
    "spec_from_json",
    "spec_to_json",
    "graph_from_json",
    "graph_to_json",
    "params_from_json",
    "params_to_json",
    "construction_to_json",
    "source_from_json",
]


class InputError(ValueError):
    """Unreadable or malformed input; the CLI maps this to exit code 2."""


def load_json(path) -> object:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON at line {exc.lineno}, column {exc.colno}: "
                         f"{exc.msg}") from None


def dump_json(data, path=None) -> str:
    text = json.dumps(data, indent=2, ensure_ascii=False) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text


def parse_perm(degree: int, value) -> Permutation:
    """A permutation given as cycle text or as an image list."""
    try:
        if isinstance(value, str):
            return from_cycles(degree, value)
        if isinstance(value, list):
            p = Permutation(value)
            if len(p) != degree:
                raise ValueError(f"image list has length {len(p)}, expected {degree}")
            return p
    except (CycleParseError, ValueError) as exc:
        raise InputError(f"bad permutation {value!r}: {exc}") from None
    raise InputError(f"bad permutation {value!r}: expected a cycle string or image list")


def _field(data: dict, key: str, kind):
    if not isinstance(data, dict):
        raise InputError("expected a JSON object")
    if key not in data:
        raise InputError(f"missing field {key!r}")
    value = data[key]
    if kind is int and (not isinstance(value, int) or isinstance(value, bool) or value < 1):
        raise InputError(f"field {key!r} must be a positive integer")
    if kind is list and not isinstance(value, list):
        raise InputError(f"field {key!r} must be a list")
    return value


def _perms(degree: int, values) -> list:
    return [parse_perm(degree, v) for v in values]


def spec_from_json(data: dict) -> CosetGraphSpec:
    n = _field(data, "degree", int)
    gens = _perms(n, _field(data, "group_generators", list))
    sub = _perms(n, _field(data, "subgroup_generators", list))
    a = parse_perm(n, _field(data, "a", object))
    return CosetGraphSpec(PermGroup(gens, degree=n), sub, a)


def spec_to_json(spec: CosetGraphSpec) -> dict:
    return {
        "degree": spec.degree,
        "group_generators": [g.to_cycles() for g in spec.group.generators],
        "subgroup_generators": [g.to_cycles() for g in spec.sub_gens],
        "a": spec.a.to_cycles(),
    }


def graph_from_json(data: dict) -> ExplicitGraph:
    n = _field(data, "vertices", int)
    edges = _field(data, "edges", list)
    try:
        pairs = [(int(u), int(v)) for u, v in edges]
    except (TypeError, ValueError):
        raise InputError("edges must be pairs of integers") from None
    gens = _perms(n, _field(data, "aut_generators", list))
    try:
        return ExplicitGraph(n, pairs, gens)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def graph_to_json(graph: ExplicitGraph) -> dict:
    return {
        "vertices": graph.n,
        "edges": [list(e) for e in graph.edges],
        "aut_generators": [g.to_cycles() for g in graph.aut_gens],
    }


def params_from_json(data: dict) -> ConstructionParams:
    r = _field(data, "r_degree", int)
    s = _field(data, "s_degree", int)
    m = _field(data, "m", int)
    R = PermGroup(_perms(r, _field(data, "r_generators", list)), degree=r)
    S = PermGroup(_perms(s, _field(data, "s_generators", list)), degree=s)
    try:
        return ConstructionParams(R, S, m, str(data.get("name", "")))
    except ValueError as exc:
        raise InputError(str(exc)) from None


def params_to_json(params: ConstructionParams) -> dict:
    out = {
        "r_degree": params.r,
        "r_generators": [g.to_cycles() for g in params.R.generators],
        "s_degree": params.s,
        "s_generators": [g.to_cycles() for g in params.S.generators],
        "m": params.m,
    }
    if params.name:
        out["name"] = params.name
    return out


def construction_to_json(out: ConstructionOutput) -> dict:
    data = spec_to_json(out.spec)
    data["layout"] = out.layout.as_dict()
    data["params"] = params_to_json(out.params)
    data["notes"] = list(out.notes)
    return data


def source_from_json(data) -> tuple:
    """``(kind, object)`` for any accepted input document."""
    if isinstance(data, dict):
        if "group_generators" in data:
            return "coset-spec", spec_from_json(data)
        if "aut_generators" in data:
            return "explicit-graph", graph_from_json(data)
        if "r_generators" in data:
            return "construction-params", params_from_json(data)
    raise InputError("unrecognised document: expected a coset spec, explicit graph or params")
