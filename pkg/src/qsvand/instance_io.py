"""Text formats: JSON instance files and plain-text matrix dumps.

Floats in instance files are written with Python's shortest round-trip
``repr``, and matrix dumps use 17 significant digits, so both parse back to
the identical doubles.
"""

from __future__ import annotations

import json

import numpy as np

from .displacement import DisplacementInstance
from .errors import InstanceFormatError
from .poly_systems import PolySystem

SCHEMA_VERSION = 1
_GENS = ("alpha", "beta", "gamma", "delta", "theta")


def instance_to_dict(inst: DisplacementInstance) -> dict:
    sys = inst.sys
    out = {"schema_version": SCHEMA_VERSION, "family": sys.family.value,
           "n": sys.n, "tau0": sys.tau0}
    for name in _GENS:
        out[name] = [float(v) for v in getattr(sys, name)]
    out["nodes"] = [float(v) for v in inst.nodes]
    out["alpha_rank"] = inst.alpha_rank
    out["G"] = [float(v) for v in inst.G.reshape(-1)]
    out["B"] = [float(v) for v in inst.B.reshape(-1)]
    return out


def _field(doc, name, kind):
    if name not in doc:
        raise InstanceFormatError(f"missing field {name!r}")
    value = doc[name]
    if kind == "int":
        if isinstance(value, bool) or not isinstance(value, int):
            raise InstanceFormatError(f"field {name!r} must be an integer")
        return value
    if kind == "num":
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise InstanceFormatError(f"field {name!r} must be a number")
        return float(value)
    if not isinstance(value, list) or any(
            isinstance(v, bool) or not isinstance(v, (int, float)) for v in value):
        raise InstanceFormatError(f"field {name!r} must be an array of numbers")
    return np.array(value, dtype=float)


def instance_from_dict(doc: dict, validate: bool = True) -> DisplacementInstance:
    """Parse an instance document.  ``validate=False`` lets repeated nodes
    through (zero or non-finite nodes are still rejected)."""
    if not isinstance(doc, dict):
        raise InstanceFormatError("instance must be a JSON object")
    version = _field(doc, "schema_version", "int")
    if version != SCHEMA_VERSION:
        raise InstanceFormatError(f"unsupported schema_version {version}")
    family = doc.get("family")
    if family not in ("qs", "ss", "wf"):
        raise InstanceFormatError(f"unknown family {family!r}")
    n = _field(doc, "n", "int")
    rank = _field(doc, "alpha_rank", "int")
    if n < 1 or rank < 1:
        raise InstanceFormatError("n and alpha_rank must be positive")
    gens = {name: _field(doc, name, "arr") for name in _GENS}
    for name, arr in gens.items():
        if arr.size != n:
            raise InstanceFormatError(f"field {name!r} has {arr.size} entries, expected {n}")
    nodes = _field(doc, "nodes", "arr")
    G = _field(doc, "G", "arr")
    B = _field(doc, "B", "arr")
    if nodes.size != n:
        raise InstanceFormatError(f"field 'nodes' has {nodes.size} entries, expected {n}")
    if G.size != n * rank or B.size != n * rank:
        raise InstanceFormatError(f"G and B need {n * rank} entries each")
    try:
        sys = PolySystem(family=family, tau0=_field(doc, "tau0", "num"), **gens)
        return DisplacementInstance(sys, nodes, G.reshape(n, rank), B.reshape(rank, n),
                                    distinct_nodes=validate)
    except ValueError as exc:
        raise InstanceFormatError(str(exc)) from exc


def dumps_instance(inst: DisplacementInstance) -> str:
    return json.dumps(instance_to_dict(inst), indent=1) + "\n"


def loads_instance(text: str, validate: bool = True) -> DisplacementInstance:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"not valid JSON: {exc}") from exc
    return instance_from_dict(doc, validate=validate)


def save_instance(inst: DisplacementInstance, path) -> None:
    with open(path, "w") as fh:
        fh.write(dumps_instance(inst))


def load_instance(path, validate: bool = True) -> DisplacementInstance:
    with open(path) as fh:
        return loads_instance(fh.read(), validate=validate)


def format_matrix(name: str, A) -> str:
    """One dump block: a header ``name n m`` followed by ``n`` rows."""
    A = np.atleast_2d(np.asarray(A, dtype=float))
    if not name or any(ch.isspace() for ch in name):
        raise ValueError(f"bad block name {name!r}")
    lines = [f"{name} {A.shape[0]} {A.shape[1]}"]
    lines += [" ".join("%.17g" % v for v in row) for row in A]
    return "\n".join(lines) + "\n"


def parse_matrices(text: str) -> dict:
    """Inverse of concatenated :func:`format_matrix` blocks."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    out = {}
    i = 0
    try:
        while i < len(lines):
            name, n, m = lines[i].split()
            n, m = int(n), int(m)
            rows = [[float(v) for v in ln.split()] for ln in lines[i + 1:i + 1 + n]]
            if len(rows) != n or any(len(r) != m for r in rows):
                raise InstanceFormatError(f"block {name!r} is truncated")
            out[name] = np.array(rows, dtype=float).reshape(n, m)
            i += 1 + n
    except InstanceFormatError:
        raise
    except ValueError as exc:
        raise InstanceFormatError(f"malformed matrix dump near line {i + 1}") from exc
    return out
