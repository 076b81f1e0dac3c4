"""JSON interchange: the frame-model document schema and analysis reports.

The model document looks like::

    {
      "nodes": [[x, y, z], ...],
      "elements": [
        {"i": 0, "j": 1,
         "section": {"E": ..., "nu": ..., "A": ..., "Iy": ..., "Iz": ...,
                     "J": ..., "I_rho": ...},   # I_rho optional
         "local_z": [0, 0, 1]}                  # optional
      ],
      "boundary": {"0": [true, true, true, true, true, true]},
      "loads":    {"1": [0, 0, -100, 0, 0, 0]}
    }

A boundary entry may also be ``{"flags": [...], "values": [...]}`` to
prescribe nonzero support displacements. Reports mirror what the CLI writes
and the HTTP service returns; numbers serialize at full round-trip
precision and keys are emitted sorted, so identical inputs produce
byte-identical documents.
"""

from __future__ import annotations

import json
from typing import Any, Mapping

import numpy as np

from .errors import SchemaError
from .model import FrameElement, FrameModel, Point3, Section, Support
from .solve import SolverSettings

SCHEMA_VERSION = 1

_SECTION_REQUIRED = ("E", "nu", "A", "Iy", "Iz", "J")


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise SchemaError(message)


def _number(value: Any, where: str) -> float:
    _require(isinstance(value, (int, float)) and not isinstance(value, bool),
             f"{where} must be a number")
    return float(value)


def _node_key(key: Any, where: str) -> int:
    try:
        return int(key)
    except (TypeError, ValueError):
        raise SchemaError(f"{where} keys must be integer node ids, got {key!r}") from None


def _section_from(data: Any, where: str) -> Section:
    _require(isinstance(data, Mapping), f"{where} must be an object")
    for name in _SECTION_REQUIRED:
        _require(name in data, f"{where} is missing field {name!r}")
    unknown = set(data) - set(_SECTION_REQUIRED) - {"I_rho"}
    _require(not unknown, f"{where} has unknown fields {sorted(unknown)}")
    kwargs = {name: _number(data[name], f"{where}.{name}") for name in _SECTION_REQUIRED}
    if data.get("I_rho") is not None:
        kwargs["I_rho"] = _number(data["I_rho"], f"{where}.I_rho")
    return Section(**kwargs)


def _support_from(entry: Any, where: str) -> Support:
    if isinstance(entry, Mapping):
        _require("flags" in entry, f"{where} object needs a 'flags' field")
        unknown = set(entry) - {"flags", "values"}
        _require(not unknown, f"{where} has unknown fields {sorted(unknown)}")
        flags = entry["flags"]
        values = entry.get("values")
    else:
        flags, values = entry, None
    _require(isinstance(flags, (list, tuple)) and len(flags) == 6,
             f"{where} needs exactly 6 constraint flags")
    _require(all(isinstance(f, bool) for f in flags),
             f"{where} flags must be booleans")
    if values is None:
        return Support(tuple(flags))
    _require(isinstance(values, (list, tuple)) and len(values) == 6,
             f"{where} needs exactly 6 prescribed values")
    return Support(tuple(flags), tuple(_number(v, f"{where}.values") for v in values))


def model_from_dict(data: Any) -> FrameModel:
    """Build a :class:`FrameModel` from a parsed JSON document.

    Raises :class:`~framekit.errors.SchemaError` on any structural problem;
    semantic validity (node references, section positivity, constraints) is
    the business of :func:`framekit.model.validate_model`.
    """
    _require(isinstance(data, Mapping), "model document must be a JSON object")
    unknown = set(data) - {"nodes", "elements", "boundary", "loads"}
    _require(not unknown, f"model document has unknown fields {sorted(unknown)}")
    _require("nodes" in data, "model document is missing 'nodes'")
    _require("elements" in data, "model document is missing 'elements'")

    nodes_raw = data["nodes"]
    _require(isinstance(nodes_raw, (list, tuple)), "'nodes' must be an array")
    nodes = []
    for idx, entry in enumerate(nodes_raw):
        _require(isinstance(entry, (list, tuple)) and len(entry) == 3,
                 f"nodes[{idx}] must be a 3-component array")
        nodes.append(Point3(*(_number(c, f"nodes[{idx}]") for c in entry)))

    elements_raw = data["elements"]
    _require(isinstance(elements_raw, (list, tuple)), "'elements' must be an array")
    elements = []
    for idx, entry in enumerate(elements_raw):
        where = f"elements[{idx}]"
        _require(isinstance(entry, Mapping), f"{where} must be an object")
        unknown = set(entry) - {"i", "j", "section", "local_z"}
        _require(not unknown, f"{where} has unknown fields {sorted(unknown)}")
        for name in ("i", "j", "section"):
            _require(name in entry, f"{where} is missing field {name!r}")
        _require(
            all(isinstance(entry[k], int) and not isinstance(entry[k], bool)
                for k in ("i", "j")),
            f"{where} node ids must be integers",
        )
        local_z = entry.get("local_z")
        if local_z is not None:
            _require(isinstance(local_z, (list, tuple)) and len(local_z) == 3,
                     f"{where}.local_z must be a 3-component array")
            local_z = tuple(_number(c, f"{where}.local_z") for c in local_z)
        elements.append(
            FrameElement(
                node_i=entry["i"],
                node_j=entry["j"],
                section=_section_from(entry["section"], f"{where}.section"),
                local_z=local_z,
            )
        )

    boundary = {}
    for key, entry in (data.get("boundary") or {}).items():
        node = _node_key(key, "'boundary'")
        boundary[node] = _support_from(entry, f"boundary[{node}]")

    loads = {}
    for key, entry in (data.get("loads") or {}).items():
        node = _node_key(key, "'loads'")
        _require(isinstance(entry, (list, tuple)) and len(entry) == 6,
                 f"loads[{node}] must be a 6-component array")
        loads[node] = tuple(_number(c, f"loads[{node}]") for c in entry)

    return FrameModel(nodes=tuple(nodes), elements=tuple(elements),
                      boundary=boundary, loads=loads)


def model_to_dict(model: FrameModel) -> dict:
    """Serialize a model back to its document form."""
    out: dict = {
        "nodes": [[p.x, p.y, p.z] for p in model.nodes],
        "elements": [],
        "boundary": {},
        "loads": {},
    }
    for e in model.elements:
        s = e.section
        section = {"E": s.E, "nu": s.nu, "A": s.A, "Iy": s.Iy, "Iz": s.Iz, "J": s.J}
        if s.I_rho is not None:
            section["I_rho"] = s.I_rho
        entry = {"i": e.node_i, "j": e.node_j, "section": section}
        if e.local_z is not None:
            entry["local_z"] = list(e.local_z)
        out["elements"].append(entry)
    for node in sorted(model.boundary):
        support = model.boundary[node]
        if any(support.values):
            out["boundary"][str(node)] = {
                "flags": list(support.flags),
                "values": list(support.values),
            }
        else:
            out["boundary"][str(node)] = list(support.flags)
    for node in sorted(model.loads):
        out["loads"][str(node)] = list(model.loads[node])
    return out


def settings_to_dict(settings: SolverSettings) -> dict:
    return {
        "condition_limit": settings.condition_limit,
        "eig_positivity_floor": settings.eig_positivity_floor,
        "complex_tolerance": settings.complex_tolerance,
    }


def _per_node(vector: np.ndarray) -> list[list[float]]:
    return [[float(c) for c in row] for row in np.asarray(vector).reshape(-1, 6)]


def static_report(model, solution, settings: SolverSettings) -> dict:
    """Report document for a linear-static solve: per-node tables."""
    return {
        "schema_version": SCHEMA_VERSION,
        "analysis": "static",
        "settings": settings_to_dict(settings),
        "num_nodes": model.num_nodes,
        "displacements": _per_node(solution.displacements),
        "reactions": _per_node(solution.reactions),
    }


def buckling_report(model, result, settings: SolverSettings) -> dict:
    """Report document for a critical-load solve: factor plus mode shape."""
    return {
        "schema_version": SCHEMA_VERSION,
        "analysis": "buckle",
        "settings": settings_to_dict(settings),
        "num_nodes": model.num_nodes,
        "lambda_cr": float(result.lambda_cr),
        "mode": _per_node(result.mode),
    }


def mesh2d_report(mesh) -> dict:
    return {
        "coords": [[float(c) for c in row] for row in mesh.coords],
        "connectivity": [[int(i) for i in row] for row in mesh.connectivity],
        "kind": mesh.kind,
    }


def mesh1d_report(mesh) -> dict:
    return {
        "node_coords": [float(x) for x in mesh.node_coords],
        "connectivity": [list(pair) for pair in mesh.connectivity],
    }


def matrix_report(kind: str, matrix: np.ndarray) -> dict:
    return {
        "kind": kind,
        "shape": list(matrix.shape),
        "matrix": [[float(v) for v in row] for row in np.asarray(matrix)],
    }


def error_report(name: str, detail: str) -> dict:
    return {"error": name, "detail": detail}


def dump_json(document: Any) -> str:
    """Canonical JSON text: sorted keys, full float round-trip precision."""
    return json.dumps(document, indent=2, sort_keys=True, allow_nan=False) + "\n"


def parse_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from exc


_CSV_COLUMNS = ["node", "ux", "uy", "uz", "rx", "ry", "rz",
                "Rfx", "Rfy", "Rfz", "Rmx", "Rmy", "Rmz"]


def static_csv(report: Mapping) -> str:
    """Displacement/reaction table of a static report as CSV text."""
    lines = [",".join(_CSV_COLUMNS)]
    for node, (disp, reac) in enumerate(zip(report["displacements"], report["reactions"])):
        cells = [str(node)] + [repr(v) for v in disp] + [repr(v) for v in reac]
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"
