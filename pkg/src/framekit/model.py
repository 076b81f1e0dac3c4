"""Domain types for 3D frame models and global DOF bookkeeping.

A frame model couples node coordinates, beam elements with section
properties, boundary conditions, and nodal loads. Node ids are dense
integers ``0..n-1``. Every node carries six degrees of freedom in the order
``[u, v, w, theta_x, theta_y, theta_z]`` and the global layout is
node-major: local DOF ``k`` of node ``n`` lives at global index ``6*n + k``.

All types are plain immutable values; they can be shared freely between
threads. The library is unit-agnostic: callers must supply every quantity
in one consistent unit system.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .errors import InvalidArgumentError

DOFS_PER_NODE = 6

#: Tolerance for the unit-length check on user-supplied local z directions.
LOCAL_Z_UNIT_TOL = 1e-8

#: ``|local_z . ex|`` at or above ``1 - LOCAL_Z_PARALLEL_TOL`` counts as
#: parallel to the element axis and is rejected.
LOCAL_Z_PARALLEL_TOL = 1e-8


def _readonly(a: np.ndarray) -> np.ndarray:
    a = np.array(a, copy=True)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class Point3:
    """A nodal position in 3D space."""

    x: float
    y: float
    z: float

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z], dtype=float)


@dataclass(frozen=True)
class Section:
    """Material and cross-section data for a beam element.

    ``I_rho`` is the polar moment entering the torsion coupling terms of the
    geometric stiffness. When omitted, the effective value is ``Iy + Iz``.
    """

    E: float
    nu: float
    A: float
    Iy: float
    Iz: float
    J: float
    I_rho: float | None = None

    @property
    def shear_modulus(self) -> float:
        return self.E / (2.0 * (1.0 + self.nu))

    @property
    def polar_moment(self) -> float:
        return self.I_rho if self.I_rho is not None else self.Iy + self.Iz


@dataclass(frozen=True)
class FrameElement:
    """A two-node beam element.

    ``local_z`` optionally pins down the orientation of the cross-section:
    it is a unit reference direction for the local z axis and must not be
    parallel to the member axis. When omitted, a global-z (or, for vertical
    members, global-y) fallback is used by the transformation routine.
    """

    node_i: int
    node_j: int
    section: Section
    local_z: tuple[float, float, float] | None = None

    def __post_init__(self):
        if self.local_z is not None:
            object.__setattr__(
                self, "local_z", tuple(float(c) for c in self.local_z)
            )


@dataclass(frozen=True)
class Support:
    """Constraint flags for one node, with optional prescribed values.

    ``flags[k]`` is True when local DOF ``k`` is constrained; the constrained
    DOF is then held at ``values[k]`` (zero by default).
    """

    flags: tuple[bool, ...]
    values: tuple[float, ...] = (0.0,) * DOFS_PER_NODE

    def __post_init__(self):
        if len(self.flags) != DOFS_PER_NODE:
            raise InvalidArgumentError("a support needs exactly 6 constraint flags")
        if len(self.values) != DOFS_PER_NODE:
            raise InvalidArgumentError("a support needs exactly 6 prescribed values")
        object.__setattr__(self, "flags", tuple(bool(f) for f in self.flags))
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))

    @classmethod
    def fixed(cls) -> "Support":
        """All six DOFs constrained to zero."""
        return cls((True,) * DOFS_PER_NODE)

    @classmethod
    def pinned(cls) -> "Support":
        """Translations constrained, rotations free."""
        return cls((True, True, True, False, False, False))


@dataclass(frozen=True)
class FrameModel:
    """A complete frame analysis model.

    ``boundary`` maps node id to a :class:`Support`; ``loads`` maps node id
    to the six nodal load components ``[Fx, Fy, Fz, Mx, My, Mz]``.
    """

    nodes: tuple[Point3, ...]
    elements: tuple[FrameElement, ...]
    boundary: Mapping[int, Support] = field(default_factory=dict)
    loads: Mapping[int, tuple[float, ...]] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "boundary", dict(self.boundary))
        object.__setattr__(
            self,
            "loads",
            {int(n): tuple(float(c) for c in comps) for n, comps in self.loads.items()},
        )

    @property
    def num_nodes(self) -> int:
        return len(self.nodes)

    @property
    def num_dofs(self) -> int:
        return DOFS_PER_NODE * len(self.nodes)


@dataclass(frozen=True)
class DofPartition:
    """Ascending free and fixed global DOF index sets."""

    free: np.ndarray
    fixed: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "free", _readonly(np.asarray(self.free, dtype=int)))
        object.__setattr__(self, "fixed", _readonly(np.asarray(self.fixed, dtype=int)))


@dataclass(frozen=True)
class StaticSolution:
    """Full displacement vector plus reactions at constrained DOFs.

    Both vectors have length ``6 * num_nodes`` in global DOF order; the
    reaction vector is zero at free DOFs.
    """

    displacements: np.ndarray
    reactions: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "displacements", _readonly(self.displacements))
        object.__setattr__(self, "reactions", _readonly(self.reactions))


@dataclass(frozen=True)
class BucklingSolution:
    """Critical load factor and its normalized mode shape.

    The mode is embedded in the full DOF space (zero at fixed DOFs) and
    scaled so its max-magnitude entry equals +1.
    """

    lambda_cr: float
    mode: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "mode", _readonly(self.mode))


def global_dof_index(node_id: int, local_dof: int, num_nodes: int | None = None) -> int:
    """Map (node id, local DOF) to the node-major global DOF index.

    ``num_nodes``, when given, bounds-checks the node id against the model
    size; without it only non-negativity is enforced.
    """
    if not 0 <= local_dof < DOFS_PER_NODE:
        raise InvalidArgumentError(f"local DOF {local_dof} outside 0..5")
    if node_id < 0:
        raise InvalidArgumentError(f"negative node id {node_id}")
    if num_nodes is not None and node_id >= num_nodes:
        raise InvalidArgumentError(
            f"node id {node_id} outside model with {num_nodes} nodes"
        )
    return DOFS_PER_NODE * node_id + local_dof


def _element_violations(model: FrameModel, index: int, element: FrameElement) -> list[str]:
    out = []
    tag = f"element {index}"
    n = model.num_nodes
    for label, ref in (("node_i", element.node_i), ("node_j", element.node_j)):
        if not 0 <= ref < n:
            out.append(f"{tag} references unknown node {ref} via {label}")
    if element.node_i == element.node_j:
        out.append(f"{tag} is a degenerate element (node_i == node_j)")

    s = element.section
    for prop in ("E", "A", "Iy", "Iz", "J"):
        if not getattr(s, prop) > 0.0:
            out.append(f"{tag} has non-positive section property {prop}")
    if not -1.0 < s.nu < 0.5:
        out.append(f"{tag} has Poisson ratio {s.nu} outside (-1, 0.5)")
    if s.I_rho is not None and not s.I_rho > 0.0:
        out.append(f"{tag} has non-positive section property I_rho")

    if element.local_z is not None:
        v = np.asarray(element.local_z, dtype=float)
        norm = float(np.linalg.norm(v))
        if abs(norm - 1.0) > LOCAL_Z_UNIT_TOL:
            out.append(f"{tag} local_z is not unit length (norm {norm:.3e})")
        elif (
            0 <= element.node_i < n
            and 0 <= element.node_j < n
            and element.node_i != element.node_j
        ):
            axis = model.nodes[element.node_j].as_array() - model.nodes[element.node_i].as_array()
            length = float(np.linalg.norm(axis))
            if length > 0.0 and abs(float(v @ axis / length)) >= 1.0 - LOCAL_Z_PARALLEL_TOL:
                out.append(f"{tag} local_z is parallel to the element axis")

    if (
        0 <= element.node_i < n
        and 0 <= element.node_j < n
        and element.node_i != element.node_j
    ):
        d = model.nodes[element.node_j].as_array() - model.nodes[element.node_i].as_array()
        if not float(np.linalg.norm(d)) > 0.0:
            out.append(f"{tag} has zero length (coincident end nodes)")

    return out


def structural_violations(model: FrameModel) -> list[str]:
    """Violations that make a model unsafe to assemble.

    Everything :func:`validate_model` reports except the missing-constraint
    check, which only matters once a solve is attempted. Assembly of an
    unconstrained model is legitimate (e.g. for rigid-body-mode checks).
    """
    out: list[str] = []
    for i, p in enumerate(model.nodes):
        if not all(math.isfinite(c) for c in (p.x, p.y, p.z)):
            out.append(f"node {i} has non-finite coordinates")
    for i, e in enumerate(model.elements):
        out.extend(_element_violations(model, i, e))
    for node in sorted(model.boundary):
        if not 0 <= node < model.num_nodes:
            out.append(f"boundary condition on unknown node {node}")
    for node in sorted(model.loads):
        if not 0 <= node < model.num_nodes:
            out.append(f"load on unknown node {node}")
        if len(model.loads[node]) != DOFS_PER_NODE:
            out.append(f"load on node {node} does not have 6 components")
    return out


def validate_model(model: FrameModel) -> list[str]:
    """Report every model invariant violation; an empty list means valid.

    Checks node coordinates, element node references, degenerate elements,
    section properties, local_z directions, load/boundary node ids, and
    that at least one DOF is constrained (an unconstrained model retains
    rigid-body motion and can never be solved).
    """
    out = structural_violations(model)
    constrained = any(any(s.flags) for s in model.boundary.values())
    if not constrained:
        out.append("unconstrained model (no constrained DOFs)")
    return out
