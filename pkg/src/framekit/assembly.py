"""Global system construction for frame models.

Element matrices are globalized as ``gamma.T @ k_local @ gamma`` and
scattered into the ``6n x 6n`` system by the node-major DOF map. Dense
storage throughout: the models this library targets stay at desk scale
(a few hundred DOFs), where dense assembly and factorization are both
simpler and faster than sparse bookkeeping.
"""

from __future__ import annotations

import numpy as np

from . import beam3d
from .errors import InvalidArgumentError, ModelValidationError
from .model import (
    DOFS_PER_NODE,
    DofPartition,
    FrameElement,
    FrameModel,
    structural_violations,
)


def element_dof_map(element: FrameElement) -> np.ndarray:
    """The 12 global DOF indices touched by an element, node i then node j."""
    base_i = DOFS_PER_NODE * element.node_i
    base_j = DOFS_PER_NODE * element.node_j
    return np.r_[base_i : base_i + 6, base_j : base_j + 6]


def _require_assemblable(model: FrameModel) -> None:
    violations = structural_violations(model)
    if violations:
        raise ModelValidationError(violations)


def _element_geometry(model: FrameModel, element: FrameElement):
    p_i = model.nodes[element.node_i]
    p_j = model.nodes[element.node_j]
    length = float(np.linalg.norm(p_j.as_array() - p_i.as_array()))
    gamma = beam3d.transformation_matrix(p_i, p_j, element.local_z)
    return p_i, p_j, length, gamma


def assemble_elastic_stiffness(model: FrameModel) -> np.ndarray:
    """Assemble the global elastic stiffness matrix.

    The element loop is deterministic (model element order), so identical
    models produce bitwise-identical matrices.
    """
    _require_assemblable(model)
    K = np.zeros((model.num_dofs, model.num_dofs))
    for element in model.elements:
        s = element.section
        _, _, length, gamma = _element_geometry(model, element)
        k_local = beam3d.elastic_stiffness(s.E, s.nu, s.A, length, s.Iy, s.Iz, s.J)
        dofs = element_dof_map(element)
        K[np.ix_(dofs, dofs)] += gamma.T @ k_local @ gamma
    return K


def assemble_geometric_stiffness(
    model: FrameModel, displacements: np.ndarray
) -> np.ndarray:
    """Assemble the global geometric stiffness for a displacement state.

    Per element: rotate the element's global displacements into the local
    frame, recover local end forces through this library's own elastic
    stiffness (so the force-extraction slots always line up with the local
    DOF order), read off the axial force, torque and end moments
    ``(Fx2, Mx2, My1, Mz1, My2, Mz2)`` at entries (6, 9, 4, 5, 10, 11),
    build the local geometric stiffness and globalize it. Accumulated
    round-off asymmetry is removed by averaging with the transpose.
    """
    _require_assemblable(model)
    u = np.asarray(displacements, dtype=float)
    if u.shape != (model.num_dofs,):
        raise InvalidArgumentError(
            f"displacement vector must have {model.num_dofs} entries, got {u.shape}"
        )
    K_g = np.zeros((model.num_dofs, model.num_dofs))
    for element in model.elements:
        s = element.section
        _, _, length, gamma = _element_geometry(model, element)
        dofs = element_dof_map(element)
        u_local = gamma @ u[dofs]
        k_local = beam3d.elastic_stiffness(s.E, s.nu, s.A, length, s.Iy, s.Iz, s.J)
        f_local = k_local @ u_local
        kg_local = beam3d.geometric_stiffness(
            length,
            s.A,
            s.polar_moment,
            Fx2=f_local[6],
            Mx2=f_local[9],
            My1=f_local[4],
            Mz1=f_local[5],
            My2=f_local[10],
            Mz2=f_local[11],
        )
        K_g[np.ix_(dofs, dofs)] += gamma.T @ kg_local @ gamma
    return 0.5 * (K_g + K_g.T)


def assemble_loads(model: FrameModel) -> np.ndarray:
    """Place nodal load components into the global load vector."""
    F = np.zeros(model.num_dofs)
    for node, components in model.loads.items():
        if not 0 <= node < model.num_nodes:
            raise InvalidArgumentError(f"load on unknown node {node}")
        if len(components) != DOFS_PER_NODE:
            raise InvalidArgumentError(f"load on node {node} does not have 6 components")
        F[DOFS_PER_NODE * node : DOFS_PER_NODE * (node + 1)] += components
    return F


def partition_dofs(model: FrameModel) -> DofPartition:
    """Split global DOF indices into ascending free and fixed sets."""
    fixed = []
    for node in sorted(model.boundary):
        if not 0 <= node < model.num_nodes:
            raise InvalidArgumentError(f"boundary condition on unknown node {node}")
        support = model.boundary[node]
        for local, flag in enumerate(support.flags):
            if flag:
                fixed.append(DOFS_PER_NODE * node + local)
    fixed_arr = np.array(sorted(fixed), dtype=int)
    free_arr = np.setdiff1d(np.arange(model.num_dofs), fixed_arr)
    return DofPartition(free=free_arr, fixed=fixed_arr)


def prescribed_values(model: FrameModel, partition: DofPartition) -> np.ndarray:
    """Prescribed displacements aligned with ``partition.fixed``."""
    values = np.zeros(len(partition.fixed))
    for row, dof in enumerate(partition.fixed):
        node, local = divmod(int(dof), DOFS_PER_NODE)
        values[row] = model.boundary[node].values[local]
    return values
