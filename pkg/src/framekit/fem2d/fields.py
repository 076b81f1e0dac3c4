"""Element-level field operations on a single Quad8: edge tractions,
physical gradients of a nodal scalar field, and gradient integrals.

``node_coords`` is always the 8x2 array of element node positions in the
ordering of :data:`framekit.fem2d.shapes.QUAD8_NODES`.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from ..errors import DegenerateGeometryError, InvalidArgumentError
from .quadrature import quad_quadrature
from .shapes import quad8_shape

#: Scale-aware singularity threshold: |det J| at or below this fraction of
#: the element bounding-box area counts as degenerate.
DET_J_RELATIVE_FLOOR = 1e-12

# Edge -> (first corner, mid-side, second corner), counterclockwise.
_EDGE_NODES = {
    0: (0, 4, 1),  # eta = -1
    1: (1, 5, 2),  # xi = +1
    2: (2, 6, 3),  # eta = +1
    3: (3, 7, 0),  # xi = -1
}


def _as_coords(node_coords) -> np.ndarray:
    coords = np.asarray(node_coords, dtype=float)
    if coords.shape != (8, 2):
        raise InvalidArgumentError(f"node_coords must be 8x2, got {coords.shape}")
    return coords


def _jacobian(gradients: np.ndarray, coords: np.ndarray, det_floor: float):
    """Reference-to-physical Jacobian ``J[a, b] = d x_b / d xi_a``."""
    J = gradients.T @ coords
    det = float(np.linalg.det(J))
    if abs(det) <= det_floor:
        raise DegenerateGeometryError(f"singular element mapping (det J = {det:.3e})")
    return J, det


def _det_floor(coords: np.ndarray) -> float:
    spans = coords.max(axis=0) - coords.min(axis=0)
    return DET_J_RELATIVE_FLOOR * float(spans[0] * spans[1])


def quad8_edge_load(
    face: int,
    node_coords,
    traction: Sequence[float],
    num_gauss: int = 2,
) -> np.ndarray:
    """Equivalent nodal loads for a constant traction on one element edge.

    ``face`` selects the edge (0: bottom, 1: right, 2: top, 3: left in
    reference coordinates) and ``traction`` is the force per unit length.
    The edge integral of the quadratic edge shape functions is evaluated
    with ``num_gauss`` points (1, 2 or 3). Returns a 16-vector of loads
    interleaved per node, ``[Fx0, Fy0, Fx1, Fy1, ...]``, zero away from the
    loaded edge. For a straight edge the loads total ``traction * length``,
    split 1/6, 2/3, 1/6 between the corner and mid-side nodes.
    """
    coords = _as_coords(node_coords)
    if face not in _EDGE_NODES:
        raise InvalidArgumentError(f"face must be one of 0..3, got {face}")
    if num_gauss not in (1, 2, 3):
        raise InvalidArgumentError(f"num_gauss must be one of 1, 2, 3, got {num_gauss}")
    t = np.asarray(traction, dtype=float)
    if t.shape != (2,):
        raise InvalidArgumentError("traction must have 2 components")

    edge = _EDGE_NODES[face]
    xy = coords[list(edge)]
    s_pts, s_wts = np.polynomial.legendre.leggauss(num_gauss)

    loads = np.zeros(16)
    for s, w in zip(s_pts, s_wts):
        # Quadratic Lagrange basis on the edge parameter s in [-1, 1].
        N = np.array([0.5 * s * (s - 1.0), 1.0 - s * s, 0.5 * s * (s + 1.0)])
        dN = np.array([s - 0.5, -2.0 * s, s + 0.5])
        arc = float(np.linalg.norm(dN @ xy))
        for N_a, node in zip(N, edge):
            loads[2 * node : 2 * node + 2] += w * N_a * arc * t
    return loads


def quad8_physical_gradient(
    node_coords,
    node_values: Sequence[float],
    points: Sequence[tuple[float, float]],
) -> np.ndarray:
    """Gradient of a nodal scalar field in physical coordinates.

    For each reference point, maps the reference-coordinate gradient of the
    interpolated field through the inverse Jacobian. Returns an array of
    shape ``(len(points), 2)``. Raises
    :class:`~framekit.errors.DegenerateGeometryError` where the mapping is
    singular.
    """
    coords = _as_coords(node_coords)
    u = np.asarray(node_values, dtype=float)
    if u.shape != (8,):
        raise InvalidArgumentError("node_values must have 8 entries")
    floor = _det_floor(coords)

    out = np.empty((len(points), 2))
    for row, evaluation in enumerate(quad8_shape(points)):
        J, _ = _jacobian(evaluation.gradients, coords, floor)
        ref_grad = evaluation.gradients.T @ u
        out[row] = np.linalg.solve(J, ref_grad)
    return out


def quad8_gradient_integral(
    node_coords,
    node_values: Sequence[float],
    num_gauss: int = 4,
) -> np.ndarray:
    """Integral of the physical gradient of a nodal field over the element.

    Evaluates ``sum_q w_q |det J| grad u`` with a 1-, 4- or 9-point Gauss
    rule. Returns the 2-vector of integrated gradient components.
    """
    coords = _as_coords(node_coords)
    u = np.asarray(node_values, dtype=float)
    if u.shape != (8,):
        raise InvalidArgumentError("node_values must have 8 entries")
    rule = quad_quadrature(num_gauss)
    floor = _det_floor(coords)

    total = np.zeros(2)
    for w, evaluation in zip(rule.weights, quad8_shape(rule.points)):
        J, det = _jacobian(evaluation.gradients, coords, floor)
        ref_grad = evaluation.gradients.T @ u
        total += w * abs(det) * np.linalg.solve(J, ref_grad)
    return total
