"""One-dimensional bar elements: uniform meshing, the 2x2 local stiffness,
and a linear-elastic solver with Dirichlet/Neumann data.

Elements are 2-node linear Lagrange bars. A constant distributed body force
is integrated exactly (``f * L / 2`` to each end node), so this module needs
no quadrature. Material data is given as piecewise-constant regions; each
element takes its properties from the region containing its midpoint, ties
at region boundaries resolving to the lower region.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .errors import (
    ConfigurationError,
    DegenerateElementError,
    InvalidArgumentError,
    SingularSystemError,
)
from .model import _readonly


@dataclass(frozen=True)
class Mesh1D:
    """Sorted node coordinates plus (left, right) element connectivity."""

    node_coords: np.ndarray
    connectivity: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "node_coords", _readonly(np.asarray(self.node_coords, dtype=float)))
        object.__setattr__(
            self, "connectivity", tuple((int(a), int(b)) for a, b in self.connectivity)
        )

    @property
    def num_nodes(self) -> int:
        return len(self.node_coords)

    @property
    def num_elements(self) -> int:
        return len(self.connectivity)


@dataclass(frozen=True)
class BarRegion1D:
    """Axial stiffness data on an interval, with a constant body force."""

    x_start: float
    x_end: float
    E: float
    A: float
    body_force: float = 0.0


def uniform_mesh(x_min: float, x_max: float, num_elements: int) -> Mesh1D:
    """Subdivide ``[x_min, x_max]`` into equal 2-node elements.

    Produces ``num_elements + 1`` equally spaced nodes; element ``k``
    connects nodes ``(k, k + 1)``.
    """
    if num_elements < 1:
        raise InvalidArgumentError(f"num_elements must be >= 1, got {num_elements}")
    if not x_max > x_min:
        raise InvalidArgumentError(f"empty interval [{x_min}, {x_max}]")
    coords = np.linspace(x_min, x_max, num_elements + 1)
    return Mesh1D(coords, tuple((k, k + 1) for k in range(num_elements)))


def local_stiffness(E: float, A: float, L: float) -> np.ndarray:
    """The 2x2 axial bar stiffness ``EA/L * [[1, -1], [-1, 1]]``."""
    if not L > 0.0:
        raise DegenerateElementError(f"bar length must be positive, got {L}")
    k = E * A / L
    return np.array([[k, -k], [-k, k]])


def _check_regions(regions: Sequence[BarRegion1D]) -> None:
    for idx, region in enumerate(regions):
        if not region.x_end > region.x_start:
            raise InvalidArgumentError(f"region {idx} covers an empty interval")
        if not (region.E > 0.0 and region.A > 0.0):
            raise InvalidArgumentError(f"region {idx} needs positive E and A")


def _region_for(regions: Sequence[BarRegion1D], x_mid: float) -> BarRegion1D:
    # Lowest matching region wins ties at shared boundaries.
    for region in sorted(regions, key=lambda r: r.x_start):
        if region.x_start <= x_mid <= region.x_end:
            return region
    raise ConfigurationError(f"no region covers element midpoint x={x_mid}")


def solve_linear_elastic(
    mesh: Mesh1D,
    regions: Sequence[BarRegion1D],
    dirichlet: Mapping[int, float],
    neumann: Mapping[int, float] | None = None,
) -> np.ndarray:
    """Solve the 1D linear-elastic bar problem on a mesh.

    Assembles the global axial stiffness and load vector (point forces from
    ``neumann`` plus consistent body-force loads from the regions), then
    solves the partitioned system so prescribed nodes carry their Dirichlet
    values exactly. Returns the nodal displacement vector.
    """
    n = mesh.num_nodes
    _check_regions(regions)
    if not dirichlet:
        raise SingularSystemError("at least one Dirichlet constraint is required")
    for node in dirichlet:
        if not 0 <= node < n:
            raise InvalidArgumentError(f"Dirichlet constraint on unknown node {node}")
    neumann = dict(neumann or {})
    for node in neumann:
        if not 0 <= node < n:
            raise InvalidArgumentError(f"point force on unknown node {node}")

    K = np.zeros((n, n))
    F = np.zeros(n)
    x = mesh.node_coords
    for i, j in mesh.connectivity:
        L = x[j] - x[i]
        region = _region_for(regions, 0.5 * (x[i] + x[j]))
        k = local_stiffness(region.E, region.A, L)
        dofs = [i, j]
        K[np.ix_(dofs, dofs)] += k
        F[i] += 0.5 * region.body_force * L
        F[j] += 0.5 * region.body_force * L
    for node, force in neumann.items():
        F[node] += force

    fixed = np.array(sorted(dirichlet), dtype=int)
    free = np.setdiff1d(np.arange(n), fixed)
    u = np.zeros(n)
    u[fixed] = [dirichlet[node] for node in fixed]
    if free.size:
        rhs = F[free] - K[np.ix_(free, fixed)] @ u[fixed]
        u[free] = np.linalg.solve(K[np.ix_(free, free)], rhs)
    return u
