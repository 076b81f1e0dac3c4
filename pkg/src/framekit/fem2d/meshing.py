"""Structured quadratic meshes on axis-aligned rectangles.

Both generators refine an ``nx`` by ``ny`` cell grid to the half-step
lattice of ``(2*nx + 1) * (2*ny + 1)`` points. The Tri6 mesh keeps every
lattice point and splits each cell into two triangles along the diagonal
from the cell's lower-left to its upper-right corner; the Quad8 mesh drops
the cell centers. Element node ordering matches
:mod:`framekit.fem2d.shapes`, and every corner loop is counterclockwise.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import InvalidArgumentError
from ..model import _readonly


@dataclass(frozen=True)
class Mesh2D:
    """Node coordinates (M x 2), connectivity (E x k) and an element tag."""

    coords: np.ndarray
    connectivity: np.ndarray
    kind: str

    def __post_init__(self):
        object.__setattr__(self, "coords", _readonly(np.asarray(self.coords, dtype=float)))
        object.__setattr__(
            self, "connectivity", _readonly(np.asarray(self.connectivity, dtype=int))
        )

    @property
    def num_nodes(self) -> int:
        return len(self.coords)

    @property
    def num_elements(self) -> int:
        return len(self.connectivity)


def _check_rectangle(x_lo, y_lo, x_hi, y_hi, nx, ny):
    if not (x_hi > x_lo and y_hi > y_lo):
        raise InvalidArgumentError(
            f"empty rectangle [{x_lo}, {x_hi}] x [{y_lo}, {y_hi}]"
        )
    if nx < 1 or ny < 1:
        raise InvalidArgumentError(f"cell counts must be >= 1, got nx={nx}, ny={ny}")


def _lattice(x_lo, y_lo, x_hi, y_hi, nx, ny):
    xs = np.linspace(x_lo, x_hi, 2 * nx + 1)
    ys = np.linspace(y_lo, y_hi, 2 * ny + 1)
    return xs, ys


def tri6_rectangle(
    x_lo: float, y_lo: float, x_hi: float, y_hi: float, nx: int, ny: int
) -> Mesh2D:
    """Mesh a rectangle with quadratic triangles, two per grid cell.

    Returns ``(2*nx + 1) * (2*ny + 1)`` nodes and ``2 * nx * ny`` elements.
    """
    _check_rectangle(x_lo, y_lo, x_hi, y_hi, nx, ny)
    xs, ys = _lattice(x_lo, y_lo, x_hi, y_hi, nx, ny)
    width = 2 * nx + 1
    coords = np.array([(x, y) for y in ys for x in xs])

    def node(i, j):
        return j * width + i

    connectivity = []
    for cy in range(ny):
        for cx in range(nx):
            i, j = 2 * cx, 2 * cy
            a = node(i, j)
            b = node(i + 2, j)
            c = node(i + 2, j + 2)
            d = node(i, j + 2)
            # lower triangle (a, b, c); midsides on a-b, b-c, c-a
            connectivity.append(
                (a, b, c, node(i + 1, j), node(i + 2, j + 1), node(i + 1, j + 1))
            )
            # upper triangle (a, c, d); midsides on a-c, c-d, d-a
            connectivity.append(
                (a, c, d, node(i + 1, j + 1), node(i + 1, j + 2), node(i, j + 1))
            )
    return Mesh2D(coords, np.array(connectivity), "tri6")


def quad8_rectangle(
    x_lo: float, y_lo: float, x_hi: float, y_hi: float, nx: int, ny: int
) -> Mesh2D:
    """Mesh a rectangle with 8-node serendipity quadrilaterals.

    Returns ``(2*nx + 1) * (2*ny + 1) - nx * ny`` nodes (the refined lattice
    minus the unused cell centers) and ``nx * ny`` elements.
    """
    _check_rectangle(x_lo, y_lo, x_hi, y_hi, nx, ny)
    xs, ys = _lattice(x_lo, y_lo, x_hi, y_hi, nx, ny)
    width = 2 * nx + 1

    # Cell centers sit at odd/odd lattice positions and carry no node.
    index = {}
    coords = []
    for j, y in enumerate(ys):
        for i, x in enumerate(xs):
            if i % 2 == 1 and j % 2 == 1:
                continue
            index[(i, j)] = len(coords)
            coords.append((x, y))

    connectivity = []
    for cy in range(ny):
        for cx in range(nx):
            i, j = 2 * cx, 2 * cy
            connectivity.append(
                (
                    index[(i, j)],
                    index[(i + 2, j)],
                    index[(i + 2, j + 2)],
                    index[(i, j + 2)],
                    index[(i + 1, j)],
                    index[(i + 2, j + 1)],
                    index[(i + 1, j + 2)],
                    index[(i, j + 1)],
                )
            )
    return Mesh2D(np.array(coords), np.array(connectivity), "quad8")
