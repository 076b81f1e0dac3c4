"""Shape functions and reference-coordinate derivatives for Tri6 and Quad8.

Node ordering follows the usual convention: corner nodes counterclockwise
first, then mid-side nodes counterclockwise starting on the edge between
corners 1 and 2.

Tri6 on the unit triangle::

    2
    |\\
    5 4        corners  0:(0,0)  1:(1,0)  2:(0,1)
    |  \\      midsides 3:(1/2,0)  4:(1/2,1/2)  5:(0,1/2)
    0-3-1

Quad8 (serendipity, no interior node) on ``[-1, 1]^2``::

    3--6--2
    |     |    corners  0:(-1,-1) 1:(1,-1) 2:(1,1) 3:(-1,1)
    7     5    midsides 4:(0,-1)  5:(1,0)  6:(0,1) 7:(-1,0)
    0--4--1

Evaluation outside the reference element is permitted (extrapolation).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..model import _readonly

TRI6_NODES = np.array(
    [(0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (0.5, 0.0), (0.5, 0.5), (0.0, 0.5)]
)
TRI6_NODES.setflags(write=False)

QUAD8_NODES = np.array(
    [
        (-1.0, -1.0),
        (1.0, -1.0),
        (1.0, 1.0),
        (-1.0, 1.0),
        (0.0, -1.0),
        (1.0, 0.0),
        (0.0, 1.0),
        (-1.0, 0.0),
    ]
)
QUAD8_NODES.setflags(write=False)


@dataclass(frozen=True)
class ShapeEval:
    """Shape-function values (n,) and reference gradients (n, 2) at a point."""

    values: np.ndarray
    gradients: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "values", _readonly(self.values))
        object.__setattr__(self, "gradients", _readonly(self.gradients))


def _tri6_at(xi: float, eta: float) -> ShapeEval:
    lam = 1.0 - xi - eta  # barycentric coordinate of corner 0
    values = np.array(
        [
            lam * (2.0 * lam - 1.0),
            xi * (2.0 * xi - 1.0),
            eta * (2.0 * eta - 1.0),
            4.0 * lam * xi,
            4.0 * xi * eta,
            4.0 * eta * lam,
        ]
    )
    gradients = np.array(
        [
            [1.0 - 4.0 * lam, 1.0 - 4.0 * lam],
            [4.0 * xi - 1.0, 0.0],
            [0.0, 4.0 * eta - 1.0],
            [4.0 * (lam - xi), -4.0 * xi],
            [4.0 * eta, 4.0 * xi],
            [-4.0 * eta, 4.0 * (lam - eta)],
        ]
    )
    return ShapeEval(values, gradients)


def _quad8_at(xi: float, eta: float) -> ShapeEval:
    values = np.empty(8)
    gradients = np.empty((8, 2))
    for a in range(4):
        xa, ea = QUAD8_NODES[a]
        values[a] = 0.25 * (1.0 + xi * xa) * (1.0 + eta * ea) * (xi * xa + eta * ea - 1.0)
        gradients[a, 0] = 0.25 * xa * (1.0 + eta * ea) * (2.0 * xi * xa + eta * ea)
        gradients[a, 1] = 0.25 * ea * (1.0 + xi * xa) * (xi * xa + 2.0 * eta * ea)
    for a in (4, 6):  # mid-sides on eta = -1, +1
        ea = QUAD8_NODES[a, 1]
        values[a] = 0.5 * (1.0 - xi * xi) * (1.0 + eta * ea)
        gradients[a, 0] = -xi * (1.0 + eta * ea)
        gradients[a, 1] = 0.5 * (1.0 - xi * xi) * ea
    for a in (5, 7):  # mid-sides on xi = +1, -1
        xa = QUAD8_NODES[a, 0]
        values[a] = 0.5 * (1.0 + xi * xa) * (1.0 - eta * eta)
        gradients[a, 0] = 0.5 * xa * (1.0 - eta * eta)
        gradients[a, 1] = -eta * (1.0 + xi * xa)
    return ShapeEval(values, gradients)


def tri6_shape(points: Sequence[tuple[float, float]]) -> list[ShapeEval]:
    """Evaluate the quadratic triangle basis at reference points.

    The six functions are the quadratic Lagrange basis in barycentric
    coordinates: Kronecker-delta at the nodes and a partition of unity
    everywhere.
    """
    return [_tri6_at(float(xi), float(eta)) for xi, eta in points]


def quad8_shape(points: Sequence[tuple[float, float]]) -> list[ShapeEval]:
    """Evaluate the 8-node serendipity basis at reference points."""
    return [_quad8_at(float(xi), float(eta)) for xi, eta in points]
