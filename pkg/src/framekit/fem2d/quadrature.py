"""Gauss quadrature on the reference square and the unit triangle.

Reference domains: the square ``[-1, 1]^2`` (measure 4) and the unit
triangle with vertices (0,0), (1,0), (0,1) (measure 1/2).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import InvalidArgumentError
from ..model import _readonly


@dataclass(frozen=True)
class QuadratureRule:
    """Integration points (n x 2, reference coordinates) and weights."""

    points: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "points", _readonly(np.asarray(self.points, dtype=float)))
        object.__setattr__(self, "weights", _readonly(np.asarray(self.weights, dtype=float)))


_QUAD_POINTS_PER_AXIS = {1: 1, 4: 2, 9: 3}


def quad_quadrature(num_points: int) -> QuadratureRule:
    """Tensor-product Gauss-Legendre rule on the square ``[-1, 1]^2``.

    Supported totals are 1, 4 and 9 (1, 2 or 3 points per axis); a rule
    with p points per axis integrates per-axis degree ``2p - 1`` exactly.
    Points are ordered with xi varying fastest.
    """
    try:
        per_axis = _QUAD_POINTS_PER_AXIS[num_points]
    except KeyError:
        raise InvalidArgumentError(
            f"unsupported point count {num_points}; choose one of 1, 4, 9"
        ) from None
    x, w = np.polynomial.legendre.leggauss(per_axis)
    points = [(xi, eta) for eta in x for xi in x]
    weights = [wx * wy for wy in w for wx in w]
    return QuadratureRule(np.array(points), np.array(weights))


def tri_quadrature(num_points: int) -> QuadratureRule:
    """Symmetric Gauss rule on the unit triangle.

    Supported counts: 1 (centroid, exact for degree 1), 3 (mid-edge, exact
    for degree 2) and 4 (centroid plus three interior points with a negative
    centroid weight, exact for degree 3). Weights sum to the triangle
    area 1/2.
    """
    if num_points == 1:
        points = [(1.0 / 3.0, 1.0 / 3.0)]
        weights = [0.5]
    elif num_points == 3:
        points = [(0.5, 0.0), (0.5, 0.5), (0.0, 0.5)]
        weights = [1.0 / 6.0] * 3
    elif num_points == 4:
        points = [(1.0 / 3.0, 1.0 / 3.0), (0.6, 0.2), (0.2, 0.6), (0.2, 0.2)]
        weights = [-27.0 / 96.0, 25.0 / 96.0, 25.0 / 96.0, 25.0 / 96.0]
    else:
        raise InvalidArgumentError(
            f"unsupported point count {num_points}; choose one of 1, 3, 4"
        )
    return QuadratureRule(np.array(points), np.array(weights))
