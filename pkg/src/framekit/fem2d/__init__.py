"""Reference-element kernels for Tri6 and Quad8: quadrature rules, shape
functions, structured rectangle meshes, and element-level field operations."""

from .fields import quad8_edge_load, quad8_gradient_integral, quad8_physical_gradient
from .meshing import Mesh2D, quad8_rectangle, tri6_rectangle
from .quadrature import QuadratureRule, quad_quadrature, tri_quadrature
from .shapes import QUAD8_NODES, TRI6_NODES, ShapeEval, quad8_shape, tri6_shape

__all__ = [
    "Mesh2D",
    "QuadratureRule",
    "ShapeEval",
    "QUAD8_NODES",
    "TRI6_NODES",
    "quad_quadrature",
    "tri_quadrature",
    "quad8_shape",
    "tri6_shape",
    "quad8_rectangle",
    "tri6_rectangle",
    "quad8_edge_load",
    "quad8_physical_gradient",
    "quad8_gradient_integral",
]
