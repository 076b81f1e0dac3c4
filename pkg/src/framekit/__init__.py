"""framekit: matrix structural analysis for 3D frames plus 1D/2D FEM kernels.

The core workflow builds a :class:`~framekit.model.FrameModel`, then runs
:func:`~framekit.solve.solve_linear_static` for displacements and reactions
or :func:`~framekit.solve.solve_elastic_critical_load` for the buckling
load factor. Lower-level building blocks (element matrices, assembly,
partitioning, quadrature, shape functions, meshing) are exposed for direct
use; the same pipelines are also available through the CLI
(``framekit ...``) and the HTTP service (:mod:`framekit.service`).
"""

__version__ = "0.1.0"

from .assembly import (
    assemble_elastic_stiffness,
    assemble_geometric_stiffness,
    assemble_loads,
    element_dof_map,
    partition_dofs,
)
from .errors import (
    ComplexSpectrumError,
    ConfigurationError,
    DegenerateElementError,
    DegenerateGeometryError,
    FrameKitError,
    IllConditionedError,
    InvalidArgumentError,
    ModelValidationError,
    NoBucklingModeError,
    SchemaError,
    SingularSystemError,
)
from .model import (
    DOFS_PER_NODE,
    BucklingSolution,
    DofPartition,
    FrameElement,
    FrameModel,
    Point3,
    Section,
    StaticSolution,
    Support,
    global_dof_index,
    validate_model,
)
from .solve import (
    SolverSettings,
    solve_buckling,
    solve_elastic_critical_load,
    solve_linear_static,
    solve_partitioned,
)

__all__ = [
    "__version__",
    "DOFS_PER_NODE",
    "Point3",
    "Section",
    "FrameElement",
    "Support",
    "FrameModel",
    "DofPartition",
    "StaticSolution",
    "BucklingSolution",
    "SolverSettings",
    "global_dof_index",
    "validate_model",
    "element_dof_map",
    "assemble_elastic_stiffness",
    "assemble_geometric_stiffness",
    "assemble_loads",
    "partition_dofs",
    "solve_partitioned",
    "solve_buckling",
    "solve_linear_static",
    "solve_elastic_critical_load",
    "FrameKitError",
    "InvalidArgumentError",
    "SchemaError",
    "ModelValidationError",
    "DegenerateElementError",
    "DegenerateGeometryError",
    "ConfigurationError",
    "SingularSystemError",
    "IllConditionedError",
    "NoBucklingModeError",
    "ComplexSpectrumError",
]
