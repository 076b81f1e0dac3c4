"""Partitioned linear statics and elastic critical-load analysis.

The static path solves ``K_ff u_f = F_f - K_fc u_c`` on the free DOFs of a
partitioned system and recovers support reactions at the fixed DOFs. The
buckling path linearizes stability about a solved displacement state: the
geometric stiffness assembled from that state enters the generalized
eigenproblem ``K_e phi = lambda (-K_g) phi`` on the free DOFs, whose
smallest positive eigenvalue is the critical load factor. The applied load
map plays the role of the reference load, so the physical critical load is
``lambda_cr`` times whatever was applied.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .assembly import (
    assemble_elastic_stiffness,
    assemble_geometric_stiffness,
    assemble_loads,
    partition_dofs,
    prescribed_values,
)
from .errors import (
    ComplexSpectrumError,
    IllConditionedError,
    InvalidArgumentError,
    ModelValidationError,
    NoBucklingModeError,
    SingularSystemError,
)
from .model import (
    BucklingSolution,
    DofPartition,
    FrameModel,
    StaticSolution,
    validate_model,
)


@dataclass(frozen=True)
class SolverSettings:
    """Numerical guardrails for the linear and eigenvalue solvers.

    ``condition_limit`` rejects reduced systems whose condition number has
    grown to the point of wholesale precision loss. ``eig_positivity_floor``
    discards non-positive eigenvalues (load reversal or numerical noise)
    before picking the critical factor, and ``complex_tolerance`` bounds the
    relative imaginary part an eigenvalue may carry before it is rejected.
    """

    condition_limit: float = 1e16
    eig_positivity_floor: float = 1e-10
    complex_tolerance: float = 1e-8

    def __post_init__(self):
        for name in ("condition_limit", "eig_positivity_floor", "complex_tolerance"):
            if not getattr(self, name) > 0.0:
                raise InvalidArgumentError(f"{name} must be positive")


DEFAULT_SETTINGS = SolverSettings()


def _require_solvable(model: FrameModel) -> None:
    violations = validate_model(model)
    if violations:
        raise ModelValidationError(violations)


def solve_partitioned(
    K: np.ndarray,
    F: np.ndarray,
    partition: DofPartition,
    prescribed: np.ndarray | None = None,
    settings: SolverSettings = DEFAULT_SETTINGS,
) -> StaticSolution:
    """Solve a partitioned linear system and recover reactions.

    ``prescribed`` holds displacement values aligned with
    ``partition.fixed`` (zeros when omitted). Reactions are the net nodal
    forces the supports must supply: ``(K u - F)`` evaluated at the fixed
    DOFs and zero elsewhere.
    """
    K = np.asarray(K, dtype=float)
    F = np.asarray(F, dtype=float)
    n = K.shape[0]
    if K.shape != (n, n) or F.shape != (n,):
        raise InvalidArgumentError("stiffness and load shapes are inconsistent")
    free, fixed = partition.free, partition.fixed
    if len(free) + len(fixed) != n:
        raise InvalidArgumentError("partition does not match the system size")
    if len(fixed) == 0:
        raise SingularSystemError(
            "no fixed DOFs: rigid-body motion makes the system singular"
        )
    if prescribed is None:
        prescribed = np.zeros(len(fixed))
    prescribed = np.asarray(prescribed, dtype=float)
    if prescribed.shape != (len(fixed),):
        raise InvalidArgumentError("prescribed values must align with the fixed set")

    u = np.zeros(n)
    u[fixed] = prescribed
    if len(free):
        K_ff = K[np.ix_(free, free)]
        condition = np.linalg.cond(K_ff)
        if not np.isfinite(condition) or condition >= settings.condition_limit:
            raise IllConditionedError(
                f"estimated condition number {condition:.3e} at or beyond "
                f"limit {settings.condition_limit:.3e}"
            )
        rhs = F[free] - K[np.ix_(free, fixed)] @ u[fixed]
        u[free] = np.linalg.solve(K_ff, rhs)

    reactions = np.zeros(n)
    reactions[fixed] = (K @ u - F)[fixed]
    return StaticSolution(displacements=u, reactions=reactions)


def solve_buckling(
    K_elastic: np.ndarray,
    K_geometric: np.ndarray,
    partition: DofPartition,
    settings: SolverSettings = DEFAULT_SETTINGS,
) -> BucklingSolution:
    """Smallest positive eigenvalue of ``(K_e + lambda K_g) phi = 0``.

    The pencil is solved on the free DOFs as the generalized problem
    ``K_e phi = lambda (-K_g) phi``. The geometric stiffness is generally
    indefinite, so the spectrum may contain complex pairs and infinite
    values (directions K_g does not load); those are filtered out before
    the smallest eigenvalue above ``eig_positivity_floor`` is selected.
    The mode is embedded over all DOFs, zero at fixed ones, and normalized
    so its max-magnitude entry equals +1.
    """
    K_e = np.asarray(K_elastic, dtype=float)
    K_g = np.asarray(K_geometric, dtype=float)
    if K_e.shape != K_g.shape:
        raise InvalidArgumentError("stiffness matrices must have matching shapes")
    free = partition.free
    if len(free) == 0:
        raise InvalidArgumentError("buckling analysis needs at least one free DOF")

    values, vectors = scipy.linalg.eig(
        K_e[np.ix_(free, free)], -K_g[np.ix_(free, free)]
    )
    finite = np.isfinite(values)
    realish = finite & (
        np.abs(values.imag) <= settings.complex_tolerance * np.abs(values)
    )
    if finite.any() and not realish.any():
        raise ComplexSpectrumError(
            "all finite eigenvalues carry a non-negligible imaginary part"
        )
    candidates = np.flatnonzero(realish & (values.real > settings.eig_positivity_floor))
    if candidates.size == 0:
        raise NoBucklingModeError(
            "no eigenvalue above the positivity floor; the load state does not buckle"
        )
    chosen = candidates[np.argmin(values.real[candidates])]

    mode = np.zeros(K_e.shape[0])
    mode[free] = vectors[:, chosen].real
    peak = mode[np.argmax(np.abs(mode))]
    mode /= peak  # max-magnitude entry becomes exactly +1
    mode += 0.0  # clear negative zeros left by a sign flip
    return BucklingSolution(lambda_cr=float(values.real[chosen]), mode=mode)


def solve_linear_static(
    model: FrameModel, settings: SolverSettings = DEFAULT_SETTINGS
) -> StaticSolution:
    """Run the full linear-static pipeline on a frame model.

    Assembles the elastic stiffness and load vector, partitions DOFs by the
    boundary conditions, and solves with any prescribed support values.
    """
    _require_solvable(model)
    K = assemble_elastic_stiffness(model)
    F = assemble_loads(model)
    partition = partition_dofs(model)
    return solve_partitioned(
        K, F, partition, prescribed_values(model, partition), settings
    )


def solve_elastic_critical_load(
    model: FrameModel, settings: SolverSettings = DEFAULT_SETTINGS
) -> BucklingSolution:
    """Critical load factor of a frame under its applied load map.

    Pipeline: linear static solve, geometric stiffness assembly from the
    converged displacement field, then the buckling eigensolve. The
    returned ``lambda_cr`` is the factor by which the applied load map must
    be scaled to reach the critical load.
    """
    _require_solvable(model)
    K = assemble_elastic_stiffness(model)
    F = assemble_loads(model)
    partition = partition_dofs(model)
    static = solve_partitioned(
        K, F, partition, prescribed_values(model, partition), settings
    )
    K_g = assemble_geometric_stiffness(model, static.displacements)
    return solve_buckling(K, K_g, partition, settings)
