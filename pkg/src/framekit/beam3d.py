"""Element-local routines for 3D Euler-Bernoulli beams.

Local DOF order is ``[u1, v1, w1, tx1, ty1, tz1, u2, v2, w2, tx2, ty2, tz2]``
with u along the member axis; the end-force vector uses the same slots as
``[Fx_i, Fy_i, Fz_i, Mx_i, My_i, Mz_i, Fx_j, ...]``.

The transformation matrix maps *global to local* displacement components,
``u_local = gamma @ u_global``, so a local matrix globalizes as
``gamma.T @ k_local @ gamma``. Do not transform displacements with
``gamma.T``; that transposed direction is only correct for pulling local
force vectors back to global components.
"""

from __future__ import annotations

import numpy as np

from .errors import DegenerateElementError, InvalidArgumentError
from .model import (
    LOCAL_Z_PARALLEL_TOL,
    LOCAL_Z_UNIT_TOL,
    Point3,
    Section,
)

#: An element is treated as vertical when ``|ex . global_z|`` exceeds
#: ``1 - VERTICAL_TOL``; the orientation fallback then switches from
#: global z to global y as the reference direction.
VERTICAL_TOL = 1e-8

_GLOBAL_Y = np.array([0.0, 1.0, 0.0])
_GLOBAL_Z = np.array([0.0, 0.0, 1.0])


def _as_xyz(p) -> np.ndarray:
    if isinstance(p, Point3):
        return p.as_array()
    a = np.asarray(p, dtype=float)
    if a.shape != (3,):
        raise InvalidArgumentError("a 3D point needs exactly 3 coordinates")
    return a


def elastic_stiffness(
    E: float, nu: float, A: float, L: float, Iy: float, Iz: float, J: float
) -> np.ndarray:
    """The 12x12 local elastic stiffness of a 3D Euler-Bernoulli beam.

    Combines four uncoupled blocks: axial ``EA/L`` on (u1, u2), torsion
    ``GJ/L`` with ``G = E / (2 (1 + nu))`` on (tx1, tx2), bending about the
    local z axis (v, tz DOFs, using Iz) and bending about the local y axis
    (w, ty DOFs, using Iy). The matrix is symmetric with six rigid-body
    modes and six positive eigenvalues.
    """
    if not L > 0.0:
        raise DegenerateElementError(f"element length must be positive, got {L}")
    k = np.zeros((12, 12))

    axial = E * A / L
    k[0, 0] = k[6, 6] = axial
    k[0, 6] = k[6, 0] = -axial

    torsion = E * J / (2.0 * (1.0 + nu) * L)
    k[3, 3] = k[9, 9] = torsion
    k[3, 9] = k[9, 3] = -torsion

    # Bending about local z: v-translations and tz-rotations.
    k[1, 1] = k[7, 7] = 12.0 * E * Iz / L**3
    k[1, 7] = k[7, 1] = -12.0 * E * Iz / L**3
    k[1, 5] = k[5, 1] = k[1, 11] = k[11, 1] = 6.0 * E * Iz / L**2
    k[5, 7] = k[7, 5] = k[7, 11] = k[11, 7] = -6.0 * E * Iz / L**2
    k[5, 5] = k[11, 11] = 4.0 * E * Iz / L
    k[5, 11] = k[11, 5] = 2.0 * E * Iz / L

    # Bending about local y: w-translations and ty-rotations. The shear
    # coupling carries the opposite sign to the z block because a positive
    # ty rotation moves the +x end in -w.
    k[2, 2] = k[8, 8] = 12.0 * E * Iy / L**3
    k[2, 8] = k[8, 2] = -12.0 * E * Iy / L**3
    k[2, 4] = k[4, 2] = k[2, 10] = k[10, 2] = -6.0 * E * Iy / L**2
    k[4, 8] = k[8, 4] = k[8, 10] = k[10, 8] = 6.0 * E * Iy / L**2
    k[4, 4] = k[10, 10] = 4.0 * E * Iy / L
    k[4, 10] = k[10, 4] = 2.0 * E * Iy / L

    return k


def geometric_stiffness(
    L: float,
    A: float,
    I_rho: float,
    Fx2: float,
    Mx2: float,
    My1: float,
    Mz1: float,
    My2: float,
    Mz2: float,
) -> np.ndarray:
    """The 12x12 local geometric (initial-stress) stiffness.

    Couples the axial end force ``Fx2``, the end torque ``Mx2`` and the end
    bending moments to the transverse and rotational DOFs, including the
    polar-inertia (Wagner) torsion terms scaled by ``I_rho / (A L)``. Every
    entry is degree-1 homogeneous in the force/moment arguments, so a zero
    force state yields the zero matrix and tension (positive ``Fx2``)
    stiffens while compression destabilizes.

    Construction: fill the upper triangle, add the transpose, then set the
    diagonal.
    """
    if not L > 0.0:
        raise DegenerateElementError(f"element length must be positive, got {L}")
    if not A > 0.0:
        raise DegenerateElementError(f"section area must be positive, got {A}")

    k = np.zeros((12, 12))
    k[0, 6] = -Fx2 / L
    k[1, 3] = My1 / L
    k[1, 4] = Mx2 / L
    k[1, 5] = Fx2 / 10.0
    k[1, 7] = -6.0 * Fx2 / (5.0 * L)
    k[1, 9] = My2 / L
    k[1, 10] = -Mx2 / L
    k[1, 11] = Fx2 / 10.0
    k[2, 3] = Mz1 / L
    k[2, 4] = -Fx2 / 10.0
    k[2, 5] = Mx2 / L
    k[2, 8] = -6.0 * Fx2 / (5.0 * L)
    k[2, 9] = Mz2 / L
    k[2, 10] = -Fx2 / 10.0
    k[2, 11] = -Mx2 / L
    k[3, 4] = -(2.0 * Mz1 - Mz2) / 6.0
    k[3, 5] = (2.0 * My1 - My2) / 6.0
    k[3, 7] = -My1 / L
    k[3, 8] = -Mz1 / L
    k[3, 9] = -Fx2 * I_rho / (A * L)
    k[3, 10] = -(Mz1 + Mz2) / 6.0
    k[3, 11] = (My1 + My2) / 6.0
    k[4, 7] = -Mx2 / L
    k[4, 8] = Fx2 / 10.0
    k[4, 9] = -(Mz1 + Mz2) / 6.0
    k[4, 10] = -Fx2 * L / 30.0
    k[4, 11] = Mx2 / 2.0
    k[5, 7] = -Fx2 / 10.0
    k[5, 8] = -Mx2 / L
    k[5, 9] = (My1 + My2) / 6.0
    k[5, 10] = -Mx2 / 2.0
    k[5, 11] = -Fx2 * L / 30.0
    k[7, 9] = -My2 / L
    k[7, 10] = Mx2 / L
    k[7, 11] = -Fx2 / 10.0
    k[8, 9] = -Mz2 / L
    k[8, 10] = Fx2 / 10.0
    k[8, 11] = Mx2 / L
    k[9, 10] = (Mz1 - 2.0 * Mz2) / 6.0
    k[9, 11] = -(My1 - 2.0 * My2) / 6.0

    k = k + k.T

    k[0, 0] = k[6, 6] = Fx2 / L
    k[1, 1] = k[7, 7] = k[2, 2] = k[8, 8] = 6.0 * Fx2 / (5.0 * L)
    k[3, 3] = k[9, 9] = Fx2 * I_rho / (A * L)
    k[4, 4] = k[5, 5] = k[10, 10] = k[11, 11] = 2.0 * Fx2 * L / 15.0
    return k


def rotation_triad(p_i, p_j, local_z=None) -> np.ndarray:
    """Right-handed orthonormal element axes as rows (ex, ey, ez).

    ``ex`` points from node i to node j. ``ey`` is built by crossing a
    reference direction with ``ex``: the caller-supplied ``local_z`` when
    given (must be unit length, not parallel to the axis), otherwise global
    z, or global y for vertical members. ``ez = ex x ey`` closes the triad.
    """
    xi, xj = _as_xyz(p_i), _as_xyz(p_j)
    d = xj - xi
    length = float(np.linalg.norm(d))
    if not length > 0.0:
        raise DegenerateElementError("zero-length element has no orientation")
    ex = d / length

    if local_z is None:
        vertical = abs(float(ex @ _GLOBAL_Z)) > 1.0 - VERTICAL_TOL
        ref = _GLOBAL_Y if vertical else _GLOBAL_Z
    else:
        ref = np.asarray(local_z, dtype=float)
        if ref.shape != (3,):
            raise InvalidArgumentError("local_z needs exactly 3 components")
        if abs(float(np.linalg.norm(ref)) - 1.0) > LOCAL_Z_UNIT_TOL:
            raise InvalidArgumentError("local_z must be a unit vector")
        if abs(float(ref @ ex)) >= 1.0 - LOCAL_Z_PARALLEL_TOL:
            raise InvalidArgumentError("local_z is parallel to the element axis")

    ey = np.cross(ref, ex)
    ey /= np.linalg.norm(ey)
    ez = np.cross(ex, ey)
    return np.vstack((ex, ey, ez))


def transformation_matrix(p_i, p_j, local_z=None) -> np.ndarray:
    """The 12x12 block-diagonal transformation built from the element triad.

    Four identical 3x3 rotation blocks map global displacement/rotation
    components to local ones. The result is orthogonal
    (``gamma @ gamma.T == I``) and each block has determinant +1.
    """
    R = rotation_triad(p_i, p_j, local_z)
    gamma = np.zeros((12, 12))
    for blk in range(4):
        gamma[3 * blk : 3 * blk + 3, 3 * blk : 3 * blk + 3] = R
    return gamma


def element_end_forces(
    section: Section, p_i, p_j, local_z, u_global_element: np.ndarray
) -> np.ndarray:
    """Local end forces and moments from global element displacements.

    Rotates the 12 global displacement components into the element frame
    and applies the local elastic stiffness:
    ``f_local = k_local @ (gamma @ u_global)``.
    """
    u = np.asarray(u_global_element, dtype=float)
    if u.shape != (12,):
        raise InvalidArgumentError("element displacement vector must have 12 entries")
    xi, xj = _as_xyz(p_i), _as_xyz(p_j)
    length = float(np.linalg.norm(xj - xi))
    gamma = transformation_matrix(xi, xj, local_z)
    k = elastic_stiffness(
        section.E, section.nu, section.A, length, section.Iy, section.Iz, section.J
    )
    return k @ (gamma @ u)
