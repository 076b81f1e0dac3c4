"""Shared builders for the frame-analysis tests."""

import numpy as np

#: Pass/fail lines collected by the acceptance suite; echoed at the end of
#: the pytest run by the terminal-summary hook in conftest.
ACCEPTANCE_LINES = []

from framekit import FrameElement, FrameModel, Point3, Section, Support
from framekit.assembly import element_dof_map
from framekit.beam3d import elastic_stiffness, transformation_matrix


def cantilever_section():
    return Section(E=210e6, nu=0.3, A=0.01, Iy=4e-2, Iz=6e-2, J=1e-2)


def cantilever_model(load=(0.0, 0.0, -100.0, 0.0, 0.0, 0.0), num_elements=1, length=2.0,
                     section=None, axis=(1.0, 0.0, 0.0)):
    """Cantilever along ``axis``, fully fixed at node 0, tip load at the end."""
    section = section or cantilever_section()
    axis = np.asarray(axis, dtype=float)
    axis = axis / np.linalg.norm(axis)
    nodes = tuple(
        Point3(*(i * length / num_elements * axis)) for i in range(num_elements + 1)
    )
    elements = tuple(FrameElement(i, i + 1, section) for i in range(num_elements))
    return FrameModel(
        nodes=nodes,
        elements=elements,
        boundary={0: Support.fixed()},
        loads={num_elements: tuple(load)},
    )


def random_model(rng, max_elements=4, fix_all=False):
    """A random well-posed chain model with up to ``max_elements`` members.

    Node 0 is always fully fixed; with ``fix_all`` every node is constrained
    in at least one DOF pattern drawn at random.
    """
    n_el = int(rng.integers(1, max_elements + 1))
    nodes = [np.zeros(3)]
    for _ in range(n_el):
        step = rng.uniform(-1.0, 1.0, 3)
        while np.linalg.norm(step) < 0.3:
            step = rng.uniform(-1.0, 1.0, 3)
        nodes.append(nodes[-1] + step)

    elements = []
    for e in range(n_el):
        section = Section(
            E=float(rng.uniform(1e6, 1e9)),
            nu=float(rng.uniform(0.0, 0.45)),
            A=float(rng.uniform(1e-3, 1e-1)),
            Iy=float(rng.uniform(1e-6, 1e-2)),
            Iz=float(rng.uniform(1e-6, 1e-2)),
            J=float(rng.uniform(1e-6, 1e-2)),
        )
        local_z = None
        if rng.random() < 0.4:
            axis = nodes[e + 1] - nodes[e]
            ref = rng.standard_normal(3)
            ref -= (ref @ axis) * axis / (axis @ axis)
            norm = np.linalg.norm(ref)
            if norm > 1e-3:
                local_z = tuple(ref / norm)
        elements.append(FrameElement(e, e + 1, section, local_z=local_z))

    boundary = {0: Support.fixed()}
    if fix_all:
        for node in range(1, n_el + 1):
            if rng.random() < 0.3:
                flags = tuple(bool(b) for b in rng.integers(0, 2, 6))
                if any(flags):
                    boundary[node] = Support(flags)

    loads = {}
    for node in range(1, n_el + 1):
        if rng.random() < 0.7:
            loads[node] = tuple(rng.uniform(-100.0, 100.0, 6))

    return FrameModel(
        nodes=tuple(Point3(*p) for p in nodes),
        elements=tuple(elements),
        boundary=boundary,
        loads=loads,
    )


def gather_assemble(model):
    """Brute-force gather-form elastic assembly.

    Loops over every global DOF pair and, for each pair, searches every
    element for contributions by reverse DOF lookup. Independent of the
    scatter ordering used by the library.
    """
    n = model.num_dofs
    globalized = []
    for element in model.elements:
        s = element.section
        p_i = model.nodes[element.node_i]
        p_j = model.nodes[element.node_j]
        L = float(np.linalg.norm(p_j.as_array() - p_i.as_array()))
        gamma = transformation_matrix(p_i, p_j, element.local_z)
        k = gamma.T @ elastic_stiffness(s.E, s.nu, s.A, L, s.Iy, s.Iz, s.J) @ gamma
        globalized.append((list(element_dof_map(element)), k))

    K = np.zeros((n, n))
    for p in range(n):
        for q in range(n):
            for dofs, k in globalized:
                if p in dofs and q in dofs:
                    K[p, q] += k[dofs.index(p), dofs.index(q)]
    return K


def rigid_body_vectors(model):
    """Six rigid motions of the node set: 3 translations, 3 linearized
    rotations about the centroid."""
    coords = np.array([p.as_array() for p in model.nodes])
    center = coords.mean(axis=0)
    vectors = []
    for k in range(3):
        r = np.zeros(model.num_dofs)
        r[k::6] = 1.0
        vectors.append(r)
    for k in range(3):
        axis = np.zeros(3)
        axis[k] = 1.0
        r = np.zeros(model.num_dofs)
        for node, x in enumerate(coords):
            r[6 * node : 6 * node + 3] = np.cross(axis, x - center)
            r[6 * node + 3 : 6 * node + 6] = axis
        vectors.append(r)
    return vectors
