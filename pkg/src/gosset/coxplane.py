"""Coxeter-plane construction for any finite Coxeter group.

The plane is spanned by two norm-sqrt2 vectors gamma1, gamma2 with
gamma1.gamma2 = -c, where c = 2cos(pi/h) is the top eigenvalue of
2I - C and C is the Gram matrix.  gamma1 (resp. gamma2) combines the
simple roots of one colour class of the diagram bipartition, weighted by
the Perron-Frobenius eigenvector; normalising the eigenvector so each
colour class has unit sum of squares makes |gamma|^2 = 2 automatic.

The dihedral generators S1, S2 are the products of the simple
reflections within each colour class (same-colour reflections commute).
Their product S1 S2 is a Coxeter element; its orbits split the root set
into rank orbits of h roots each.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .diagrams import bipartition, gram_matrix
from .errors import ConvergenceError
from .roots import RootSystem

_EIG_TOL = 1e-13
_EIG_CAP = 10**5


@dataclass(frozen=True)
class CoxeterPlane:
    """Plane data: eigenvalue c, positive eigenvector z (indexed like the
    diagram nodes), plane vectors, colour classes, and Coxeter number."""

    c: float
    z: np.ndarray
    gamma1: np.ndarray
    gamma2: np.ndarray
    color_a: tuple[int, ...]
    color_b: tuple[int, ...]
    h: int


@dataclass(frozen=True)
class Orbit:
    """One Coxeter-element orbit of roots.

    ``label`` is the diagram node whose simple root lies in the orbit
    (None when the orbit contains no simple root); ``indices`` point into
    the parent root list.
    """

    label: int | None
    indices: tuple[int, ...]
    members: np.ndarray


def _matrix_bipartition(m: np.ndarray) -> tuple[list[int], list[int]]:
    """Two-colour the graph of nonzero off-diagonal entries (0-based)."""
    n = m.shape[0]
    color = [-1] * n
    for start in range(n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            i = queue.pop(0)
            for j in range(n):
                if j != i and m[i, j] != 0.0:
                    if color[j] == -1:
                        color[j] = 1 - color[i]
                        queue.append(j)
                    elif color[j] == color[i]:
                        raise ValueError("matrix graph is not bipartite")
    a = [i for i in range(n) if color[i] == 0]
    b = [i for i in range(n) if color[i] == 1]
    return a, b


def _is_connected_graph(m: np.ndarray) -> bool:
    n = m.shape[0]
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and m[i, j] != 0.0 and j not in seen:
                seen.add(j)
                stack.append(j)
    return len(seen) == n


def perron_eigenvector(m: np.ndarray, color_a: list[int] | None = None) -> tuple[float, np.ndarray]:
    """Top eigenvalue and positive eigenvector of a symmetric matrix with
    nonnegative off-diagonal entries (meant for 2I - C of a connected
    diagram), via shifted power iteration.

    The eigenvector is scaled so that the sum of squares over each colour
    class of the matrix graph equals 1 (the two sums agree automatically
    for bipartite graphs).  Iteration stops once the componentwise
    eigen-residual drops below 1e-13, which leaves ample margin for the
    1e-12 eigenvalue accuracy the acceptance checks demand.
    """
    m = np.asarray(m, dtype=float)
    n = m.shape[0]
    if m.shape != (n, n):
        raise ValueError("matrix must be square")
    if not _is_connected_graph(m):
        raise ValueError("matrix graph is disconnected; the Perron vector is not unique")
    if color_a is None:
        color_a, _ = _matrix_bipartition(m)

    shifted = m + 2.0 * np.eye(n)  # strictly positive top eigenvalue for finite type
    v = np.full(n, 1.0 / math.sqrt(n))
    lam = 0.0
    for _ in range(_EIG_CAP):
        w = shifted @ v
        lam = float(v @ w)
        if np.max(np.abs(w - lam * v)) < _EIG_TOL:
            break
        v = w / np.linalg.norm(w)
    else:
        raise ConvergenceError("power iteration did not converge")

    if np.min(v) <= 0.0:
        raise ConvergenceError("power iteration left the positive cone")
    scale = math.sqrt(float(np.sum(v[list(color_a)] ** 2)))
    return lam - 2.0, v / scale


def build_coxeter_plane(rs: RootSystem) -> CoxeterPlane:
    """Construct the Coxeter plane of a connected root system of rank >= 2."""
    d = rs.diagram
    if d.rank < 2:
        raise ValueError("the Coxeter plane needs rank >= 2")
    if not d.is_connected():
        raise ValueError("the Coxeter plane needs a connected diagram")
    ca, cb = bipartition(d)
    g = gram_matrix(d).as_array()
    m = 2.0 * np.eye(d.rank) - g
    c, z = perron_eigenvector(m, color_a=[i - 1 for i in ca])
    gamma1 = np.sum([z[i - 1] * rs.simples[i - 1] for i in ca], axis=0)
    gamma2 = np.sum([z[i - 1] * rs.simples[i - 1] for i in cb], axis=0)
    h = round(math.pi / math.acos(c / 2.0))
    for a in (z, gamma1, gamma2):
        a.setflags(write=False)
    return CoxeterPlane(c=c, z=z, gamma1=gamma1, gamma2=gamma2, color_a=ca, color_b=cb, h=h)


def dihedral_generators(plane: CoxeterPlane, rs: RootSystem) -> tuple[np.ndarray, np.ndarray]:
    """S1 = product of colour-A simple reflections, S2 likewise for B."""
    n = rs.rank
    s1 = np.eye(n)
    for i in plane.color_a:
        s1 = s1 @ rs.reflections[i - 1]
    s2 = np.eye(n)
    for i in plane.color_b:
        s2 = s2 @ rs.reflections[i - 1]
    return s1, s2


def rotation_order(mat: np.ndarray, cap: int = 10**4, tol: float = 1e-9) -> int:
    """Smallest k >= 1 with mat^k = identity (within tol)."""
    n = mat.shape[0]
    acc = np.eye(n)
    for k in range(1, cap + 1):
        acc = acc @ mat
        if np.max(np.abs(acc - np.eye(n))) < tol:
            return k
    raise ValueError(f"no power up to {cap} returned to the identity")


def orbit_decomposition(
    rs: RootSystem,
    s1: np.ndarray,
    s2: np.ndarray,
    require_simple_labels: bool = False,
) -> list[Orbit]:
    """Partition the roots into orbits of the Coxeter element w = S1 S2.

    Orbits are labelled by the node of the simple root they contain and
    sorted by that label; orbits without a simple root (possible outside
    the E8/H4 setting) get label None and sort after the labelled ones.
    With ``require_simple_labels`` every orbit must contain exactly one
    simple root, as holds for E8 and H4.
    """
    w = s1 @ s2
    images = rs.roots @ w.T
    # permutation induced by w on the root list
    dist = np.max(np.abs(images[:, None, :] - rs.roots[None, :, :]), axis=2)
    perm = np.argmin(dist, axis=1)
    if np.max(dist[np.arange(len(perm)), perm]) > 1e-6:
        raise ValueError("Coxeter element does not permute the root set")

    simple_at = {rs.root_index(rs.simples[i]): i + 1 for i in range(rs.rank)}

    seen = np.zeros(len(perm), dtype=bool)
    orbits: list[Orbit] = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycle = [start]
        seen[start] = True
        j = int(perm[start])
        while j != start:
            cycle.append(j)
            seen[j] = True
            j = int(perm[j])
        labels = sorted(simple_at[i] for i in cycle if i in simple_at)
        if require_simple_labels and len(labels) != 1:
            raise ValueError(
                f"orbit contains {len(labels)} simple roots; expected exactly one"
            )
        orbits.append(
            Orbit(
                label=labels[0] if labels else None,
                indices=tuple(cycle),
                members=rs.roots[cycle].copy(),
            )
        )
    orbits.sort(key=lambda o: (0, o.label) if o.label is not None else (1, o.indices[0]))
    return orbits
