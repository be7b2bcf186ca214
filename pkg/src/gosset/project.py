"""Projections onto the Coxeter plane and the grouping of images into
concentric circles.

Two projections are provided.  The orthogonal one uses the orthonormal
in-plane pair (i, j) built from gamma1, gamma2; it sends each root orbit
onto a single circle (the Gosset circles, for E8).  The skew one takes
the covariant components L1 = v.gamma1/sqrt2, L2 = v.gamma2/sqrt2 as if
the gammas were orthonormal, which stretches the picture so that the
image norm becomes sqrt(L1^2 + L2^2 - c L1 L2); the embedding
x = L1 - (c/2) L2, y = L2 sqrt(1 - c^2/4) is the unique linear one with
the x-axis along gamma1 reproducing that norm, so planar plots and radii
agree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .coxplane import CoxeterPlane
from .diagrams import gram_matrix
from .errors import FiniteTypeError
from .roots import RootSystem

ORTHOGONAL = "orthogonal"
SKEW = "skew"

#: relative tolerance for merging image radii into one circle
RADIUS_REL_TOL = 1e-6


@dataclass(frozen=True)
class PlanarPoint:
    """Image of one vector in orthonormal plane coordinates."""

    x: float
    y: float
    radius: float
    source_index: int

    @property
    def angle(self) -> float:
        """Polar angle in [0, 2*pi)."""
        a = math.atan2(self.y, self.x)
        return a + 2.0 * math.pi if a < 0 else a


@dataclass(frozen=True)
class Circle:
    radius: float
    count: int
    members: tuple[PlanarPoint, ...]


@dataclass(frozen=True)
class CircleSpectrum:
    """Concentric-circle decomposition of a projected vector set."""

    circles: tuple[Circle, ...]
    mode: str

    @property
    def radii(self) -> tuple[float, ...]:
        return tuple(c.radius for c in self.circles)

    @property
    def total_points(self) -> int:
        return sum(c.count for c in self.circles)


def ortho_basis(plane: CoxeterPlane) -> tuple[np.ndarray, np.ndarray]:
    """Orthonormal basis of the plane: i along gamma1, j completing it."""
    c = plane.c
    s = math.sqrt(1.0 - c * c / 4.0)  # sin(pi/h)
    i_hat = plane.gamma1 / math.sqrt(2.0)
    j_hat = (plane.gamma2 / math.sqrt(2.0) + (c / 2.0) * i_hat) / s
    return i_hat, j_hat


def project_orthogonal(plane: CoxeterPlane, v: np.ndarray, source_index: int = 0) -> PlanarPoint:
    i_hat, j_hat = ortho_basis(plane)
    v = np.asarray(v, dtype=float)
    x = float(v @ i_hat)
    y = float(v @ j_hat)
    return PlanarPoint(x=x, y=y, radius=math.hypot(x, y), source_index=source_index)


def project_skew(plane: CoxeterPlane, v: np.ndarray, source_index: int = 0) -> PlanarPoint:
    v = np.asarray(v, dtype=float)
    c = plane.c
    l1 = float(v @ plane.gamma1) / math.sqrt(2.0)
    l2 = float(v @ plane.gamma2) / math.sqrt(2.0)
    x = l1 - (c / 2.0) * l2
    y = l2 * math.sqrt(1.0 - c * c / 4.0)
    return PlanarPoint(x=x, y=y, radius=math.hypot(x, y), source_index=source_index)


def project_many(plane: CoxeterPlane, vectors: np.ndarray, mode: str) -> list[PlanarPoint]:
    if mode == ORTHOGONAL:
        return [project_orthogonal(plane, v, i) for i, v in enumerate(vectors)]
    if mode == SKEW:
        return [project_skew(plane, v, i) for i, v in enumerate(vectors)]
    raise ValueError(f"unknown projection mode {mode!r}")


def circle_spectrum(
    points: list[PlanarPoint],
    rel_tol: float = RADIUS_REL_TOL,
    mode: str = ORTHOGONAL,
) -> CircleSpectrum:
    """Group points into circles by radius (single linkage on the sorted
    radius list with relative tolerance).  Circles come out in ascending
    radius; members in ascending angle, ties broken by source index."""
    if not points:
        raise ValueError("cannot build a circle spectrum from zero points")
    if mode not in (ORTHOGONAL, SKEW):
        raise ValueError(f"unknown projection mode {mode!r}")
    ordered = sorted(points, key=lambda p: p.radius)
    groups: list[list[PlanarPoint]] = [[ordered[0]]]
    for p in ordered[1:]:
        prev = groups[-1][-1].radius
        gap = p.radius - prev
        if gap <= rel_tol * max(p.radius, prev) or gap <= 1e-12:
            groups[-1].append(p)
        else:
            groups.append([p])
    circles = []
    for g in groups:
        members = tuple(sorted(g, key=lambda p: (p.angle, p.source_index)))
        radius = float(np.mean([p.radius for p in g]))
        circles.append(Circle(radius=radius, count=len(g), members=members))
    return CircleSpectrum(circles=tuple(circles), mode=mode)


def fundamental_weights(rs: RootSystem) -> np.ndarray:
    """Rows are the fundamental weights: w_j . a_i = delta_ij (zero
    against foreign simples, positive against their own)."""
    g = gram_matrix(rs.diagram).as_array()
    try:
        return np.linalg.solve(g, rs.simples)
    except np.linalg.LinAlgError:
        raise FiniteTypeError("Gram matrix is singular; weights are undefined") from None
