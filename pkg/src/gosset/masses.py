"""The eight-mass spectrum and its three independent routes.

Route one is the closed form: m2 = tau m1, m3 = 2 m1 cos(pi/30),
m4 = 2 m2 cos(7pi/30), m5 = 2 m2 cos(2pi/15), m6 = tau m3, m7 = tau m4,
m8 = tau m5.  Route two diagonalises the affine Toda mass matrix
M = sum_i n_i a_i a_i^T over the E8 simples plus the lowest root
a_0 = -theta (n_0 = 1); the square roots of its eigenvalues reproduce
the spectrum up to scale.  Route three reads the radii of the Gosset
circles off the projection module.  ``ratio_report`` quantifies the
agreement of any two routes.

The companion 9x9 matrix N_ij = sqrt(n_i n_j) (a_i . a_j) is the other
Gram matrix of the same 9x8 array with rows sqrt(n_i) a_i, so it shares
M's nonzero spectrum and picks up exactly one zero eigenvalue from the
relation sum_i n_i a_i = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .golden import TAU
from .roots import RootSystem, highest_root

_TAU = float(TAU)


@dataclass(frozen=True)
class MassSpectrum:
    """Eight masses in ascending order; m1 sets the scale."""

    masses: tuple[float, ...]
    m1: float


@dataclass(frozen=True)
class TodaMassMatrix:
    """Mass-squared matrix M (8x8), its singular companion N (9x9), and
    the marks n_0..n_8 with n_0 = 1."""

    m: np.ndarray
    n: np.ndarray
    marks: tuple[int, ...]


@dataclass(frozen=True)
class RatioReport:
    """Componentwise comparison of two positive lists after sorting and
    normalising each by its smallest entry."""

    max_rel_dev: float
    pairing: tuple[tuple[int, int], ...]


def zamolodchikov_spectrum(m1: float) -> MassSpectrum:
    """The closed-form mass octet at scale m1 > 0."""
    if m1 <= 0:
        raise ValueError("m1 must be positive")
    m2 = _TAU * m1
    m3 = 2.0 * m1 * math.cos(math.pi / 30.0)
    m4 = 2.0 * m2 * math.cos(7.0 * math.pi / 30.0)
    m5 = 2.0 * m2 * math.cos(2.0 * math.pi / 15.0)
    masses = (m1, m2, m3, m4, m5, _TAU * m3, _TAU * m4, _TAU * m5)
    if any(b <= a for a, b in zip(masses, masses[1:])):
        raise AssertionError("mass octet is not ascending")
    return MassSpectrum(masses=masses, m1=m1)


def toda_mass_matrix(rs: RootSystem) -> TodaMassMatrix:
    """Build M and N from a root system with computed marks (unit mass
    parameter)."""
    if rs.marks is None:
        raise ValueError("Toda mass matrix needs a crystallographic root system with marks")
    theta, _ = highest_root(rs)
    vectors = np.vstack([-theta, rs.simples])  # a_0 = -theta first
    weights = np.array([1, *rs.marks], dtype=float)

    m = np.zeros((rs.rank, rs.rank))
    for w, a in zip(weights, vectors):
        m += w * np.outer(a, a)

    sq = np.sqrt(weights)
    n = (sq[:, None] * (vectors @ vectors.T)) * sq[None, :]
    return TodaMassMatrix(m=m, n=n, marks=tuple(int(w) for w in weights))


def jacobi_eigenvalues(a: np.ndarray, tol: float = 1e-13, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.

    Sweeps run in fixed row-major order over the upper triangle; the
    iteration stops when the off-diagonal Frobenius norm falls below tol.
    Returns the eigenvalues sorted ascending.
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("matrix must be square")
    if np.max(np.abs(a - a.T)) > 1e-12 * max(1.0, np.max(np.abs(a))):
        raise ValueError("matrix must be symmetric")
    a = 0.5 * (a + a.T)

    def offdiag_norm() -> float:
        off = a - np.diag(np.diag(a))
        return float(np.sqrt(np.sum(off * off)))

    for _ in range(max_sweeps):
        if offdiag_norm() < tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(1.0, theta))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                rot = np.eye(n)
                rot[p, p] = rot[q, q] = c
                rot[p, q] = s
                rot[q, p] = -s
                a = rot.T @ a @ rot
    else:
        raise ValueError("Jacobi iteration did not reach the off-diagonal tolerance")
    return np.sort(np.diag(a))


def toda_masses(rs: RootSystem) -> np.ndarray:
    """Square roots of the Toda mass-matrix eigenvalues, ascending."""
    tm = toda_mass_matrix(rs)
    eig = jacobi_eigenvalues(tm.m)
    if np.min(eig) <= 0:
        raise ValueError("Toda mass matrix is not positive definite")
    return np.sqrt(eig)


def ratio_report(a, b) -> RatioReport:
    """Compare two positive length-matched lists as ratio vectors."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape or a.ndim != 1:
        raise ValueError("ratio_report needs two equal-length vectors")
    if np.min(a) <= 0 or np.min(b) <= 0:
        raise ValueError("ratio_report needs strictly positive entries")
    ia = np.argsort(a, kind="stable")
    ib = np.argsort(b, kind="stable")
    ra = a[ia] / a[ia[0]]
    rb = b[ib] / b[ib[0]]
    dev = float(np.max(np.abs(ra - rb) / rb))
    pairing = tuple((int(x), int(y)) for x, y in zip(ia, ib))
    return RatioReport(max_rel_dev=dev, pairing=pairing)
