"""Simple-root realisation, reflections, and root-system enumeration.

Simple roots are realised as the rows of the Cholesky factor of the Gram
matrix (row i has zeros beyond coordinate i), so the realisation is
deterministic and a single code path serves crystallographic and
non-crystallographic diagrams alike.  The full root set is the closure
of the simples under the simple reflections, deduplicated at 1e-6 in
max-norm and stored in lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .diagrams import CoxeterDiagram, gram_matrix
from .errors import FiniteTypeError

#: max-norm tolerance for identifying two enumerated roots
DEDUP_TOL = 1e-6

#: safety cap on the closure (non-finite-type inputs blow up fast)
CLOSURE_CAP = 10**6


def _frozen(a: np.ndarray) -> np.ndarray:
    """Mark an array read-only; the dataclasses holding it are immutable."""
    a = np.asarray(a, dtype=float)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class RootSystem:
    """A realised root system with its reflection generators.

    ``simples[i]`` is the root of diagram node i+1.  ``roots`` holds all
    roots as rows, lexicographically sorted.  ``marks`` are the
    coefficients of the highest root in the simple basis (None for
    non-crystallographic diagrams).
    """

    diagram: CoxeterDiagram
    simples: np.ndarray
    roots: np.ndarray
    reflections: tuple[np.ndarray, ...]
    coxeter_number: int
    marks: tuple[int, ...] | None

    @property
    def rank(self) -> int:
        return self.diagram.rank

    def root_index(self, v: np.ndarray) -> int:
        """Index of the root equal to v (within DEDUP_TOL, max-norm)."""
        d = np.max(np.abs(self.roots - np.asarray(v, dtype=float)), axis=1)
        i = int(np.argmin(d))
        if d[i] > DEDUP_TOL:
            raise ValueError("vector is not a root of this system")
        return i


def realize_simple_roots(d: CoxeterDiagram) -> np.ndarray:
    """Rows are the simple roots; pairwise inner products reproduce the
    Gram matrix.  Raises FiniteTypeError when the Gram matrix is not
    positive definite."""
    g = gram_matrix(d).as_array()
    try:
        low = np.linalg.cholesky(g)
    except np.linalg.LinAlgError:
        raise FiniteTypeError(
            f"{d.name or 'diagram'} is not of finite type (Gram matrix not positive definite)"
        ) from None
    return low


def reflect(root: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Reflect v in the hyperplane orthogonal to root."""
    root = np.asarray(root, dtype=float)
    v = np.asarray(v, dtype=float)
    nn = float(root @ root)
    if nn == 0.0:
        raise ValueError("cannot reflect in a zero vector")
    return v - (2.0 * float(v @ root) / nn) * root


def reflection_matrix(root: np.ndarray) -> np.ndarray:
    root = np.asarray(root, dtype=float)
    nn = float(root @ root)
    if nn == 0.0:
        raise ValueError("cannot reflect in a zero vector")
    n = root.shape[0]
    return np.eye(n) - (2.0 / nn) * np.outer(root, root)


def _dedup_new(candidates: np.ndarray, accepted: np.ndarray) -> np.ndarray:
    """Rows of candidates farther than DEDUP_TOL (max-norm) from every
    accepted row and from each other."""
    keep: list[np.ndarray] = []
    for c in candidates:
        if accepted.size and np.min(np.max(np.abs(accepted - c), axis=1)) <= DEDUP_TOL:
            continue
        if keep and np.min(np.max(np.abs(np.array(keep) - c), axis=1)) <= DEDUP_TOL:
            continue
        keep.append(c)
    if not keep:
        return np.empty((0, candidates.shape[1]))
    return np.array(keep)


def enumerate_roots(simples: np.ndarray, diagram: CoxeterDiagram) -> RootSystem:
    """Close the simple roots under all simple reflections.

    The result is sorted lexicographically by coordinates.  The Coxeter
    number is |roots| / rank; marks are filled in for connected
    crystallographic diagrams.
    """
    simples = np.asarray(simples, dtype=float)
    if simples.shape[0] != diagram.rank:
        raise ValueError(f"{simples.shape[0]} simple roots for a rank-{diagram.rank} diagram")
    refl = tuple(reflection_matrix(a) for a in simples)
    roots = simples.copy()
    frontier = simples.copy()
    while frontier.size:
        cand = np.vstack([frontier @ r for r in refl])  # r symmetric: rows map rows
        new = _dedup_new(cand, roots)
        if new.size:
            roots = np.vstack([roots, new])
            if len(roots) > CLOSURE_CAP:
                raise FiniteTypeError("root closure exceeded cap; diagram is not finite type")
        frontier = new

    order = np.lexsort(roots.T[::-1])
    roots = roots[order]

    n = len(roots)
    if n % diagram.rank:
        raise FiniteTypeError(
            f"root count {n} not divisible by rank {diagram.rank}; "
            "mixed-h reducible diagrams are unsupported"
        )
    h = n // diagram.rank

    marks = None
    if diagram.is_crystallographic() and diagram.is_connected():
        _, marks = _expand_highest(simples, roots)
    return RootSystem(
        diagram=diagram,
        simples=_frozen(simples),
        roots=_frozen(roots),
        reflections=tuple(_frozen(r) for r in refl),
        coxeter_number=h,
        marks=marks,
    )


def root_system(diagram: CoxeterDiagram) -> RootSystem:
    """Realise and enumerate in one step."""
    return enumerate_roots(realize_simple_roots(diagram), diagram)


def _expand_highest(simples: np.ndarray, roots: np.ndarray) -> tuple[np.ndarray, tuple[int, ...]]:
    # roots = coeffs @ simples  =>  solve simples^T x^T = roots^T
    coeffs = np.linalg.solve(simples.T, roots.T).T
    sums = coeffs.sum(axis=1)
    i = int(np.argmax(sums))
    marks_f = coeffs[i]
    marks = tuple(int(round(x)) for x in marks_f)
    if np.max(np.abs(marks_f - np.array(marks))) > 1e-9 or any(m < 1 for m in marks):
        raise ValueError("highest-root coefficients are not positive integers")
    return roots[i].copy(), marks


def highest_root(rs: RootSystem) -> tuple[np.ndarray, tuple[int, ...]]:
    """The unique root whose expansion over the simples has maximal
    coefficient sum, together with those (integer) coefficients."""
    if not rs.diagram.is_crystallographic():
        raise ValueError("highest root requires a crystallographic diagram (all m_ij in {2,3})")
    if not rs.diagram.is_connected():
        raise ValueError("highest root requires a connected diagram")
    return _expand_highest(rs.simples, rs.roots)
