"""Coxeter diagrams and their Gram (Cartan) matrices.

Nodes are labelled 1..rank.  An edge (i, j, m) with m >= 3 means the
reflections r_i, r_j satisfy (r_i r_j)^m = 1; node pairs without an edge
commute (m = 2).  With all simple roots normalised to norm sqrt(2), the
Gram matrix has diagonal 2 and off-diagonal -2cos(pi/m_ij).  Entries are
exact golden numbers for m in {2, 3, 5} and floats otherwise.

The E8 labelling used here is the chain 1-2-3-4-5-6-7 with node 8
attached to node 5.  It is the unique labelling for which the pairs
(1,7), (2,6), (3,5), (4,8) fold onto the H4 chain 1-2-3-4; the folding
module verifies this structurally.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DiagramSpecError
from .golden import GoldenNumber, TAU

Edge = tuple[int, int, int]


@dataclass(frozen=True)
class CoxeterDiagram:
    """A Coxeter diagram: node count plus labelled edges.

    Edges are stored as (i, j, m) with 1 <= i < j <= rank and m >= 3,
    sorted, with at most one edge per node pair.
    """

    rank: int
    edges: tuple[Edge, ...]
    name: str | None = None

    def __post_init__(self):
        if self.rank < 1:
            raise DiagramSpecError("rank must be positive")
        seen: set[tuple[int, int]] = set()
        canon = []
        for e in self.edges:
            if len(e) != 3:
                raise DiagramSpecError(f"edge {e!r} is not (i, j, m)")
            i, j, m = e
            if i == j:
                raise DiagramSpecError(f"self-loop at node {i}")
            if not (1 <= i <= self.rank and 1 <= j <= self.rank):
                raise DiagramSpecError(f"edge {e!r} out of range for rank {self.rank}")
            if m < 3:
                raise DiagramSpecError(f"edge label m={m} < 3 (omit the edge for m=2)")
            if i > j:
                i, j = j, i
            if (i, j) in seen:
                raise DiagramSpecError(f"duplicate edge between {i} and {j}")
            seen.add((i, j))
            canon.append((i, j, int(m)))
        object.__setattr__(self, "edges", tuple(sorted(canon)))

    def label(self, i: int, j: int) -> int:
        """m_ij for a node pair (2 when no edge joins them)."""
        a, b = min(i, j), max(i, j)
        for x, y, m in self.edges:
            if (x, y) == (a, b):
                return m
        return 2

    def neighbors(self, i: int) -> tuple[int, ...]:
        out = []
        for x, y, _ in self.edges:
            if x == i:
                out.append(y)
            elif y == i:
                out.append(x)
        return tuple(sorted(out))

    def is_connected(self) -> bool:
        if self.rank == 1:
            return True
        seen = {1}
        stack = [1]
        while stack:
            for n in self.neighbors(stack.pop()):
                if n not in seen:
                    seen.add(n)
                    stack.append(n)
        return len(seen) == self.rank

    def is_crystallographic(self) -> bool:
        """All edge labels in {2, 3} (the simply-laced case used for marks)."""
        return all(m == 3 for _, _, m in self.edges)

    def __str__(self):
        nm = self.name or f"rank-{self.rank} diagram"
        es = ", ".join(f"{i}-{j}:{m}" for i, j, m in self.edges)
        return f"{nm} (rank {self.rank}; edges {es or 'none'})"


@dataclass(frozen=True)
class GramMatrix:
    """Symmetric matrix of simple-root inner products.

    Entries are GoldenNumber where the value lies in Q(sqrt5)
    (m_ij in {2, 3, 5} and the diagonal) and plain floats otherwise.
    """

    entries: tuple[tuple[GoldenNumber | float, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.entries)

    @property
    def exact(self) -> bool:
        return all(isinstance(x, GoldenNumber) for row in self.entries for x in row)

    def as_array(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.entries], dtype=float)


def _gram_entry(m: int) -> GoldenNumber | float:
    """Off-diagonal inner product -2cos(pi/m) of norm-sqrt2 simple roots."""
    if m == 2:
        return GoldenNumber(Fraction(0))
    if m == 3:
        return GoldenNumber(Fraction(-1))
    if m == 5:
        return -TAU  # -2cos(pi/5)
    return -2.0 * math.cos(math.pi / m)


def gram_matrix(d: CoxeterDiagram) -> GramMatrix:
    two = GoldenNumber(Fraction(2))
    zero = GoldenNumber(Fraction(0))
    rows = []
    for i in range(1, d.rank + 1):
        row: list[GoldenNumber | float] = []
        for j in range(1, d.rank + 1):
            if i == j:
                row.append(two)
            else:
                m = d.label(i, j)
                row.append(zero if m == 2 else _gram_entry(m))
        rows.append(tuple(row))
    return GramMatrix(tuple(rows))


def cartan_matrix(d: CoxeterDiagram) -> GramMatrix:
    """Alias for gram_matrix: with norm-sqrt2 roots the two coincide."""
    return gram_matrix(d)


def bipartition(d: CoxeterDiagram) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Two-colour the diagram graph; the lowest node of each component
    goes to the first class.  Raises if the graph has an odd cycle."""
    color: dict[int, int] = {}
    for start in range(1, d.rank + 1):
        if start in color:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            i = queue.pop(0)
            for j in d.neighbors(i):
                if j not in color:
                    color[j] = 1 - color[i]
                    queue.append(j)
                elif color[j] == color[i]:
                    raise ValueError("diagram graph is not bipartite")
    a = tuple(sorted(i for i, c in color.items() if c == 0))
    b = tuple(sorted(i for i, c in color.items() if c == 1))
    return a, b


def is_finite_type(d: CoxeterDiagram, tol: float = 1e-9) -> bool:
    """Positive definiteness of the Gram matrix via leading principal minors."""
    g = gram_matrix(d).as_array()
    for k in range(1, d.rank + 1):
        if np.linalg.det(g[:k, :k]) <= tol:
            return False
    return True


# -- named diagrams -----------------------------------------------------

def _chain(n: int, m_last: int | None = None) -> list[Edge]:
    edges = [(i, i + 1, 3) for i in range(1, n)]
    if m_last is not None and edges:
        i, j, _ = edges[-1]
        edges[-1] = (i, j, m_last)
    return edges


def _named(name: str) -> CoxeterDiagram | None:
    s = name.strip()
    m = re.fullmatch(r"[Aa](\d+)", s)
    if m:
        n = int(m.group(1))
        if n < 1:
            raise DiagramSpecError("A_n needs n >= 1")
        return CoxeterDiagram(n, tuple(_chain(n)), name=f"A{n}")
    m = re.fullmatch(r"[Dd](\d+)", s)
    if m:
        n = int(m.group(1))
        if n < 3:
            raise DiagramSpecError("D_n needs n >= 3")
        edges = _chain(n - 1) + [(n - 2, n, 3)]
        return CoxeterDiagram(n, tuple(edges), name=f"D{n}")
    if s in ("E6", "e6"):
        return CoxeterDiagram(6, tuple(_chain(5) + [(3, 6, 3)]), name="E6")
    if s in ("E7", "e7"):
        return CoxeterDiagram(7, tuple(_chain(6) + [(3, 7, 3)]), name="E7")
    if s in ("E8", "e8"):
        # chain 1..7 with node 8 on node 5: matches the folding pairs
        # (1,7), (2,6), (3,5), (4,8)
        return CoxeterDiagram(8, tuple(_chain(7) + [(5, 8, 3)]), name="E8")
    if s in ("H2", "h2"):
        return CoxeterDiagram(2, ((1, 2, 5),), name="H2")
    if s in ("H3", "h3"):
        return CoxeterDiagram(3, tuple(_chain(3, m_last=5)), name="H3")
    if s in ("H4", "h4"):
        return CoxeterDiagram(4, tuple(_chain(4, m_last=5)), name="H4")
    if s in ("H4'", "h4'"):
        # Same abstract diagram as H4; the 72-degree root realisation is
        # produced by the folding module, not by a different graph.
        return CoxeterDiagram(4, tuple(_chain(4, m_last=5)), name="H4'")
    m = re.fullmatch(r"[Ii]2\((\d+)\)", s)
    if m:
        mm = int(m.group(1))
        if mm < 3:
            raise DiagramSpecError("I2(m) needs m >= 3")
        return CoxeterDiagram(2, ((1, 2, mm),), name=f"I2({mm})")
    return None


def _parse_edge_list(s: str) -> CoxeterDiagram:
    rank = None
    edges: list[Edge] = []
    for part in s.split(";"):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise DiagramSpecError(f"expected key=value, got {part!r}")
        key, _, val = part.partition("=")
        key = key.strip().lower()
        val = val.strip()
        if key == "rank":
            try:
                rank = int(val)
            except ValueError:
                raise DiagramSpecError(f"bad rank {val!r}") from None
        elif key == "edges":
            if not val:
                continue
            for item in val.split(","):
                item = item.strip()
                m = re.fullmatch(r"(\d+)\s*-\s*(\d+)(?::(\d+))?", item)
                if not m:
                    raise DiagramSpecError(f"bad edge {item!r} (want i-j or i-j:m)")
                i, j = int(m.group(1)), int(m.group(2))
                label = int(m.group(3)) if m.group(3) else 3
                edges.append((i, j, label))
        else:
            raise DiagramSpecError(f"unknown key {key!r} in diagram spec")
    if rank is None:
        raise DiagramSpecError("diagram spec needs rank=N")
    return CoxeterDiagram(rank, tuple(edges), name=s)


def build_diagram(spec: str) -> CoxeterDiagram:
    """Build a diagram from a name ("E8", "H4", "I2(30)", "A5", ...) or
    from the text grammar "rank=N;edges=i-j:m,i-j:m,..." (m defaults to 3).
    """
    if not isinstance(spec, str):
        raise DiagramSpecError(f"diagram spec must be a string, got {type(spec).__name__}")
    named = _named(spec)
    if named is not None:
        return named
    if "=" in spec:
        return _parse_edge_list(spec)
    raise DiagramSpecError(f"unknown diagram name {spec!r}")
