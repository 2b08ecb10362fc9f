"""Core data model: generalized Cartan matrices and Dynkin diagrams.

A generalized Cartan matrix (GCM) is an integer square matrix ``A`` with

* ``A[i][i] == 2`` on the diagonal,
* ``A[i][j] <= 0`` off the diagonal,
* ``A[i][j] == 0`` exactly when ``A[j][i] == 0``.

The entry ``A[i][j]`` is the pairing of the j-th simple root against the i-th
simple coroot.  Vertices are numbered 1..n in every public interface; the
underlying storage is 0-based tuples.

A Dynkin diagram is the equivalent edge-labelled graph: vertices 1..n, and for
each off-diagonal pair with nonzero entries an undirected edge ``{i, j}``
carrying the label ``(p, q) = (-A[i][j], -A[j][i])`` recorded for ``i < j``.
Both directions of the dictionary (matrix to diagram and back) are exact, so
round trips are lossless.

All types in this module are immutable and hashable; functions are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    DynkinError,
    MatrixValidationError,
    NotAdjacentError,
)

__all__ = [
    "EdgeLabel",
    "DynkinDiagram",
    "GeneralizedCartanMatrix",
    "validate_gcm",
    "matrix_to_diagram",
    "diagram_to_matrix",
    "edge_multiplicity",
    "dual",
    "is_indecomposable",
    "components",
    "induced_subdiagram",
]


# == edge labels ==


@dataclass(frozen=True, order=True)
class EdgeLabel:
    """Label ``(p, q)`` of the edge ``{i, j}`` with ``i < j``.

    ``p = -A[i][j]`` and ``q = -A[j][i]``; both are positive integers for a
    genuine edge.
    """

    p: int
    q: int

    @property
    def symmetric(self) -> bool:
        return self.p == self.q

    @property
    def product(self) -> int:
        return self.p * self.q

    @property
    def render_class(self) -> str:
        """Drawing style of this edge.

        ``single`` for (1,1); ``arrow2``/``arrow3``/``arrow4`` when one side is
        1 and the other is 2, 3 or 4; ``double_headed`` for (2,2); ``labeled``
        for everything else (the label pair is then printed explicitly).
        """
        p, q = self.p, self.q
        if p == q == 1:
            return "single"
        if p == q == 2:
            return "double_headed"
        lo, hi = min(p, q), max(p, q)
        if lo == 1 and hi in (2, 3, 4):
            return f"arrow{hi}"
        return "labeled"


@dataclass(frozen=True)
class DynkinDiagram:
    """Edge-labelled graph form of a GCM.

    ``edges`` holds ``(i, j, label)`` triples with ``1 <= i < j <= rank``,
    sorted by ``(i, j)``.
    """

    rank: int
    edges: tuple[tuple[int, int, EdgeLabel], ...]

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise DynkinError(f"diagram needs at least one vertex, got rank {self.rank}")
        seen = set()
        for i, j, label in self.edges:
            if not (1 <= i < j <= self.rank):
                raise DynkinError(f"edge ({i}, {j}) out of range for rank {self.rank}")
            if (i, j) in seen:
                raise DynkinError(f"duplicate edge ({i}, {j})")
            if label.p < 1 or label.q < 1:
                raise DynkinError(f"edge ({i}, {j}) has non-positive label {label}")
            seen.add((i, j))
        object.__setattr__(self, "edges", tuple(sorted(self.edges, key=lambda e: (e[0], e[1]))))

    def label(self, i: int, j: int) -> EdgeLabel | None:
        """Label of edge ``{i, j}``, or ``None`` if the vertices are not adjacent."""
        if i == j:
            raise DynkinError("an edge joins two distinct vertices")
        a, b = min(i, j), max(i, j)
        for x, y, lab in self.edges:
            if (x, y) == (a, b):
                return lab
        return None

    def neighbors(self, i: int) -> frozenset[int]:
        out = {y for x, y, _ in self.edges if x == i}
        out |= {x for x, y, _ in self.edges if y == i}
        return frozenset(out)


# == generalized Cartan matrices ==


@dataclass(frozen=True)
class GeneralizedCartanMatrix:
    """Immutable, validated generalized Cartan matrix.

    Construct via :func:`validate_gcm` (or directly; the axioms are checked
    either way).  ``rows`` is a tuple of row tuples.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        _check_axioms(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def a(self, i: int, j: int) -> int:
        """Entry ``A[i][j]`` with 1-based indices."""
        self._check_vertex(i)
        self._check_vertex(j)
        return self.rows[i - 1][j - 1]

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def _check_vertex(self, i: int) -> None:
        if not (1 <= i <= self.rank):
            raise DynkinError(f"vertex {i} out of range 1..{self.rank}")


def _check_axioms(rows: tuple[tuple[int, ...], ...]) -> None:
    n = len(rows)
    if n < 1:
        raise MatrixValidationError("shape", None, "matrix must have at least one row")
    for idx, row in enumerate(rows):
        if len(row) != n:
            raise MatrixValidationError(
                "shape", None, f"row {idx + 1} has length {len(row)}, expected {n}"
            )
        for jdx, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool):
                raise MatrixValidationError(
                    "integrality",
                    (idx + 1, jdx + 1),
                    f"entry {v!r} at ({idx + 1}, {jdx + 1}) is not an integer",
                )
    for i in range(n):
        if rows[i][i] != 2:
            raise MatrixValidationError(
                "diagonal",
                (i + 1, i + 1),
                f"diagonal entry {rows[i][i]} at ({i + 1}, {i + 1}); every diagonal entry must be 2",
            )
    for i in range(n):
        for j in range(n):
            if i != j and rows[i][j] > 0:
                raise MatrixValidationError(
                    "sign",
                    (i + 1, j + 1),
                    f"off-diagonal entry {rows[i][j]} at ({i + 1}, {j + 1}) must be <= 0",
                )
    for i in range(n):
        for j in range(n):
            if i != j and rows[i][j] == 0 and rows[j][i] != 0:
                raise MatrixValidationError(
                    "zero-symmetry",
                    (i + 1, j + 1),
                    f"zero-symmetry axiom violated at ({i + 1}, {j + 1}): "
                    f"entry is 0 but ({j + 1}, {i + 1}) is {rows[j][i]}",
                )


def validate_gcm(entries: Sequence[Sequence[int]]) -> GeneralizedCartanMatrix:
    """Validate an integer array and wrap it as a :class:`GeneralizedCartanMatrix`.

    Raises :class:`MatrixValidationError` naming the first violated axiom and
    the offending 1-based position.
    """
    rows = tuple(tuple(r) for r in entries)
    return GeneralizedCartanMatrix(rows)


# == conversions ==


def matrix_to_diagram(A: GeneralizedCartanMatrix) -> DynkinDiagram:
    """Dynkin diagram of ``A`` (exact inverse of :func:`diagram_to_matrix`)."""
    edges = []
    n = A.rank
    for i in range(n):
        for j in range(i + 1, n):
            if A.rows[i][j] != 0:
                edges.append((i + 1, j + 1, EdgeLabel(-A.rows[i][j], -A.rows[j][i])))
    return DynkinDiagram(rank=n, edges=tuple(edges))


def diagram_to_matrix(D: DynkinDiagram) -> GeneralizedCartanMatrix:
    """Generalized Cartan matrix of a diagram."""
    n = D.rank
    rows = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j, label in D.edges:
        rows[i - 1][j - 1] = -label.p
        rows[j - 1][i - 1] = -label.q
    return validate_gcm(rows)


def edge_multiplicity(D: DynkinDiagram, i: int, j: int) -> Fraction:
    """Exact ratio ``A[j][i] / A[i][j]`` for adjacent vertices ``i`` and ``j``.

    Orientation matters: ``edge_multiplicity(D, j, i)`` is the reciprocal.
    """
    label = D.label(i, j)
    if label is None:
        raise NotAdjacentError(f"vertices {i} and {j} are not adjacent")
    if i < j:
        return Fraction(label.q, label.p)
    return Fraction(label.p, label.q)


def dual(A: GeneralizedCartanMatrix) -> GeneralizedCartanMatrix:
    """Transpose of ``A`` (arrow directions reversed in the diagram)."""
    n = A.rank
    return GeneralizedCartanMatrix(tuple(tuple(A.rows[j][i] for j in range(n)) for i in range(n)))


# == connectivity and subdiagrams ==


def adjacency_bitmasks(rows: Sequence[Sequence[int]]) -> list[int]:
    """For each 0-based vertex, the bitmask of its neighbours."""
    n = len(rows)
    adj = [0] * n
    for i in range(n):
        for j in range(n):
            if i != j and rows[i][j] != 0:
                adj[i] |= 1 << j
    return adj


def mask_connected(mask: int, adj: Sequence[int]) -> bool:
    """Whether the induced subgraph on bitmask ``mask`` is connected (empty: False)."""
    if mask == 0:
        return False
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        i = frontier.bit_length() - 1
        frontier &= ~(1 << i)
        grow = adj[i] & mask & ~seen
        seen |= grow
        frontier |= grow
    return seen == mask

def components(A: GeneralizedCartanMatrix) -> tuple[frozenset[int], ...]:
    """Connected components as 1-based vertex sets, ordered by smallest member."""
    adj = adjacency_bitmasks(A.rows)
    n = A.rank
    unvisited = (1 << n) - 1
    out = []
    while unvisited:
        start = unvisited & -unvisited
        seen = start
        frontier = start
        while frontier:
            i = frontier.bit_length() - 1
            frontier &= ~(1 << i)
            grow = adj[i] & ~seen
            seen |= grow
            frontier |= grow
        out.append(frozenset(i + 1 for i in range(n) if seen >> i & 1))
        unvisited &= ~seen
    return tuple(out)


def is_indecomposable(A: GeneralizedCartanMatrix) -> bool:
    """Whether the diagram of ``A`` is connected."""
    adj = adjacency_bitmasks(A.rows)
    return mask_connected((1 << A.rank) - 1, adj)


def induced_subdiagram(A: GeneralizedCartanMatrix, S: Iterable[int]) -> GeneralizedCartanMatrix:
    """Submatrix of ``A`` on the 1-based vertex set ``S`` (ascending order)."""
    keep = sorted(set(S))
    if not keep:
        raise DynkinError("subdiagram needs a non-empty vertex set")
    for v in keep:
        if not (1 <= v <= A.rank):
            raise DynkinError(f"vertex {v} out of range 1..{A.rank}")
    return GeneralizedCartanMatrix(
        tuple(tuple(A.rows[i - 1][j - 1] for j in keep) for i in keep)
    )
