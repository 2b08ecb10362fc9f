"""Canonical labelling of GCMs under simultaneous row/column permutation.

The canonical form is the lexicographically smallest row-major entry sequence
over all relabelings of the vertices.  Rather than trying all ``n!``
permutations, positions are fixed one at a time with an ordered-partition
refinement:

* a search state is a prefix of the output permutation plus an ordered list
  of cells covering the unplaced vertices (order across cells already forced,
  order inside a cell still free);
* a candidate for the next position must come from the first cell; the best
  row it can still realize has its placed entries forced and its tail sorted
  ascending cell by cell;
* only candidates realizing the minimal row survive, and every surviving
  state's cells are split by the entries of the newly placed vertex.

Pointwise tail minimization is sound here because any tail ordering another
permutation could realize is a within-cell rearrangement, and the ascending
one is lexicographically least among those.  The number of live states stays
near the automorphism count of the diagram, which is tiny for every matrix
this package handles.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DynkinError
from .gcm import GeneralizedCartanMatrix

__all__ = ["CanonicalForm", "canonical_form", "canonical_rows"]

_STATE_CAP = 20000


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical matrix rows plus one vertex relabeling that realizes them.

    ``permutation`` maps output position (0-based) to original 0-based vertex:
    ``rows[r][c] == original[permutation[r]][permutation[c]]``.
    """

    rows: tuple[tuple[int, ...], ...]
    permutation: tuple[int, ...]

    @property
    def matrix(self) -> GeneralizedCartanMatrix:
        return GeneralizedCartanMatrix(self.rows)


def _group_by_value(members: list[int], row: tuple[int, ...]) -> list[tuple[int, ...]]:
    buckets: dict[int, list[int]] = {}
    for w in members:
        buckets.setdefault(row[w], []).append(w)
    return [tuple(buckets[v]) for v in sorted(buckets)]


def canonical_rows(
    rows: tuple[tuple[int, ...], ...]
) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """Canonical row tuple and a realizing permutation, for raw row tuples."""
    n = len(rows)
    if n == 1:
        return ((rows[0][0],),), (0,)

    # Position 0: every vertex may lead; its best row sorts the whole tail.
    best: tuple[int, ...] | None = None
    states: list[tuple[tuple[int, ...], list[tuple[int, ...]]]] = []
    for v in range(n):
        rest = [u for u in range(n) if u != v]
        row = (rows[v][v], *sorted(rows[v][u] for u in rest))
        if best is None or row < best:
            best = row
            states = []
        if row == best:
            states.append(((v,), _group_by_value(rest, rows[v])))
    assert best is not None
    out = [best]

    for _ in range(1, n):
        best = None
        new_states: list[tuple[tuple[int, ...], list[tuple[int, ...]]]] = []
        for perm, cells in states:
            for u in cells[0]:
                urow = rows[u]
                fixed = tuple(urow[p] for p in perm)
                tail: list[int] = []
                for cell in cells:
                    tail.extend(sorted(urow[w] for w in cell if w != u))
                row = fixed + (urow[u],) + tuple(tail)
                if best is None or row < best:
                    best = row
                    new_states = []
                if row == best:
                    refined: list[tuple[int, ...]] = []
                    for cell in cells:
                        members = [w for w in cell if w != u]
                        if members:
                            refined.extend(_group_by_value(members, urow))
                    new_states.append((perm + (u,), refined))
        assert best is not None
        out.append(best)
        states = new_states
        if len(states) > _STATE_CAP:
            raise DynkinError("canonical labelling state explosion; matrix too symmetric")
    return tuple(out), states[0][0]


def canonical_form(A: GeneralizedCartanMatrix) -> CanonicalForm:
    """Canonical form of ``A``: minimal row-major relabeling of its vertices.

    Two GCMs describe the same diagram up to vertex naming exactly when their
    canonical forms have equal rows.
    """
    rows, perm = canonical_rows(A.rows)
    return CanonicalForm(rows=rows, permutation=perm)
