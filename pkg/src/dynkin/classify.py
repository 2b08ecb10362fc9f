"""Cartan type classification: finite, affine, indefinite, hyperbolic.

The trichotomy for an indecomposable GCM is decided through principal minors,
computed exactly over the integers:

* finite: every principal minor is positive;
* affine: the determinant is 0 and every proper principal minor is positive;
* indefinite: everything else.

Determinants use fraction-free Bareiss elimination, so no floating point and
no rational arithmetic appears anywhere on this path.  Equivalent recursive
form used internally (and cross-checked in the test suite): a matrix is of
finite type iff its determinant is positive and every one-vertex-deleted
submatrix is of finite type; affine additionally needs determinant exactly 0.

Hyperbolicity is a second layer on top: an indecomposable ``A`` of indefinite
type is hyperbolic when every proper connected induced subdiagram is of finite
or affine type, and compact hyperbolic when every proper connected induced
subdiagram is of finite type.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import DecomposableError, RankBoundError
from .gcm import (
    GeneralizedCartanMatrix,
    adjacency_bitmasks,
    components,
    induced_subdiagram,
    is_indecomposable,
    mask_connected,
)

__all__ = [
    "FINITE",
    "AFFINE",
    "INDEFINITE",
    "CartanType",
    "ComponentType",
    "HyperbolicityWitness",
    "principal_minors",
    "classify_indecomposable",
    "classify",
    "is_hyperbolic",
    "is_compact_hyperbolic",
    "hyperbolicity_witness",
]

FINITE = "finite"
AFFINE = "affine"
INDEFINITE = "indefinite"

MINOR_RANK_LIMIT = 12


# == exact integer determinants ==


def det_int(rows: tuple[tuple[int, ...], ...]) -> int:
    """Exact determinant of an integer matrix (Bareiss elimination).

    Closed forms are used up to 3x3; larger matrices go through fraction-free
    elimination, whose interior divisions are exact by construction.
    """
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if n == 3:
        (a, b, c), (d, e, f), (g, h, i) = rows
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        mk = m[k]
        for r in range(k + 1, n):
            mr = m[r]
            mrk = mr[k]
            for c in range(k + 1, n):
                mr[c] = (mr[c] * pivot - mrk * mk[c]) // prev
            mr[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def sub_rows(rows: tuple[tuple[int, ...], ...], mask: int) -> tuple[tuple[int, ...], ...]:
    """Submatrix on the 0-based index bitmask ``mask``."""
    idx = [i for i in range(len(rows)) if mask >> i & 1]
    return tuple(tuple(rows[i][j] for j in idx) for i in idx)


def delete_vertex(rows: tuple[tuple[int, ...], ...], k: int) -> tuple[tuple[int, ...], ...]:
    """Submatrix with 0-based row/column ``k`` removed."""
    return tuple(row[:k] + row[k + 1 :] for i, row in enumerate(rows) if i != k)


# == kind of raw row tuples (internal engine, shared with enumeration) ==

_KIND_CACHE: dict[tuple[tuple[int, ...], ...], str] = {}


def kind_of_rows(rows: tuple[tuple[int, ...], ...]) -> str:
    """Cartan kind of a *connected* GCM given as raw row tuples.

    Memoized across calls: the enumeration machinery classifies the same small
    submatrices over and over.
    """
    cached = _KIND_CACHE.get(rows)
    if cached is not None:
        return cached
    n = len(rows)
    if n == 1:
        kind = FINITE
    elif n == 2:
        prod = rows[0][1] * rows[1][0]
        kind = FINITE if prod < 4 else AFFINE if prod == 4 else INDEFINITE
    else:
        d = det_int(rows)
        if d > 0:
            kind = FINITE if _all_deletions_finite(rows) else INDEFINITE
        elif d == 0:
            kind = AFFINE if _all_deletions_finite(rows) else INDEFINITE
        else:
            kind = INDEFINITE
    _KIND_CACHE[rows] = kind
    return kind


def rows_fully_finite(rows: tuple[tuple[int, ...], ...]) -> bool:
    """Whether every connected component of ``rows`` is of finite type."""
    n = len(rows)
    adj = adjacency_bitmasks(rows)
    unvisited = (1 << n) - 1
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
        if kind_of_rows(sub_rows(rows, seen)) != FINITE:
            return False
        unvisited &= ~seen
    return True


def _all_deletions_finite(rows: tuple[tuple[int, ...], ...]) -> bool:
    return all(rows_fully_finite(delete_vertex(rows, k)) for k in range(len(rows)))


def hyperbolic_compact_scan(rows: tuple[tuple[int, ...], ...]) -> tuple[bool, bool]:
    """(hyperbolic, compact) flags of connected ``rows`` by full subset scan.

    Walks every proper connected induced subdiagram and checks its kind, which
    is the definition itself with no shortcuts.
    """
    n = len(rows)
    if n < 2 or kind_of_rows(rows) != INDEFINITE:
        return False, False
    adj = adjacency_bitmasks(rows)
    compact = True
    for mask in range(1, (1 << n) - 1):
        if not mask_connected(mask, adj):
            continue
        k = kind_of_rows(sub_rows(rows, mask))
        if k == INDEFINITE:
            return False, False
        if k == AFFINE:
            compact = False
    return True, compact


# == public classification API ==


@dataclass(frozen=True)
class CartanType:
    """Type record of an indecomposable GCM."""

    kind: str
    hyperbolic: bool
    compact_hyperbolic: bool


@dataclass(frozen=True)
class ComponentType:
    """Type record of one connected component, with its 1-based vertex set."""

    vertices: frozenset[int]
    type: CartanType


@dataclass(frozen=True)
class HyperbolicityWitness:
    """Outcome of the hyperbolicity test with an explicit reason.

    When ``A`` is indefinite but not hyperbolic, ``subset`` names a proper
    connected induced subdiagram of indefinite type (the smallest such set,
    ties broken lexicographically).  Otherwise ``subset`` is ``None`` and
    ``reason`` explains which way the test was decided.
    """

    hyperbolic: bool
    reason: str
    subset: frozenset[int] | None


def principal_minors(A: GeneralizedCartanMatrix) -> dict[frozenset[int], int]:
    """All principal minors of ``A``, keyed by 1-based index set.

    Restricted to rank <= 12 to keep the subset walk explicit and bounded.
    """
    n = A.rank
    if n > MINOR_RANK_LIMIT:
        raise RankBoundError(f"principal minors supported up to rank {MINOR_RANK_LIMIT}, got {n}")
    out: dict[frozenset[int], int] = {}
    for size in range(1, n + 1):
        for comb in combinations(range(n), size):
            mask = 0
            for i in comb:
                mask |= 1 << i
            out[frozenset(i + 1 for i in comb)] = det_int(sub_rows(A.rows, mask))
    return out


def _require_indecomposable(A: GeneralizedCartanMatrix) -> None:
    if not is_indecomposable(A):
        raise DecomposableError(
            "matrix is decomposable; classify() handles components separately"
        )


def classify_indecomposable(A: GeneralizedCartanMatrix) -> CartanType:
    """Cartan type of an indecomposable GCM (finite / affine / indefinite)."""
    _require_indecomposable(A)
    kind = kind_of_rows(A.rows)
    hyper, compact = hyperbolic_compact_scan(A.rows)
    return CartanType(kind=kind, hyperbolic=hyper, compact_hyperbolic=compact)


def classify(A: GeneralizedCartanMatrix) -> tuple[ComponentType, ...]:
    """Component-wise classification of an arbitrary GCM."""
    out = []
    for verts in components(A):
        sub = induced_subdiagram(A, verts)
        out.append(ComponentType(vertices=verts, type=classify_indecomposable(sub)))
    return tuple(out)


def is_hyperbolic(A: GeneralizedCartanMatrix) -> bool:
    """Whether indecomposable ``A`` is of hyperbolic type.

    Indefinite, and every proper connected induced subdiagram is of finite or
    affine type.  Rank 1 is finite and therefore never hyperbolic.
    """
    _require_indecomposable(A)
    return hyperbolic_compact_scan(A.rows)[0]


def is_compact_hyperbolic(A: GeneralizedCartanMatrix) -> bool:
    """Whether indecomposable ``A`` is compact hyperbolic.

    Hyperbolic with every proper connected induced subdiagram of finite type
    (affine subdiagrams excluded).
    """
    _require_indecomposable(A)
    return hyperbolic_compact_scan(A.rows)[1]


def hyperbolicity_witness(A: GeneralizedCartanMatrix) -> HyperbolicityWitness:
    """Hyperbolicity verdict together with the reason it was reached."""
    _require_indecomposable(A)
    kind = kind_of_rows(A.rows)
    if kind != INDEFINITE:
        return HyperbolicityWitness(False, f"matrix is of {kind} type", None)
    n = A.rank
    adj = adjacency_bitmasks(A.rows)
    for size in range(2, n):
        for comb in combinations(range(n), size):
            mask = 0
            for i in comb:
                mask |= 1 << i
            if not mask_connected(mask, adj):
                continue
            if kind_of_rows(sub_rows(A.rows, mask)) == INDEFINITE:
                return HyperbolicityWitness(
                    False,
                    "proper connected subdiagram of indefinite type",
                    frozenset(i + 1 for i in comb),
                )
    return HyperbolicityWitness(True, "hyperbolic", None)
