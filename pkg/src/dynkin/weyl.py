"""Real roots, simple reflections, and Weyl-orbit structure on simple roots.

Roots are integer coordinate vectors over the simple-root basis.  The simple
reflection ``r_i`` acts by ``beta[i] -= sum_j A[i][j] * beta[j]`` and fixes
all other coordinates.  Real roots are generated by closing the simple roots
under reflections; the walk here is restricted to positive roots inside an
explicit height window, with a hard element budget that raises rather than
silently truncating.

Orbit structure: two simple roots land in the same Weyl orbit whenever they
are joined by a path of single (label ``(1, 1)``) edges, since such an edge
gives ``r_i r_j`` mapping one endpoint to the other.  The skeleton partition
in :func:`orbit_partition` uses only that rule; the reflection-closure
partition in :func:`orbit_partition_bruteforce` recomputes the same blocks
from an actual root walk so the two can be compared.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceededError, DynkinError, WrongTypeError
from .gcm import (
    DynkinDiagram,
    GeneralizedCartanMatrix,
    is_indecomposable,
    matrix_to_diagram,
)
from .classify import FINITE, kind_of_rows
from .symmetrize import bilinear_form

__all__ = [
    "RootVector",
    "OrbitPartition",
    "DEFAULT_BUDGET",
    "reflect",
    "real_roots_up_to_height",
    "root_norm",
    "highest_root",
    "simply_laced_skeleton",
    "orbit_partition",
    "orbit_partition_bruteforce",
    "orbit_partitions_agree",
    "roots_to_lines",
    "roots_from_lines",
]

DEFAULT_BUDGET = 10**6


@dataclass(frozen=True, order=True)
class RootVector:
    """Root written in simple-root coordinates."""

    coords: tuple[int, ...]

    @property
    def height(self) -> int:
        return sum(self.coords)


@dataclass(frozen=True)
class OrbitPartition:
    """Partition of the 1-based simple-root indices into orbit blocks.

    Blocks are stored sorted by smallest member, so equal partitions compare
    equal structurally.
    """

    blocks: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "blocks", tuple(sorted(self.blocks, key=lambda b: min(b)))
        )

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    def block_of(self, i: int) -> frozenset[int]:
        for b in self.blocks:
            if i in b:
                return b
        raise DynkinError(f"vertex {i} is not covered by this partition")


# == reflections and root closure ==


def reflect(A: GeneralizedCartanMatrix, i: int, beta: RootVector) -> RootVector:
    """Apply the simple reflection ``r_i`` (1-based ``i``) to ``beta``."""
    n = A.rank
    if len(beta.coords) != n:
        raise DynkinError(f"root has {len(beta.coords)} coordinates, matrix has rank {n}")
    A._check_vertex(i)
    row = A.rows[i - 1]
    pairing = sum(row[j] * beta.coords[j] for j in range(n))
    coords = list(beta.coords)
    coords[i - 1] -= pairing
    return RootVector(tuple(coords))


def _positive_closure(
    A: GeneralizedCartanMatrix, height: int | None, budget: int
) -> set[tuple[int, ...]]:
    """Positive real roots reachable inside the height window (as coord tuples)."""
    n = A.rank
    rows = A.rows
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    seen: set[tuple[int, ...]] = set(simple)
    frontier = list(simple)
    while frontier:
        nxt: list[tuple[int, ...]] = []
        for beta in frontier:
            for i in range(n):
                row = rows[i]
                pairing = sum(row[j] * beta[j] for j in range(n))
                ci = beta[i] - pairing
                if ci < 0:
                    continue  # negative root (or off the positive cone)
                if pairing == 0:
                    continue  # fixed by this reflection
                gamma = beta[:i] + (ci,) + beta[i + 1 :]
                if height is not None and sum(gamma) > height:
                    continue
                if gamma in seen:
                    continue
                if len(seen) >= budget:
                    raise BudgetExceededError(
                        f"root closure exceeded budget of {budget} elements"
                    )
                seen.add(gamma)
                nxt.append(gamma)
        frontier = nxt
    return seen


def real_roots_up_to_height(
    A: GeneralizedCartanMatrix, height: int, budget: int = DEFAULT_BUDGET
) -> tuple[RootVector, ...]:
    """Positive real roots of height <= ``height``, reachable within the window.

    Canonically ordered by height, then lexicographically by coordinates.
    Raises :class:`BudgetExceededError` instead of returning a truncated set.
    """
    if height < 1:
        return ()
    found = _positive_closure(A, height, budget)
    return tuple(
        RootVector(c) for c in sorted(found, key=lambda c: (sum(c), c))
    )


def root_norm(A: GeneralizedCartanMatrix, beta: RootVector) -> int:
    """Squared length ``beta^T B beta`` under the symmetrized bilinear form."""
    B = bilinear_form(A)
    n = A.rank
    c = beta.coords
    if len(c) != n:
        raise DynkinError(f"root has {len(c)} coordinates, matrix has rank {n}")
    return sum(c[i] * B[i][j] * c[j] for i in range(n) for j in range(n))


def highest_root(A: GeneralizedCartanMatrix) -> RootVector:
    """Highest root of an indecomposable finite-type GCM.

    The full positive system is closed off (finite, so the walk terminates)
    and the unique root of maximal height is returned; it dominates every
    positive root componentwise, which is checked.
    """
    if not is_indecomposable(A):
        raise WrongTypeError("highest root requires an indecomposable matrix")
    if kind_of_rows(A.rows) != FINITE:
        raise WrongTypeError("highest root is defined for finite type only")
    roots = _positive_closure(A, None, DEFAULT_BUDGET)
    top_height = max(sum(c) for c in roots)
    tops = [c for c in roots if sum(c) == top_height]
    assert len(tops) == 1, "finite root system must have a unique highest root"
    theta = tops[0]
    assert all(
        all(theta[i] >= c[i] for i in range(A.rank)) for c in roots
    ), "highest root must dominate every positive root"
    return RootVector(theta)


# == orbit partitions ==


def simply_laced_skeleton(D: DynkinDiagram) -> DynkinDiagram:
    """Subdiagram keeping only the single (label ``(1, 1)``) edges."""
    kept = tuple(e for e in D.edges if e[2].p == 1 and e[2].q == 1)
    return DynkinDiagram(rank=D.rank, edges=kept)


def orbit_partition(D: DynkinDiagram) -> OrbitPartition:
    """Orbit blocks of the simple roots: components of the single-edge skeleton."""
    skel = simply_laced_skeleton(D)
    parent = list(range(D.rank + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j, _ in skel.edges:
        parent[find(i)] = find(j)
    groups: dict[int, set[int]] = {}
    for v in range(1, D.rank + 1):
        groups.setdefault(find(v), set()).add(v)
    return OrbitPartition(tuple(frozenset(g) for g in groups.values()))


def orbit_partition_bruteforce(
    A: GeneralizedCartanMatrix, height: int, budget: int = DEFAULT_BUDGET
) -> OrbitPartition:
    """Orbit blocks recovered from an explicit reflection walk.

    Closes the positive roots of height <= ``height``, links any two roots in
    the window that a simple reflection exchanges, and reads off which simple
    roots ended up connected.  A window too small to surface a linking chain
    can split blocks that a larger window would merge, which is why callers
    compare against :func:`orbit_partition` and widen on mismatch.
    """
    n = A.rank
    found = sorted(_positive_closure(A, height, budget))
    index = {c: k for k, c in enumerate(found)}
    parent = list(range(len(found)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    rows = A.rows
    for c, k in index.items():
        for i in range(n):
            pairing = sum(rows[i][j] * c[j] for j in range(n))
            gamma = c[:i] + (c[i] - pairing,) + c[i + 1 :]
            other = index.get(gamma)
            if other is not None:
                parent[find(k)] = find(other)
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    groups: dict[int, set[int]] = {}
    for i, e in enumerate(simple):
        groups.setdefault(find(index[e]), set()).add(i + 1)
    return OrbitPartition(tuple(frozenset(g) for g in groups.values()))


def orbit_partitions_agree(
    A: GeneralizedCartanMatrix,
    start_height: int = 8,
    doublings: int = 3,
    budget: int = DEFAULT_BUDGET,
) -> bool:
    """Whether the reflection-walk partition matches the skeleton partition.

    The walk partition can only be too fine (a linking chain may leave the
    window), so on mismatch the window is doubled up to ``doublings`` times
    before giving up.  A budget overflow also counts as disagreement: the
    claim could not be verified within bounds.
    """
    target = orbit_partition(matrix_to_diagram(A))
    h = start_height
    for _ in range(doublings + 1):
        try:
            if orbit_partition_bruteforce(A, h, budget) == target:
                return True
        except BudgetExceededError:
            return False
        h *= 2
    return False


# == serialization of root sets ==


def roots_to_lines(roots: tuple[RootVector, ...]) -> str:
    """Line format ``height, c1, c2, ...`` in canonical order."""
    ordered = sorted(roots, key=lambda r: (r.height, r.coords))
    return "\n".join(
        ", ".join([str(r.height)] + [str(c) for c in r.coords]) for r in ordered
    )


def roots_from_lines(text: str) -> tuple[RootVector, ...]:
    """Inverse of :func:`roots_to_lines`; heights are revalidated."""
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        parts = [int(tok.strip()) for tok in line.split(",")]
        height, coords = parts[0], tuple(parts[1:])
        if sum(coords) != height:
            raise DynkinError(f"line {lineno}: height {height} does not match coordinates")
        out.append(RootVector(coords))
    return tuple(out)
