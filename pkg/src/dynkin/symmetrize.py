"""Symmetrizability: diagonal scalings, the cycle criterion, bilinear forms.

``A`` is symmetrizable when a positive diagonal matrix ``D = diag(d)`` makes
``D A`` symmetric, i.e. ``d[i] A[i][j] == d[j] A[j][i]`` for all pairs.  On a
tree this always works: pick a root, set its weight to 1, and propagate the
forced ratio ``d[v] = d[u] * A[u][v] / A[v][u]`` along edges.  Obstructions
live on cycles only: a cycle is balanced when the product of matrix entries
read clockwise equals the product read anticlockwise, and ``A`` is
symmetrizable iff every cycle of its diagram is balanced.

Two independent implementations of that criterion are provided:
:func:`is_symmetrizable` (spanning-forest propagation, then each non-tree edge
is checked and an unbalanced fundamental cycle is reported as a witness) and
:func:`kac_cycle_oracle` (direct enumeration of all simple cycles, ranks up to
8), so each can falsify the other in tests.

All arithmetic is exact: :class:`fractions.Fraction` during propagation,
integers after normalization.  No floating point.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import DecomposableError, NotSymmetrizableError, RankBoundError
from .gcm import GeneralizedCartanMatrix, components, is_indecomposable, validate_gcm

__all__ = [
    "Symmetrization",
    "UnbalancedCycleWitness",
    "is_symmetrizable",
    "kac_cycle_oracle",
    "symmetrizer",
    "is_symmetric",
    "bilinear_form",
    "root_length_count",
    "random_gcm",
    "cycle_criterion_agreement",
]


@dataclass(frozen=True)
class Symmetrization:
    """Normalized symmetrizer: positive coprime integers, one per vertex."""

    d: tuple[int, ...]


@dataclass(frozen=True)
class UnbalancedCycleWitness:
    """A cycle whose two traversal directions give different entry products.

    ``cycle`` is the 1-based vertex sequence with the starting vertex repeated
    at the end, e.g. ``(1, 2, 3, 1)``.  ``forward_product`` multiplies
    ``A[c[t]][c[t+1]]`` along the sequence; ``reverse_product`` multiplies the
    opposite entries ``A[c[t+1]][c[t]]``.
    """

    cycle: tuple[int, ...]
    forward_product: int
    reverse_product: int


# == spanning-forest propagation ==


def _forest_weights(
    rows: tuple[tuple[int, ...], ...]
) -> tuple[list[Fraction], list[tuple[int, int]]]:
    """BFS weights forced by tree edges, plus the non-tree edges (0-based)."""
    n = len(rows)
    d: list[Fraction | None] = [None] * n
    tree_edges: set[tuple[int, int]] = set()
    for root in range(n):
        if d[root] is not None:
            continue
        d[root] = Fraction(1)
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in range(n):
                if v == u or rows[u][v] == 0 or d[v] is not None:
                    continue
                d[v] = d[u] * Fraction(rows[u][v], rows[v][u])
                tree_edges.add((min(u, v), max(u, v)))
                queue.append(v)
    nontree = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rows[u][v] != 0 and (u, v) not in tree_edges
    ]
    return d, nontree  # type: ignore[return-value]


def _tree_path_to_root(u: int, parent: list[int]) -> list[int]:
    path = [u]
    while parent[path[-1]] >= 0:
        path.append(parent[path[-1]])
    return path


def _forest_parents(rows: tuple[tuple[int, ...], ...]) -> list[int]:
    """Parent array of the same BFS forest used by :func:`_forest_weights`."""
    n = len(rows)
    parent = [-2] * n  # -2 unvisited, -1 root
    for root in range(n):
        if parent[root] != -2:
            continue
        parent[root] = -1
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in range(n):
                if v == u or rows[u][v] == 0 or parent[v] != -2:
                    continue
                parent[v] = u
                queue.append(v)
    return parent


def _fundamental_cycle(u: int, v: int, parent: list[int]) -> list[int]:
    """Vertex cycle (no closing repeat) through tree paths of ``u`` and ``v``."""
    up_u = _tree_path_to_root(u, parent)
    up_v = _tree_path_to_root(v, parent)
    pos_in_u = {x: k for k, x in enumerate(up_u)}
    lca = next(x for x in up_v if x in pos_in_u)
    head = up_u[: pos_in_u[lca] + 1]  # u .. lca
    tail = up_v[: up_v.index(lca)]  # v .. child of lca
    return head + list(reversed(tail))


def _normalize_cycle(verts: list[int]) -> list[int]:
    """Rotate to start at the smallest vertex, orient toward its smaller neighbour."""
    k = verts.index(min(verts))
    rot = verts[k:] + verts[:k]
    rev = [rot[0]] + rot[1:][::-1]
    return rot if rot[1] <= rev[1] else rev


def _cycle_products(rows: tuple[tuple[int, ...], ...], seq: list[int]) -> tuple[int, int]:
    fwd = 1
    rev = 1
    for a, b in zip(seq, seq[1:]):
        fwd *= rows[a][b]
        rev *= rows[b][a]
    return fwd, rev


def is_symmetrizable(
    A: GeneralizedCartanMatrix,
) -> tuple[bool, UnbalancedCycleWitness | None]:
    """Decide symmetrizability; on failure return an unbalanced cycle witness.

    Weights are propagated over a BFS spanning forest, then every non-tree
    edge is checked for balance.  The witness cycle is the fundamental cycle
    of the first unbalanced edge, rotated to start at its smallest vertex.
    """
    rows = A.rows
    d, nontree = _forest_weights(rows)
    for u, v in nontree:
        if d[u] * rows[u][v] != d[v] * rows[v][u]:
            parent = _forest_parents(rows)
            cycle = _normalize_cycle(_fundamental_cycle(u, v, parent))
            seq = cycle + [cycle[0]]
            fwd, rev = _cycle_products(rows, seq)
            witness = UnbalancedCycleWitness(
                cycle=tuple(x + 1 for x in seq),
                forward_product=fwd,
                reverse_product=rev,
            )
            return False, witness
    return True, None


# == independent cycle oracle ==

CYCLE_ORACLE_RANK_LIMIT = 8


def kac_cycle_oracle(A: GeneralizedCartanMatrix) -> bool:
    """Symmetrizability by brute force over all simple cycles (rank <= 8).

    Independent of the spanning-forest route: every simple cycle of the
    diagram is enumerated and its two direction products compared.
    """
    n = A.rank
    if n > CYCLE_ORACLE_RANK_LIMIT:
        raise RankBoundError(
            f"cycle oracle supported up to rank {CYCLE_ORACLE_RANK_LIMIT}, got {n}"
        )
    rows = A.rows
    for cycle in _simple_cycles(rows):
        seq = list(cycle) + [cycle[0]]
        fwd, rev = _cycle_products(rows, seq)
        if fwd != rev:
            return False
    return True


def _simple_cycles(rows: tuple[tuple[int, ...], ...]) -> list[tuple[int, ...]]:
    """All simple cycles (length >= 3), each listed once, 0-based vertices.

    Each cycle is produced with its smallest vertex first; the orientation is
    fixed by requiring the second vertex to be smaller than the last.
    """
    n = len(rows)
    out: list[tuple[int, ...]] = []

    def extend(start: int, path: list[int], used: set[int]) -> None:
        u = path[-1]
        for v in range(start + 1, n):
            if rows[u][v] == 0 or v in used:
                continue
            path.append(v)
            used.add(v)
            if len(path) >= 3 and rows[v][start] != 0 and path[1] < path[-1]:
                out.append(tuple([start] + path[1:]))
            extend(start, path, used)
            used.remove(v)
            path.pop()

    for s in range(n):
        extend(s, [s], {s})
    return out


# == symmetrizer and bilinear form ==


def _normalize_weights(weights: list[Fraction]) -> tuple[int, ...]:
    mult = lcm(*(w.denominator for w in weights))
    ints = [int(w * mult) for w in weights]
    g = gcd(*ints)
    return tuple(v // g for v in ints)


def symmetrizer(A: GeneralizedCartanMatrix) -> Symmetrization:
    """Normalized symmetrizer of an indecomposable symmetrizable GCM.

    The returned weights are positive coprime integers with
    ``d[i] * A[i][j] == d[j] * A[j][i]`` for all pairs, so ``diag(d) @ A`` is
    symmetric.  Raises on decomposable or unsymmetrizable input.
    """
    if not is_indecomposable(A):
        raise DecomposableError("symmetrizer requires an indecomposable matrix")
    ok, witness = is_symmetrizable(A)
    if not ok:
        assert witness is not None
        raise NotSymmetrizableError(
            f"matrix is not symmetrizable: cycle {witness.cycle} has direction "
            f"products {witness.forward_product} and {witness.reverse_product}"
        )
    weights, _ = _forest_weights(A.rows)
    return Symmetrization(d=_normalize_weights(list(weights)))


def is_symmetric(A: GeneralizedCartanMatrix) -> bool:
    n = A.rank
    return all(A.rows[i][j] == A.rows[j][i] for i in range(n) for j in range(i + 1, n))


def bilinear_form(A: GeneralizedCartanMatrix) -> tuple[tuple[int, ...], ...]:
    """Symmetrized matrix ``B = diag(d) @ A`` of a symmetrizable GCM.

    Works componentwise, each component normalized on its own, so decomposable
    input is fine.  ``B[i][i] == 2 * d[i]`` and ``B`` is exactly symmetric.
    """
    ok, witness = is_symmetrizable(A)
    if not ok:
        assert witness is not None
        raise NotSymmetrizableError(
            f"matrix is not symmetrizable: cycle {witness.cycle} has direction "
            f"products {witness.forward_product} and {witness.reverse_product}"
        )
    raw, _ = _forest_weights(A.rows)
    d = _componentwise_normalize(A, [w for w in raw])
    n = A.rank
    B = tuple(tuple(d[i] * A.rows[i][j] for j in range(n)) for i in range(n))
    for i in range(n):
        for j in range(i + 1, n):
            assert B[i][j] == B[j][i], "propagation produced an asymmetric product"
    return B


def _componentwise_normalize(
    A: GeneralizedCartanMatrix, weights: list[Fraction]
) -> list[int]:
    d = [0] * A.rank
    for comp in components(A):
        idx = sorted(v - 1 for v in comp)
        norm = _normalize_weights([weights[i] for i in idx])
        for i, v in zip(idx, norm):
            d[i] = v
    return d


def root_length_count(A: GeneralizedCartanMatrix) -> int:
    """Number of distinct simple-root lengths of an indecomposable symmetrizable GCM.

    Root lengths squared are ``B[i][i] = 2 d[i]``, so this is the number of
    distinct symmetrizer weights.
    """
    return len(set(symmetrizer(A).d))


# == sampler for randomized cross-checks ==


def random_gcm(
    rng: random.Random, rank: int, max_label: int = 4, edge_prob: float = 0.5
) -> GeneralizedCartanMatrix:
    """Random GCM with off-diagonal entries in ``[-max_label, 0]``.

    Used to cross-check the two symmetrizability routes on dense, cycle-rich
    diagrams.  Every pair independently gets an edge with probability
    ``edge_prob``; edge entries are uniform in ``[-max_label, -1]``.
    """
    rows = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i in range(rank):
        for j in range(i + 1, rank):
            if rng.random() < edge_prob:
                rows[i][j] = -rng.randint(1, max_label)
                rows[j][i] = -rng.randint(1, max_label)
    return validate_gcm(rows)


def cycle_criterion_agreement(
    samples: int, rank_min: int = 4, rank_max: int = 6, seed: int = 0
) -> list[GeneralizedCartanMatrix]:
    """Matrices where the two symmetrizability routes disagree (expected: none).

    Draws ``samples`` random GCMs and runs both :func:`is_symmetrizable` and
    :func:`kac_cycle_oracle` on each.  Returns the disagreeing matrices so a
    failure is reproducible from the seed alone.
    """
    rng = random.Random(seed)
    bad = []
    for _ in range(samples):
        A = random_gcm(rng, rng.randint(rank_min, rank_max))
        if is_symmetrizable(A)[0] != kac_cycle_oracle(A):
            bad.append(A)
    return bad
