"""Named Cartan matrices of the classical families, used as test fixtures.

Everything here is an independent, hand-written transcription of the standard
diagrams; the package under test never sees these as inputs to trust, only as
expectations to reproduce.  Vertex numbering: paths run 1..n in order; the
D-family fork puts the two short tips last; the E-family hangs the branch
vertex off position 4 (E8: chain 1-3-4-5-6-7-8 with 2 attached to 4).
"""

from __future__ import annotations


def _path_matrix(n: int) -> list[list[int]]:
    rows = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        rows[i][i + 1] = rows[i + 1][i] = -1
    return rows


def cartan_a(n: int) -> list[list[int]]:
    return _path_matrix(n)


def cartan_b(n: int) -> list[list[int]]:
    """Double edge at the tail, arrow toward the last (short-root) vertex."""
    rows = _path_matrix(n)
    rows[n - 2][n - 1] = -2
    return rows


def cartan_c(n: int) -> list[list[int]]:
    rows = _path_matrix(n)
    rows[n - 1][n - 2] = -2
    return rows


def cartan_d(n: int) -> list[list[int]]:
    rows = _path_matrix(n - 1)
    for row in rows:
        row.append(0)
    rows.append([0] * n)
    rows[n - 1][n - 1] = 2
    rows[n - 3][n - 1] = rows[n - 1][n - 3] = -1
    return rows


def cartan_e(n: int) -> list[list[int]]:
    assert n in (6, 7, 8)
    rows = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    chain = [1, 3, 4, 5, 6, 7, 8][: n - 1]  # 1-based vertex names
    for a, b in zip(chain, chain[1:]):
        rows[a - 1][b - 1] = rows[b - 1][a - 1] = -1
    rows[2 - 1][4 - 1] = rows[4 - 1][2 - 1] = -1
    return rows


def cartan_f4() -> list[list[int]]:
    rows = _path_matrix(4)
    rows[1][2] = -2
    rows[2][1] = -1
    return rows


def cartan_g2() -> list[list[int]]:
    return [[2, -1], [-3, 2]]


#: name -> matrix for every finite family member used by the tests.
FINITE_FIXTURES: dict[str, list[list[int]]] = {
    **{f"A{n}": cartan_a(n) for n in range(1, 9)},
    **{f"B{n}": cartan_b(n) for n in range(2, 9)},
    **{f"C{n}": cartan_c(n) for n in range(3, 9)},
    **{f"D{n}": cartan_d(n) for n in range(4, 9)},
    "E6": cartan_e(6),
    "E7": cartan_e(7),
    "E8": cartan_e(8),
    "F4": cartan_f4(),
    "G2": cartan_g2(),
}

#: textbook positive-root counts, an independent check on the closure walk.
POSITIVE_ROOT_COUNTS: dict[str, int] = {
    **{f"A{n}": n * (n + 1) // 2 for n in range(1, 9)},
    **{f"B{n}": n * n for n in range(2, 9)},
    **{f"C{n}": n * n for n in range(3, 9)},
    **{f"D{n}": n * (n - 1) for n in range(4, 9)},
    "E6": 36,
    "E7": 63,
    "E8": 120,
    "F4": 24,
    "G2": 6,
}

#: textbook highest-root heights.
HIGHEST_ROOT_HEIGHTS: dict[str, int] = {
    **{f"A{n}": n for n in range(1, 9)},
    **{f"B{n}": 2 * n - 1 for n in range(2, 9)},
    **{f"C{n}": 2 * n - 1 for n in range(3, 9)},
    **{f"D{n}": 2 * n - 3 for n in range(4, 9)},
    "E6": 11,
    "E7": 17,
    "E8": 29,
    "F4": 11,
    "G2": 5,
}

#: connected class counts by vertex count, transcribed from the standard
#: finite and affine lists (counting diagram classes, duals separate):
#: finite k=1..10; affine k=2..10.
FINITE_CLASS_COUNTS = {1: 1, 2: 3, 3: 3, 4: 5, 5: 4, 6: 5, 7: 5, 8: 5, 9: 4, 10: 4}
AFFINE_CLASS_COUNTS = {2: 2, 3: 6, 4: 6, 5: 9, 6: 7, 7: 8, 8: 8, 9: 8, 10: 7}
