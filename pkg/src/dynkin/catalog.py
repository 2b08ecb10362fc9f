"""Catalog of hyperbolic diagrams: entries, extensions, verification, files.

A catalog entry packages one canonical hyperbolic matrix with everything the
rest of the package can derive about it: compactness, symmetrizability with
the normalized symmetrizer, the number of distinct simple-root lengths, the
orbit partition of the simple roots, and the id of its dual (transpose) class.
Entry ids are ``"<rank>-<ordinal>"`` with the ordinal assigned in canonical
matrix order within each rank, starting at 1.

The file format is line-delimited JSON: a header line carrying the format
string, then one entry per line with sorted keys, so equal catalogs serialize
to identical bytes.  Loading enforces schema-level invariants only (valid
GCM, consistent flags, unique ids); the mathematical content is rechecked by
:func:`verify_catalog`, which is what lets a structurally well-formed but
mathematically bogus entry be loaded and then flagged.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .canonical import canonical_rows
from .classify import (
    AFFINE,
    FINITE,
    hyperbolic_compact_scan,
    kind_of_rows,
    sub_rows,
)
from .enumeration import search_rank
from .errors import CatalogFormatError, DynkinError, RankBoundError, WrongTypeError
from .gcm import (
    GeneralizedCartanMatrix,
    adjacency_bitmasks,
    is_indecomposable,
    mask_connected,
    matrix_to_diagram,
    validate_gcm,
)
from .symmetrize import bilinear_form, is_symmetrizable, symmetrizer
from .weyl import OrbitPartition, highest_root, orbit_partition, orbit_partitions_agree

__all__ = [
    "CATALOG_FORMAT",
    "MIN_RANK",
    "MAX_RANK",
    "CatalogEntry",
    "enumerate_hyperbolic",
    "extend_finite_to_affine",
    "overextend_affine",
    "PropertyCheck",
    "CatalogReport",
    "verify_catalog",
    "catalog_to_lines",
    "catalog_from_lines",
    "write_catalog",
    "read_catalog",
    "catalog_to_tsv",
    "catalog_to_latex",
]

CATALOG_FORMAT = "dynkin-catalog/1"
MIN_RANK = 3
MAX_RANK = 10

VERIFIED = "verified"
UNVERIFIED = "unverified"


@dataclass(frozen=True)
class CatalogEntry:
    """One hyperbolic class in canonical form with its derived attributes.

    ``orbit_semantics`` records what the orbit blocks mean: ``"verified"``
    when the matrix is symmetrizable (the reflection-walk cross-check in
    :func:`verify_catalog` applies), ``"unverified"`` otherwise (the skeleton
    partition is still reported, but no independent confirmation exists).
    """

    canonical_id: str
    rank: int
    matrix: GeneralizedCartanMatrix
    compact: bool
    symmetrizable: bool
    symmetrizer: tuple[int, ...] | None
    root_lengths: int | None
    orbit_blocks: OrbitPartition
    orbit_semantics: str
    dual_id: str


# == building the catalog ==


def _entry_id(rank: int, ordinal: int) -> str:
    return f"{rank}-{ordinal:03d}"


def _rank_entries(rank: int, mats: tuple[tuple[tuple[int, ...], ...], ...]) -> list[CatalogEntry]:
    ids = {rows: _entry_id(rank, k) for k, rows in enumerate(mats, start=1)}
    entries = []
    for k, rows in enumerate(mats, start=1):
        A = validate_gcm(rows)
        hyper, compact = hyperbolic_compact_scan(rows)
        assert hyper, "enumeration produced a non-hyperbolic matrix"
        sym, _ = is_symmetrizable(A)
        if sym:
            d = symmetrizer(A).d
            rho = len(set(d))
        else:
            d = None
            rho = None
        transpose = tuple(zip(*rows))
        dual_rows = canonical_rows(transpose)[0]
        dual_id = ids.get(dual_rows)
        assert dual_id is not None, "catalog must be closed under transposition"
        entries.append(
            CatalogEntry(
                canonical_id=_entry_id(rank, k),
                rank=rank,
                matrix=A,
                compact=compact,
                symmetrizable=sym,
                symmetrizer=d,
                root_lengths=rho,
                orbit_blocks=orbit_partition(matrix_to_diagram(A)),
                orbit_semantics=VERIFIED if sym else UNVERIFIED,
                dual_id=dual_id,
            )
        )
    return entries


def enumerate_hyperbolic(
    rank_min: int = MIN_RANK, rank_max: int = MAX_RANK, jobs: int = 1
) -> tuple[CatalogEntry, ...]:
    """Full catalog of hyperbolic classes for ranks ``rank_min..rank_max``.

    Deterministic: entries are sorted by rank, then by canonical matrix.
    ``jobs > 1`` distributes whole ranks over worker processes; the merge
    order is fixed, so the output does not depend on scheduling.
    """
    if not (MIN_RANK <= rank_min <= rank_max <= MAX_RANK):
        raise RankBoundError(
            f"rank range must satisfy {MIN_RANK} <= min <= max <= {MAX_RANK}, "
            f"got {rank_min}..{rank_max}"
        )
    ranks = list(range(rank_min, rank_max + 1))
    if jobs > 1:
        from multiprocessing import Pool

        with Pool(min(jobs, len(ranks))) as pool:
            per_rank = pool.map(search_rank, ranks)
    else:
        per_rank = [search_rank(r) for r in ranks]
    out: list[CatalogEntry] = []
    for rank, mats in zip(ranks, per_rank):
        out.extend(_rank_entries(rank, mats))
    return tuple(out)


# == extensions ==


def extend_finite_to_affine(A: GeneralizedCartanMatrix) -> GeneralizedCartanMatrix:
    """Affine extension of an indecomposable finite-type GCM.

    A new vertex is prepended at index 1 (existing vertices shift up by one)
    whose simple root is the negative of the highest root; its pairings with
    the old vertices come out of the symmetrized bilinear form and are
    integral by construction, which is asserted.  The result is checked to be
    of affine type.
    """
    if not is_indecomposable(A):
        raise WrongTypeError("affine extension requires an indecomposable matrix")
    if kind_of_rows(A.rows) != FINITE:
        raise WrongTypeError("affine extension requires a finite-type matrix")
    n = A.rank
    theta = highest_root(A).coords
    B = bilinear_form(A)
    Btheta = [sum(B[j][k] * theta[k] for k in range(n)) for j in range(n)]
    norm = sum(theta[j] * Btheta[j] for j in range(n))
    new_row = []  # entries A[0][j]: highest-root coroot against old roots
    new_col = []  # entries A[j][0]: old coroots against the new root
    for j in range(n):
        r = Fraction(-2 * Btheta[j], norm)
        c = Fraction(-2 * Btheta[j], B[j][j])
        assert r.denominator == 1 and c.denominator == 1, "pairings must be integers"
        new_row.append(int(r))
        new_col.append(int(c))
    rows = [[2] + new_row] + [[new_col[j]] + list(A.rows[j]) for j in range(n)]
    out = validate_gcm(rows)
    assert is_indecomposable(out), "affine extension must stay connected"
    assert kind_of_rows(out.rows) == AFFINE, "affine extension must be affine"
    return out


def overextend_affine(
    A: GeneralizedCartanMatrix, zero_vertex: int = 1
) -> GeneralizedCartanMatrix:
    """Attach a new vertex by a single edge to ``zero_vertex`` of an affine GCM.

    The new vertex is prepended at index 1, shifting existing vertices up, so
    chaining with :func:`extend_finite_to_affine` (whose added vertex lands at
    index 1, the default ``zero_vertex``) hangs the chain off the affine
    vertex.  The caller decides what to make of the result's type; nothing
    about it is assumed here.
    """
    if not is_indecomposable(A):
        raise WrongTypeError("overextension requires an indecomposable matrix")
    if kind_of_rows(A.rows) != AFFINE:
        raise WrongTypeError("overextension requires an affine matrix")
    A._check_vertex(zero_vertex)
    n = A.rank
    rows = [[0] * (n + 1) for _ in range(n + 1)]
    rows[0][0] = 2
    for i in range(n):
        for j in range(n):
            rows[i + 1][j + 1] = A.rows[i][j]
    rows[0][zero_vertex] = -1
    rows[zero_vertex][0] = -1
    return validate_gcm(rows)


# == verification harness ==


@dataclass(frozen=True)
class PropertyCheck:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class CatalogReport:
    checks: tuple[PropertyCheck, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def format_lines(self) -> list[str]:
        return [
            f"{'PASS' if c.passed else 'FAIL'} {c.name}: {c.detail}" for c in self.checks
        ]


def _edge_products(rows: tuple[tuple[int, ...], ...]) -> list[int]:
    n = len(rows)
    return [
        rows[i][j] * rows[j][i]
        for i in range(n)
        for j in range(i + 1, n)
        if rows[i][j] != 0
    ]


def _connected_proper_kinds(rows: tuple[tuple[int, ...], ...]):
    """(mask, kind) for every proper connected induced subdiagram."""
    n = len(rows)
    adj = adjacency_bitmasks(rows)
    for mask in range(1, (1 << n) - 1):
        if mask_connected(mask, adj):
            yield mask, kind_of_rows(sub_rows(rows, mask))


def verify_catalog(entries: tuple[CatalogEntry, ...], height: int = 8) -> CatalogReport:
    """Recheck the structural claims the catalog makes about itself.

    Expects the full output of :func:`enumerate_hyperbolic` over ranks 3..10;
    the checks that quantify over the whole catalog (compactness profile,
    root-length bound, orbit bounds) are meaningless on partial input and may
    then fail.  ``height`` seeds the reflection-walk window of the orbit
    cross-check; on mismatch the window is doubled a few times before the
    check is declared failed.
    """
    checks: list[PropertyCheck] = []

    def add(name: str, offending: list[str], ok_detail: str) -> None:
        if offending:
            shown = ", ".join(offending[:8]) + (", ..." if len(offending) > 8 else "")
            checks.append(PropertyCheck(name, False, f"offending entries: {shown}"))
        else:
            checks.append(PropertyCheck(name, True, ok_detail))

    by_id = {e.canonical_id: e for e in entries}

    bad = [e.canonical_id for e in entries if not MIN_RANK <= e.rank <= MAX_RANK]
    add("rank-bound", bad, f"all ranks within {MIN_RANK}..{MAX_RANK}")

    bad = []
    seen_ids: set[str] = set()
    for e in entries:
        rows = e.matrix.rows
        ok = (
            e.canonical_id not in seen_ids
            and e.canonical_id.startswith(f"{e.rank}-")
            and len(rows) == e.rank
            and canonical_rows(rows)[0] == rows
            and (e.symmetrizable == (e.symmetrizer is not None) == (e.root_lengths is not None))
            and e.orbit_semantics == (VERIFIED if e.symmetrizable else UNVERIFIED)
        )
        seen_ids.add(e.canonical_id)
        if not ok:
            bad.append(e.canonical_id)
    add("well-formed", bad, "ids unique, matrices canonical, flags consistent")

    bad = []
    for e in entries:
        hyper, compact = hyperbolic_compact_scan(e.matrix.rows)
        if not hyper or compact != e.compact:
            bad.append(e.canonical_id)
    add("hyperbolic", bad, "every entry hyperbolic, compact flags agree with the subset scan")

    bad = []
    for e in entries:
        sym, _ = is_symmetrizable(e.matrix)
        if sym != e.symmetrizable:
            bad.append(e.canonical_id)
            continue
        if sym:
            d = e.symmetrizer
            rows = e.matrix.rows
            n = e.rank
            balanced = all(
                d[i] * rows[i][j] == d[j] * rows[j][i]
                for i in range(n)
                for j in range(i + 1, n)
            )
            if not balanced or e.root_lengths != len(set(d)):
                bad.append(e.canonical_id)
    add("symmetrizer", bad, "flags match recomputation; stored weights symmetrize exactly")

    bad = []
    for e in entries:
        mate = by_id.get(e.dual_id)
        transpose_canon = canonical_rows(tuple(zip(*e.matrix.rows)))[0]
        if mate is None or mate.matrix.rows != transpose_canon or mate.dual_id != e.canonical_id:
            bad.append(e.canonical_id)
    add("duality", bad, "transpose classes present, dual pairing is an involution")

    bad = []
    for e in entries:
        n = e.rank
        for mask, kind in _connected_proper_kinds(e.matrix.rows):
            if kind == AFFINE and mask.bit_count() != n - 1:
                bad.append(e.canonical_id)
                break
    add(
        "affine-subdiagram-corank",
        bad,
        "every proper connected affine subdiagram has exactly rank-1 vertices",
    )

    bad = []
    for e in entries:
        n = e.rank
        adj = adjacency_bitmasks(e.matrix.rows)
        full = (1 << n) - 1
        if not any(mask_connected(full ^ (1 << v), adj) for v in range(n)):
            bad.append(e.canonical_id)
    add("corank1-connected", bad, "every entry keeps a connected subdiagram on rank-1 vertices")

    bad = []
    for e in entries:
        if not e.symmetrizable:
            continue
        has4 = any(p == 4 for p in _edge_products(e.matrix.rows))
        if has4 != (e.rank == 3 and not e.compact):
            bad.append(e.canonical_id)
    add(
        "product4-edges",
        bad,
        "symmetrizable entries carry a product-4 edge exactly in rank 3 non-compact",
    )

    bad = []
    for e in entries:
        if e.rank != 3 or not e.symmetrizable:
            continue
        has_affine_edge = any(
            kind == AFFINE
            for mask, kind in _connected_proper_kinds(e.matrix.rows)
            if mask.bit_count() == 2
        )
        if (not e.compact) != has_affine_edge:
            bad.append(e.canonical_id)
    add(
        "rank3-affine-edge",
        bad,
        "rank-3 symmetrizable entries: non-compact iff an edge subdiagram is affine",
    )

    bad = []
    for e in entries:
        if e.symmetrizable and e.rank >= 4:
            if any(p > 3 for p in _edge_products(e.matrix.rows)):
                bad.append(e.canonical_id)
    add("max-edge-product", bad, "symmetrizable entries of rank >= 4 keep edge products <= 3")

    compact_entries = [e for e in entries if e.compact]
    failures: list[str] = []
    if compact_entries:
        if max(e.rank for e in compact_entries) != 5:
            failures.append("max compact rank is not 5")
        rank5 = [e for e in compact_entries if e.rank == 5]
        if len(rank5) != 1:
            failures.append(f"{len(rank5)} compact entries of rank 5")
        else:
            e = rank5[0]
            diagram = matrix_to_diagram(e.matrix)
            degrees = [len(diagram.neighbors(v)) for v in range(1, 6)]
            labels = sorted(lab.render_class for _, _, lab in diagram.edges)
            if degrees != [2] * 5 or labels != ["arrow2"] + ["single"] * 4:
                failures.append(f"{e.canonical_id} is not a cycle with a unique double arrow")
            if e.symmetrizable:
                failures.append(f"{e.canonical_id} unexpectedly symmetrizable")
        sym_compact = [e for e in compact_entries if e.symmetrizable]
        if sym_compact and max(e.rank for e in sym_compact) != 4:
            failures.append("max symmetrizable compact rank is not 4")
    else:
        failures.append("no compact entries present")
    checks.append(
        PropertyCheck(
            "compact-profile",
            not failures,
            "; ".join(failures)
            if failures
            else "compactness stops at rank 5, symmetrizable compactness at rank 4",
        )
    )

    bad = [e.canonical_id for e in entries if e.rank >= 7 and not e.symmetrizable]
    add("ranks-7-10-symmetrizable", bad, "every entry of rank 7..10 is symmetrizable")

    sym_entries = [e for e in entries if e.symmetrizable]
    bad = [e.canonical_id for e in sym_entries if e.root_lengths > 4]
    four = [e.canonical_id for e in sym_entries if e.root_lengths == 4]
    if not bad and len(four) != 1:
        bad = four or ["<none reaches 4>"]
    add(
        "root-length-bound",
        bad,
        "root-length counts stay at <= 4 with exactly one entry reaching 4",
    )

    counts = [e.orbit_blocks.block_count for e in entries]
    failures = []
    if any(c > 4 for c in counts):
        failures.append("an entry exceeds 4 orbit blocks")
    if not counts or max(counts) != 4:
        failures.append("no entry reaches 4 orbit blocks")
    checks.append(
        PropertyCheck(
            "orbit-block-bound",
            not failures,
            "; ".join(failures) if failures else "orbit block counts stay at <= 4 and attain 4",
        )
    )

    split_found = [e.canonical_id for e in sym_entries if _has_equal_norm_orbit_split(e)]
    checks.append(
        PropertyCheck(
            "equal-norm-orbit-split",
            bool(split_found),
            f"witness: {split_found[0]}"
            if split_found
            else "no symmetrizable entry separates equal-norm simple roots into distinct orbits",
        )
    )

    bad = []
    for e in sym_entries:
        if e.rank <= 5 and not orbit_partitions_agree(e.matrix, start_height=height):
            bad.append(e.canonical_id)
    add(
        "orbit-oracle",
        bad,
        "reflection-walk orbits agree with the skeleton partition (ranks <= 5)",
    )

    return CatalogReport(tuple(checks))


def _has_equal_norm_orbit_split(e: CatalogEntry) -> bool:
    d = e.symmetrizer
    assert d is not None
    for i in range(e.rank):
        for j in range(i + 1, e.rank):
            if d[i] == d[j] and e.orbit_blocks.block_of(i + 1) != e.orbit_blocks.block_of(j + 1):
                return True
    return False


# == file format ==


def _entry_to_obj(e: CatalogEntry) -> dict:
    return {
        "id": e.canonical_id,
        "rank": e.rank,
        "matrix": [list(r) for r in e.matrix.rows],
        "compact": e.compact,
        "symmetrizable": e.symmetrizable,
        "symmetrizer": list(e.symmetrizer) if e.symmetrizer is not None else None,
        "root_lengths": e.root_lengths,
        "orbit_blocks": [sorted(b) for b in e.orbit_blocks.blocks],
        "orbit_semantics": e.orbit_semantics,
        "dual_id": e.dual_id,
    }


_ENTRY_KEYS = {
    "id",
    "rank",
    "matrix",
    "compact",
    "symmetrizable",
    "symmetrizer",
    "root_lengths",
    "orbit_blocks",
    "orbit_semantics",
    "dual_id",
}


def _entry_from_obj(obj: dict, lineno: int) -> CatalogEntry:
    if not isinstance(obj, dict) or set(obj) != _ENTRY_KEYS:
        raise CatalogFormatError(f"line {lineno}: unexpected entry fields")
    try:
        matrix = validate_gcm(obj["matrix"])
    except DynkinError as exc:
        raise CatalogFormatError(f"line {lineno}: bad matrix: {exc}") from None
    rank = obj["rank"]
    if not isinstance(rank, int) or rank != matrix.rank:
        raise CatalogFormatError(f"line {lineno}: rank field does not match the matrix")
    sym = obj["symmetrizable"]
    d = obj["symmetrizer"]
    rho = obj["root_lengths"]
    if not isinstance(sym, bool):
        raise CatalogFormatError(f"line {lineno}: symmetrizable must be a boolean")
    if sym:
        if (
            not isinstance(d, list)
            or len(d) != rank
            or not all(isinstance(v, int) and not isinstance(v, bool) and v > 0 for v in d)
            or not isinstance(rho, int)
        ):
            raise CatalogFormatError(f"line {lineno}: bad symmetrizer for a symmetrizable entry")
    elif d is not None or rho is not None:
        raise CatalogFormatError(
            f"line {lineno}: non-symmetrizable entry must have null symmetrizer fields"
        )
    blocks = obj["orbit_blocks"]
    if (
        not isinstance(blocks, list)
        or not all(isinstance(b, list) and b for b in blocks)
        or sorted(v for b in blocks for v in b) != list(range(1, rank + 1))
    ):
        raise CatalogFormatError(f"line {lineno}: orbit blocks must partition 1..rank")
    semantics = obj["orbit_semantics"]
    if semantics not in (VERIFIED, UNVERIFIED):
        raise CatalogFormatError(f"line {lineno}: bad orbit_semantics {semantics!r}")
    if not isinstance(obj["id"], str) or not isinstance(obj["dual_id"], str):
        raise CatalogFormatError(f"line {lineno}: ids must be strings")
    return CatalogEntry(
        canonical_id=obj["id"],
        rank=rank,
        matrix=matrix,
        compact=bool(obj["compact"]),
        symmetrizable=sym,
        symmetrizer=tuple(d) if d is not None else None,
        root_lengths=rho,
        orbit_blocks=OrbitPartition(tuple(frozenset(b) for b in blocks)),
        orbit_semantics=semantics,
        dual_id=obj["dual_id"],
    )


def catalog_to_lines(entries: tuple[CatalogEntry, ...]) -> str:
    """Serialize to the line-delimited JSON format (byte-deterministic)."""
    header = {"format": CATALOG_FORMAT, "indexing": "vertices and orbit blocks are 1-based"}
    lines = [json.dumps(header, sort_keys=True, separators=(",", ":"))]
    lines.extend(
        json.dumps(_entry_to_obj(e), sort_keys=True, separators=(",", ":")) for e in entries
    )
    return "\n".join(lines) + "\n"


def catalog_from_lines(text: str) -> tuple[CatalogEntry, ...]:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise CatalogFormatError("empty catalog file")
    try:
        header = json.loads(lines[0])
    except json.JSONDecodeError as exc:
        raise CatalogFormatError(f"line 1: invalid JSON: {exc}") from None
    if not isinstance(header, dict) or header.get("format") != CATALOG_FORMAT:
        raise CatalogFormatError(f"unsupported catalog format; expected {CATALOG_FORMAT!r}")
    entries = []
    ids: set[str] = set()
    for lineno, line in enumerate(lines[1:], start=2):
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise CatalogFormatError(f"line {lineno}: invalid JSON: {exc}") from None
        entry = _entry_from_obj(obj, lineno)
        if entry.canonical_id in ids:
            raise CatalogFormatError(f"line {lineno}: duplicate id {entry.canonical_id}")
        ids.add(entry.canonical_id)
        entries.append(entry)
    return tuple(entries)


def write_catalog(entries: tuple[CatalogEntry, ...], path: str | Path) -> None:
    Path(path).write_text(catalog_to_lines(entries), encoding="utf-8")


def read_catalog(path: str | Path) -> tuple[CatalogEntry, ...]:
    return catalog_from_lines(Path(path).read_text(encoding="utf-8"))


# == table emitters ==


def catalog_to_tsv(entries: tuple[CatalogEntry, ...]) -> str:
    """Tab-separated table, one entry per row; empty cells where not applicable."""
    head = [
        "id",
        "rank",
        "matrix",
        "compact",
        "symmetrizable",
        "symmetrizer",
        "root_lengths",
        "orbit_blocks",
        "orbit_semantics",
        "dual_id",
    ]
    out = ["\t".join(head)]
    for e in entries:
        blocks = json.dumps([sorted(b) for b in e.orbit_blocks.blocks], separators=(",", ":"))
        out.append(
            "\t".join(
                [
                    e.canonical_id,
                    str(e.rank),
                    json.dumps([list(r) for r in e.matrix.rows], separators=(",", ":")),
                    str(e.compact).lower(),
                    str(e.symmetrizable).lower(),
                    ",".join(map(str, e.symmetrizer)) if e.symmetrizer else "",
                    str(e.root_lengths) if e.root_lengths is not None else "",
                    blocks,
                    e.orbit_semantics,
                    e.dual_id,
                ]
            )
        )
    return "\n".join(out) + "\n"


def catalog_to_latex(entries: tuple[CatalogEntry, ...]) -> str:
    """LaTeX table: index, matrix, symmetrizer (or N.S.), orbit blocks.

    The orbit column is left blank for non-symmetrizable entries, whose
    partition carries no verified reflection-group meaning.
    """
    out = [
        r"\begin{tabular}{llll}",
        r"index & matrix & symmetrizer & orbits \\",
        r"\hline",
    ]
    for e in entries:
        body = r" \\ ".join(" & ".join(str(v) for v in row) for row in e.matrix.rows)
        matrix = r"$\left(\begin{smallmatrix} " + body + r" \end{smallmatrix}\right)$"
        if e.symmetrizable:
            assert e.symmetrizer is not None
            sym = r"$\mathrm{diag}(" + ",".join(map(str, e.symmetrizer)) + r")$"
            orbits = "$" + "".join(
                r"\{" + ",".join(map(str, sorted(b))) + r"\}" for b in e.orbit_blocks.blocks
            ) + "$"
        else:
            sym = "N.S."
            orbits = ""
        out.append(f"{e.canonical_id} & {matrix} & {sym} & {orbits} \\\\")
    out.append(r"\end{tabular}")
    return "\n".join(out) + "\n"
