"""Matrix input formats: whitespace text and JSON.

Text format: one matrix row per line, entries separated by whitespace.  Blank
lines and lines starting with ``#`` are ignored.  JSON format: either a bare
array of arrays or an object with a ``"matrix"`` key.  Both parsers feed the
result through GCM validation, so structural errors and axiom violations come
back with positions attached.
"""

from __future__ import annotations

import json

from .errors import MatrixParseError
from .gcm import GeneralizedCartanMatrix, validate_gcm

__all__ = [
    "parse_matrix_text",
    "parse_matrix_json",
    "parse_matrix_input",
    "format_matrix_text",
]


def parse_matrix_text(text: str) -> GeneralizedCartanMatrix:
    rows: list[list[int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        row = []
        for tok in stripped.split():
            try:
                row.append(int(tok))
            except ValueError:
                raise MatrixParseError(
                    f"line {lineno}: entry {tok!r} is not an integer"
                ) from None
        rows.append(row)
    if not rows:
        raise MatrixParseError("no matrix rows found in input")
    return validate_gcm(rows)


def parse_matrix_json(text: str) -> GeneralizedCartanMatrix:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixParseError(f"invalid JSON: {exc}") from None
    if isinstance(obj, dict):
        if "matrix" not in obj:
            raise MatrixParseError('JSON object must carry a "matrix" key')
        obj = obj["matrix"]
    if not isinstance(obj, list) or not all(isinstance(r, list) for r in obj):
        raise MatrixParseError("JSON matrix must be an array of arrays")
    for i, row in enumerate(obj, start=1):
        for j, v in enumerate(row, start=1):
            if not isinstance(v, int) or isinstance(v, bool):
                raise MatrixParseError(f"entry {v!r} at ({i}, {j}) is not an integer")
    return validate_gcm(obj)


def parse_matrix_input(text: str) -> GeneralizedCartanMatrix:
    """Parse either supported format, sniffing JSON by its first character."""
    head = text.lstrip()[:1]
    if head in ("{", "["):
        return parse_matrix_json(text)
    return parse_matrix_text(text)


def format_matrix_text(A: GeneralizedCartanMatrix) -> str:
    """Render a matrix in the text input format, columns right-aligned."""
    cells = [[str(v) for v in row] for row in A.rows]
    width = max(len(c) for row in cells for c in row)
    return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)
