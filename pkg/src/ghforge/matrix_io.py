"""Plain-text matrix files.

Layout: header lines prefixed ``#`` carrying ``key=value`` pairs
(format, p, n, modulus, k, lambda, provenance), then k body lines of k
space-separated integer encodings.  UTF-8, LF line endings, and fully
self-describing: the modulus travels with the matrix so files remain
meaningful across modulus conventions.  Writing is deterministic --
identical matrices produce byte-identical files.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .constructions import PROVENANCE_TAGS, GHMatrix
from .field import Field

FORMAT_VERSION = "ghforge-matrix-v1"

_HEADER_KEYS = ("format", "p", "n", "modulus", "k", "lambda", "provenance")


class MatrixFormatError(ValueError):
    """Raised when a matrix file cannot be parsed or is inconsistent."""


def matrix_to_text(matrix: GHMatrix) -> str:
    field = matrix.field
    lines = [
        f"# format={FORMAT_VERSION}",
        f"# p={field.p}",
        f"# n={field.n}",
        f"# modulus={','.join(str(c) for c in field.modulus)}",
        f"# k={matrix.order}",
        f"# lambda={matrix.claimed_lambda}",
        f"# provenance={matrix.provenance}",
    ]
    lines.extend(" ".join(str(int(v)) for v in row) for row in matrix.entries)
    return "\n".join(lines) + "\n"


def write_matrix(matrix: GHMatrix, path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(matrix_to_text(matrix))


def _parse_int(headers: dict, key: str) -> int:
    try:
        return int(headers[key])
    except ValueError as exc:
        raise MatrixFormatError(f"header {key}={headers[key]!r} is not an integer") from exc


def read_matrix(path) -> GHMatrix:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise MatrixFormatError(f"cannot read {path}: {exc}") from exc

    headers: dict[str, str] = {}
    body: list[str] = []
    for line in text.splitlines():
        if line.startswith("#"):
            if body:
                raise MatrixFormatError("header line after body started")
            item = line[1:].strip()
            if "=" not in item:
                raise MatrixFormatError(f"malformed header line {line!r}")
            key, _, value = item.partition("=")
            headers[key.strip()] = value.strip()
        elif line.strip():
            body.append(line)

    missing = [key for key in _HEADER_KEYS if key not in headers]
    if missing:
        raise MatrixFormatError(f"missing header keys: {', '.join(missing)}")
    if headers["format"] != FORMAT_VERSION:
        raise MatrixFormatError(f"unsupported format {headers['format']!r}")

    p = _parse_int(headers, "p")
    n = _parse_int(headers, "n")
    k = _parse_int(headers, "k")
    lam = _parse_int(headers, "lambda")
    try:
        modulus = tuple(int(c) for c in headers["modulus"].split(","))
    except ValueError as exc:
        raise MatrixFormatError(f"malformed modulus {headers['modulus']!r}") from exc
    provenance = headers["provenance"]
    if provenance not in PROVENANCE_TAGS:
        raise MatrixFormatError(f"unknown provenance tag {provenance!r}")

    try:
        field = Field(p, n, modulus)
    except ValueError as exc:
        raise MatrixFormatError(f"invalid field parameters: {exc}") from exc
    if lam < 1 or k != field.q * lam:
        raise MatrixFormatError(f"header k={k} is not q*lambda = {field.q}*{lam}")

    if len(body) != k:
        raise MatrixFormatError(f"expected {k} body rows, found {len(body)}")
    entries = np.empty((k, k), dtype=np.int64)
    for r, line in enumerate(body):
        tokens = line.split()
        if len(tokens) != k:
            raise MatrixFormatError(f"row {r} has {len(tokens)} entries, expected {k}")
        try:
            row = [int(t) for t in tokens]
        except ValueError as exc:
            raise MatrixFormatError(f"row {r} has a non-integer entry") from exc
        if any(not 0 <= v < field.q for v in row):
            raise MatrixFormatError(f"row {r} has an entry outside [0, {field.q})")
        entries[r] = row

    try:
        return GHMatrix(field, entries, lam, provenance)
    except ValueError as exc:
        raise MatrixFormatError(str(exc)) from exc


def _pretty_token(field: Field, value: int) -> str:
    if field.n == 1:
        return str(value)
    digits = field.decode(value)
    terms = []
    for j in range(field.n - 1, -1, -1):
        c = digits[j]
        if c == 0:
            continue
        if j == 0:
            terms.append(str(c))
        else:
            power = "a" if j == 1 else f"a^{j}"
            terms.append(power if c == 1 else f"{c}{power}")
    return "+".join(terms) if terms else "0"


def render_pretty(matrix: GHMatrix) -> str:
    """Human-readable rendering with extension-field elements shown as
    polynomials in ``a`` (e.g. GF(4) as 0, 1, a, a+1), columns aligned."""
    field = matrix.field
    tokens = [_pretty_token(field, v) for v in range(field.q)]
    width = max(len(t) for t in tokens)
    rows = [
        " ".join(tokens[int(v)].rjust(width) for v in row) for row in matrix.entries
    ]
    return "\n".join(rows) + "\n"
