"""Text formats: bit-exact matrix files, edge lists, experiment CSV.

Matrix file::

    n KIND [modulus] [tolerance]
    <n lines of n whitespace-separated entries>

KIND is one of gf2, gfp, int, rat, real, complex. Rationals are written
``p/q``, complexes ``a+bi``; floats use the shortest round-trip repr.
"""

from __future__ import annotations

import csv
import math
import os
from fractions import Fraction
from pathlib import Path

import numpy as np

from .domains import DomainKind, ScalarDomain, DEFAULT_TOLERANCE
from .matrix import DenseMatrix

CSV_HEADER = ("tester", "n", "domain", "trial", "seed", "verdict", "queries", "us")


class MatrixFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _parse_header(tokens: list[str]) -> tuple[int, ScalarDomain]:
    if len(tokens) < 2:
        raise MatrixFormatError("header must read 'n KIND [modulus] [tolerance]'", 1)
    try:
        n = int(tokens[0])
        kind = DomainKind(tokens[1].lower())
    except ValueError as exc:
        raise MatrixFormatError(f"bad header: {exc}", 1) from None
    if n < 1:
        raise MatrixFormatError("dimension must be positive", 1)
    extra = tokens[2:]
    try:
        if kind is DomainKind.GFP:
            if len(extra) != 1:
                raise MatrixFormatError("gfp header needs exactly one modulus", 1)
            return n, ScalarDomain.gfp(int(extra[0]))
        if kind in (DomainKind.REAL, DomainKind.COMPLEX):
            if len(extra) > 1:
                raise MatrixFormatError("too many header fields", 1)
            return n, ScalarDomain(kind, tolerance=float(extra[0]) if extra else None)
        if extra:
            raise MatrixFormatError(f"{kind.value} header takes no extra fields", 1)
        return n, ScalarDomain(kind)
    except MatrixFormatError:
        raise
    except ValueError as exc:
        raise MatrixFormatError(f"bad header: {exc}", 1) from None


def _parse_entry(tok: str, domain: ScalarDomain):
    k = domain.kind
    if k in (DomainKind.GF2, DomainKind.GFP, DomainKind.INT):
        return int(tok)
    if k is DomainKind.RAT:
        return Fraction(tok)
    if k is DomainKind.REAL:
        return float(tok)
    if "j" in tok or "J" in tok:
        raise ValueError(f"complex entries use 'i', got {tok!r}")
    return complex(tok[:-1] + "j") if tok.endswith("i") else complex(tok)


def parse_matrix_text(text: str) -> DenseMatrix:
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise MatrixFormatError("empty file", 1)
    n, domain = _parse_header(lines[0].split())
    rows = []
    for lineno in range(2, n + 2):
        if lineno > len(lines):
            raise MatrixFormatError(f"expected {n} rows, file ends after {lineno - 2}", lineno)
        toks = lines[lineno - 1].split()
        if len(toks) != n:
            raise MatrixFormatError(f"expected {n} entries, found {len(toks)}", lineno)
        try:
            rows.append([_parse_entry(t, domain) for t in toks])
        except ValueError as exc:
            raise MatrixFormatError(f"entry not in {domain}: {exc}", lineno) from None
    if len(lines) > n + 1:
        raise MatrixFormatError("unexpected content after the last row", n + 2)
    arr = np.empty((n, n), dtype=object)
    arr[:, :] = rows
    try:
        return DenseMatrix(arr, domain)
    except ValueError as exc:
        raise MatrixFormatError(str(exc)) from None


def parse_matrix_file(path: str | os.PathLike) -> DenseMatrix:
    return parse_matrix_text(Path(path).read_text())


def _format_float(x: float) -> str:
    return repr(float(x))


def _format_complex(z: complex) -> str:
    im = z.imag
    sign = "-" if math.copysign(1.0, im) < 0 else "+"
    return f"{_format_float(z.real)}{sign}{_format_float(abs(im))}i"


def format_matrix(matrix: DenseMatrix) -> str:
    dom = matrix.domain
    header = [str(matrix.n), dom.kind.value]
    if dom.kind is DomainKind.GFP:
        header.append(str(dom.modulus))
    if dom.is_approx and dom.tolerance != DEFAULT_TOLERANCE:
        header.append(repr(dom.tolerance))
    if dom.kind is DomainKind.RAT:
        fmt = lambda f: f"{f.numerator}/{f.denominator}" if f.denominator != 1 else str(f.numerator)  # noqa: E731
        arr = matrix.to_array()
    elif dom.kind is DomainKind.REAL:
        fmt, arr = _format_float, matrix.raw
    elif dom.kind is DomainKind.COMPLEX:
        fmt, arr = _format_complex, matrix.raw
    else:
        fmt, arr = (lambda x: str(int(x))), matrix.raw
    lines = [" ".join(header)]
    lines += [" ".join(fmt(x) for x in row) for row in arr]
    return "\n".join(lines) + "\n"


def write_matrix_file(matrix: DenseMatrix, path: str | os.PathLike):
    Path(path).write_text(format_matrix(matrix))


def parse_edge_list(path: str | os.PathLike) -> DenseMatrix:
    """Edge list (``n`` then ``i j`` per line, 0-indexed) to an integer adjacency matrix."""
    from .domains import INT

    lines = [ln for ln in Path(path).read_text().splitlines()]
    if not lines or not lines[0].strip():
        raise MatrixFormatError("edge list must start with the vertex count", 1)
    try:
        n = int(lines[0].split()[0])
    except ValueError:
        raise MatrixFormatError("bad vertex count", 1) from None
    adj = np.zeros((n, n), dtype=np.int64)
    for lineno, line in enumerate(lines[1:], start=2):
        toks = line.split()
        if not toks:
            continue
        if len(toks) != 2:
            raise MatrixFormatError("expected 'i j'", lineno)
        try:
            i, j = int(toks[0]), int(toks[1])
        except ValueError:
            raise MatrixFormatError("vertex ids must be integers", lineno) from None
        if not (0 <= i < n and 0 <= j < n) or i == j:
            raise MatrixFormatError(f"invalid edge ({i}, {j})", lineno)
        adj[i, j] = adj[j, i] = 1
    return DenseMatrix(adj, INT)


def write_edge_list(adjacency: DenseMatrix, path: str | os.PathLike):
    a = adjacency.raw
    n = adjacency.n
    lines = [str(n)] + [f"{i} {j}" for i in range(n) for j in range(i + 1, n) if a[i, j]]
    Path(path).write_text("\n".join(lines) + "\n")


def write_csv(rows, path: str | os.PathLike):
    """Write trial rows (mappings or objects with CSV_HEADER attributes)."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for row in rows:
            get = row.get if isinstance(row, dict) else (lambda k, r=row: getattr(r, k))
            writer.writerow([get(k) for k in CSV_HEADER])
