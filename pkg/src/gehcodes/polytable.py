"""Polynomial tables: built-in primitive binary polynomials and the text table format.

A table file holds one record per line::

    m n c0 c1 ... cm

with coefficients in decimal, constant term first.  Records with ``n == 1``
name the primitive binary polynomial used for extension degree ``m``.
Records with ``n > 1`` pin the expected lift at that level; they are checked
against the computed lift when a ring is built.  Blank lines and ``#``
comments are ignored.

The environment variable ``GEH_POLY_TABLE`` points to an alternate table
which is consulted before the built-in one.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

ENV_VAR = "GEH_POLY_TABLE"

_BUILTIN = """\
# m n c0 c1 ... cm
2 1 1 1 1
3 1 1 0 1 1
4 1 1 1 0 0 1
5 1 1 0 1 0 0 1
6 1 1 1 0 0 0 0 1
7 1 1 1 0 0 0 0 0 1
8 1 1 0 1 1 1 0 0 0 1
9 1 1 0 0 0 1 0 0 0 0 1
10 1 1 0 0 1 0 0 0 0 0 0 1
11 1 1 0 1 0 0 0 0 0 0 0 0 1
12 1 1 1 0 0 1 0 1 0 0 0 0 0 1
13 1 1 1 0 1 1 0 0 0 0 0 0 0 0 1
14 1 1 1 0 0 0 0 1 0 0 0 1 0 0 0 1
15 1 1 1 0 0 0 0 0 0 0 0 0 0 0 0 0 1
16 1 1 1 0 1 0 0 0 0 0 0 0 0 1 0 0 0 1
3 2 3 2 3 1
3 3 7 2 3 1
"""


class PolyTableError(ValueError):
    """Malformed polynomial table record."""


@dataclass(frozen=True)
class PolyRecord:
    m: int
    n: int
    coeffs: tuple[int, ...]


def parse_table(text: str, source: str = "<table>") -> list[PolyRecord]:
    records = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            fields = [int(tok) for tok in line.split()]
        except ValueError as exc:
            raise PolyTableError(f"{source}:{lineno}: non-integer field") from exc
        if len(fields) < 3:
            raise PolyTableError(f"{source}:{lineno}: expected 'm n c0 ... cm'")
        m, n, coeffs = fields[0], fields[1], tuple(fields[2:])
        if m < 1 or n < 1:
            raise PolyTableError(f"{source}:{lineno}: m and n must be positive")
        if len(coeffs) != m + 1:
            raise PolyTableError(
                f"{source}:{lineno}: expected {m + 1} coefficients, got {len(coeffs)}"
            )
        if any(c < 0 or c >= 2**n for c in coeffs):
            raise PolyTableError(f"{source}:{lineno}: coefficient outside [0, 2^n)")
        records.append(PolyRecord(m, n, coeffs))
    return records


def format_table(records: list[PolyRecord]) -> str:
    return "".join(
        f"{r.m} {r.n} {' '.join(str(c) for c in r.coeffs)}\n" for r in records
    )


def read_table(path: str | os.PathLike) -> list[PolyRecord]:
    path = Path(path)
    return parse_table(path.read_text(), source=str(path))


def load_tables() -> list[PolyRecord]:
    """Records from ``GEH_POLY_TABLE`` (if set) followed by the built-in ones."""
    records = []
    override = os.environ.get(ENV_VAR)
    if override:
        records.extend(read_table(override))
    records.extend(parse_table(_BUILTIN, source="<builtin>"))
    return records


def default_binary_polynomial(m: int) -> tuple[int, ...]:
    for rec in load_tables():
        if rec.m == m and rec.n == 1:
            return rec.coeffs
    raise KeyError(f"no primitive polynomial of degree {m} in the table")


def pinned_lift(m: int, n: int, h2: tuple[int, ...]) -> tuple[int, ...] | None:
    """The first pinned lift for ``(m, n)`` whose reduction mod 2 is ``h2``."""
    for rec in load_tables():
        if rec.m == m and rec.n == n and tuple(c % 2 for c in rec.coeffs) == h2:
            return rec.coeffs
    return None
