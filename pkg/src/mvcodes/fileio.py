"""Strict text formats for algebras and block codes.

Algebra files:

    kind: bck|mv|wajsberg
    order: <k>
    zero: <i> one: <j>        (bck)
    zero: <i>                 (mv)
    one: <j>                  (wajsberg)
    unary: i0 i1 ... i(k-1)   (mv and wajsberg only)
    <k rows of k whitespace-separated indices; row x, column y holds x.y>

Code files hold one bit string per line, all of equal length. Lines starting
with ``#`` and blank lines are ignored in both formats; anything else that
does not fit the schema is an error.
"""

from __future__ import annotations

import re

from .algebras import (
    Algebra,
    BckAlgebra,
    CayleyTable,
    MvAlgebra,
    WajsbergAlgebra,
    kind_of,
)
from .codes import BlockCode
from .errors import ParseError


def _content_lines(text: str) -> list[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lines.append(line)
    return lines


def _take(lines: list[str], what: str) -> str:
    if not lines:
        raise ParseError(f"unexpected end of file, expected {what}")
    return lines.pop(0)


def _match(line: str, pattern: str, what: str) -> tuple[str, ...]:
    m = re.fullmatch(pattern, line)
    if m is None:
        raise ParseError(f"expected {what}, got: {line!r}")
    return m.groups()


def _int_row(line: str, k: int, what: str) -> tuple[int, ...]:
    parts = line.split()
    if len(parts) != k or not all(p.isdigit() for p in parts):
        raise ParseError(f"expected {what} of {k} indices, got: {line!r}")
    return tuple(int(p) for p in parts)


def parse_algebra(text: str) -> Algebra:
    """Parse one algebra file; raises ParseError on any deviation."""
    lines = _content_lines(text)
    (kind,) = _match(_take(lines, "kind line"), r"kind:\s*(bck|mv|wajsberg)", "kind: bck|mv|wajsberg")
    (order,) = _match(_take(lines, "order line"), r"order:\s*(\d+)", "order: <k>")
    k = int(order)
    if k < 1:
        raise ParseError("order must be at least 1")
    if kind == "bck":
        zero, one = _match(
            _take(lines, "constants line"),
            r"zero:\s*(\d+)\s+one:\s*(\d+)",
            "zero: <i> one: <j>",
        )
        unary = None
    elif kind == "mv":
        (zero,) = _match(_take(lines, "constants line"), r"zero:\s*(\d+)", "zero: <i>")
        one = None
        unary = _int_row(
            _match(_take(lines, "unary line"), r"unary:\s*(.+)", "unary: row")[0], k, "unary row"
        )
    else:
        (one,) = _match(_take(lines, "constants line"), r"one:\s*(\d+)", "one: <j>")
        zero = None
        unary = _int_row(
            _match(_take(lines, "unary line"), r"unary:\s*(.+)", "unary: row")[0], k, "unary row"
        )
    rows = tuple(_int_row(_take(lines, f"table row {i}"), k, f"table row {i}") for i in range(k))
    if lines:
        raise ParseError(f"trailing content: {lines[0]!r}")
    table = CayleyTable(rows)
    if kind == "bck":
        return BckAlgebra(table, int(zero), int(one))
    if kind == "mv":
        return MvAlgebra(table, unary, int(zero))
    return WajsbergAlgebra(table, unary, int(one))


def format_algebra(algebra: Algebra) -> str:
    """Serialise an algebra in the exact file format (no comments)."""
    kind = kind_of(algebra)
    lines = [f"kind: {kind}", f"order: {algebra.k}"]
    if isinstance(algebra, BckAlgebra):
        lines.append(f"zero: {algebra.zero} one: {algebra.one}")
        rows = algebra.table.rows
    elif isinstance(algebra, MvAlgebra):
        lines.append(f"zero: {algebra.zero}")
        lines.append("unary: " + " ".join(str(v) for v in algebra.complement))
        rows = algebra.oplus.rows
    else:
        lines.append(f"one: {algebra.one}")
        lines.append("unary: " + " ".join(str(v) for v in algebra.negation))
        rows = algebra.circ.rows
    for row in rows:
        lines.append(" ".join(str(v) for v in row))
    return "\n".join(lines) + "\n"


def parse_code(text: str) -> BlockCode:
    """Parse one code file: equal-length bit strings, one per line."""
    lines = _content_lines(text)
    if not lines:
        raise ParseError("code file holds no words")
    for line in lines:
        if not re.fullmatch(r"[01]+", line):
            raise ParseError(f"expected a bit string, got: {line!r}")
    return BlockCode.from_strings(lines)


def format_code(code: BlockCode) -> str:
    return "\n".join(code.word_strings()) + "\n"
