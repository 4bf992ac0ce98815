"""Cells files, ASCII rendering and JSON reports.

A cells file holds one cell per line as ``i j`` (its lower-left corner).
Blank lines and ``#`` comments are ignored; ``;`` separates cells within a
line, so a whole collection can also be written on a single line.
"""

from __future__ import annotations

import json
from typing import Any

from cellci.grid import CellCollection, Point, minimal_bounding_rectangle


class CellsParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def parse_cells(text: str) -> CellCollection:
    corners = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        for chunk in line.split(";"):
            fields = chunk.split()
            if not fields:
                continue
            if len(fields) != 2:
                raise CellsParseError(lineno, f"expected two integers, got {chunk.strip()!r}")
            try:
                corners.append(Point(int(fields[0]), int(fields[1])))
            except ValueError:
                raise CellsParseError(lineno, f"non-integer coordinate in {chunk.strip()!r}") from None
    return CellCollection(corners)


def read_cells(path: str) -> CellCollection:
    with open(path, encoding="utf-8") as fh:
        return parse_cells(fh.read())


def serialize_cells(C, one_line: bool = False) -> str:
    pts = [c.lower_left for c in C] if isinstance(C, CellCollection) else sorted(C)
    if one_line:
        return "; ".join(f"{p[0]} {p[1]}" for p in pts)
    return "".join(f"{p[0]} {p[1]}\n" for p in pts)


def render_ascii(C: CellCollection, ascii_only: bool = False) -> str:
    """The bounding box as a character grid, top row first."""
    if not C.cells:
        return ""
    full, empty = ("#", ".") if ascii_only else ("■", "·")
    box = minimal_bounding_rectangle(C)
    filled = {c.lower_left for c in C.cells}
    rows = []
    for j in range(box.b.j - 1, box.a.j - 1, -1):
        rows.append("".join(
            full if Point(i, j) in filled else empty for i in range(box.a.i, box.b.i)
        ))
    return "\n".join(rows) + "\n"


def to_json(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"
