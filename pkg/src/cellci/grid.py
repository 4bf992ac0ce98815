"""Cells, intervals and collections of cells on the integer grid.

A cell is identified by its lower-left corner. Collections are immutable,
deduplicated sets of cells; the vertex and edge sets are derived from the
member cells.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple


class Point(NamedTuple):
    i: int
    j: int

    def le(self, other: Point) -> bool:
        """Componentwise partial order."""
        return self.i <= other.i and self.j <= other.j

    def shift(self, di: int, dj: int) -> Point:
        return Point(self.i + di, self.j + dj)


@dataclass(frozen=True, order=True)
class Interval:
    """The box [a, b] in Z^2 with a <= b componentwise."""

    a: Point
    b: Point

    def __post_init__(self):
        object.__setattr__(self, "a", Point(*self.a))
        object.__setattr__(self, "b", Point(*self.b))
        if not self.a.le(self.b):
            raise ValueError(f"interval corners not ordered: {self.a} !<= {self.b}")

    @property
    def c(self) -> Point:
        """Upper-left anti-diagonal corner."""
        return Point(self.a.i, self.b.j)

    @property
    def d(self) -> Point:
        """Lower-right anti-diagonal corner."""
        return Point(self.b.i, self.a.j)

    @property
    def is_proper(self) -> bool:
        return self.a.i < self.b.i and self.a.j < self.b.j

    def corners(self) -> tuple[Point, Point, Point, Point]:
        return (self.a, self.b, self.c, self.d)

    def cells(self) -> frozenset[Cell]:
        """Cells of the rectangle spanned by a proper interval."""
        if not self.is_proper:
            return frozenset()
        return frozenset(
            Cell(Point(r, s))
            for r in range(self.a.i, self.b.i)
            for s in range(self.a.j, self.b.j)
        )

    def shift(self, di: int, dj: int) -> Interval:
        return Interval(self.a.shift(di, dj), self.b.shift(di, dj))

    def __str__(self):
        return f"[({self.a.i},{self.a.j}),({self.b.i},{self.b.j})]"


@dataclass(frozen=True, order=True)
class Cell:
    lower_left: Point

    def __post_init__(self):
        object.__setattr__(self, "lower_left", Point(*self.lower_left))

    @property
    def interval(self) -> Interval:
        return Interval(self.lower_left, self.lower_left.shift(1, 1))

    @property
    def vertices(self) -> frozenset[Point]:
        return frozenset(self.interval.corners())

    @property
    def edges(self) -> frozenset[frozenset[Point]]:
        iv = self.interval
        a, b, c, d = iv.corners()
        return frozenset(
            frozenset(e) for e in ((a, c), (c, b), (b, d), (a, d))
        )

    def shift(self, di: int, dj: int) -> Cell:
        return Cell(self.lower_left.shift(di, dj))

    def __str__(self):
        return f"cell({self.lower_left.i},{self.lower_left.j})"


def cell(i: int, j: int) -> Cell:
    return Cell(Point(i, j))


class CellCollection:
    """A finite set of cells. Repeated cells are merged."""

    def __init__(self, cells: Iterable[Cell | tuple[int, int]] = ()):
        self.cells: frozenset[Cell] = frozenset(
            c if isinstance(c, Cell) else Cell(Point(*c)) for c in cells
        )

    @classmethod
    def from_corners(cls, corners: Iterable[tuple[int, int]]) -> CellCollection:
        return cls(Cell(Point(i, j)) for i, j in corners)

    @cached_property
    def sorted_cells(self) -> tuple[Cell, ...]:
        return tuple(sorted(self.cells))

    @cached_property
    def vertices(self) -> frozenset[Point]:
        return frozenset(v for c in self.cells for v in c.vertices)

    @cached_property
    def edges(self) -> frozenset[frozenset[Point]]:
        return frozenset(e for c in self.cells for e in c.edges)

    @property
    def rank(self) -> int:
        return len(self.cells)

    def corners(self) -> list[tuple[int, int]]:
        return [tuple(c.lower_left) for c in self.sorted_cells]

    def shift(self, di: int, dj: int) -> CellCollection:
        return CellCollection(c.shift(di, dj) for c in self.cells)

    def canonical_offset(self) -> tuple[int, int]:
        """Shift that moves the lower-left corner of the bounding rectangle to the origin."""
        if not self.cells:
            return (0, 0)
        a = minimal_bounding_rectangle(self).a
        return (-a.i, -a.j)

    def __iter__(self) -> Iterator[Cell]:
        return iter(self.sorted_cells)

    def __len__(self):
        return len(self.cells)

    def __contains__(self, item):
        return item in self.cells

    def __eq__(self, other):
        if not isinstance(other, CellCollection):
            return NotImplemented
        return self.cells == other.cells

    def __hash__(self):
        return hash(self.cells)

    def __repr__(self):
        return f"CellCollection({self.corners()})"


def cells_in_rectangle(A: Cell, B: Cell) -> frozenset[Cell]:
    """The cell interval [A, B]: cells whose lower-left corner lies between those of A and B."""
    a, b = A.lower_left, B.lower_left
    if not a.le(b):
        raise ValueError(f"not a rectangle: {A} and {B} are not ordered")
    return Interval(a, b.shift(1, 1)).cells()


def is_inner_interval(C: CellCollection, interval: Interval) -> bool:
    """True iff `interval` is proper and every cell of its rectangle belongs to C."""
    if not interval.is_proper:
        return False
    cells = C.cells
    a, b = interval.a, interval.b
    return all(
        Cell(Point(r, s)) in cells
        for r in range(a.i, b.i)
        for s in range(a.j, b.j)
    )


def inner_intervals(C: CellCollection) -> list[Interval]:
    """All inner intervals of C, sorted by (a, b)."""
    cells = C.cells
    corners = {c.lower_left for c in cells}
    found = []
    # An inner interval's lower-left corner is the lower-left corner of a cell,
    # and its rectangle grows only through cells of C.
    for a in sorted(corners):
        # widest run of cells along the bottom row starting at a
        width = 0
        while Cell(a.shift(width, 0)) in cells:
            width += 1
        for w in range(1, width + 1):
            h = 1
            while True:
                found.append(Interval(a, a.shift(w, h)))
                if all(Cell(a.shift(r, h)) in cells for r in range(w)):
                    h += 1
                else:
                    break
    found.sort()
    return found


def shared_vertices(A: Cell, B: Cell) -> frozenset[Point]:
    return A.vertices & B.vertices


def weakly_connected_components(C: CellCollection) -> list[CellCollection]:
    """Maximal classes of cells under the transitive closure of vertex sharing.

    Components are returned in order of their smallest cell.
    """
    parent = {c: c for c in C.cells}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in C.cells:
        p = c.lower_left
        for di in (-1, 0, 1):
            for dj in (-1, 0, 1):
                other = Cell(p.shift(di, dj))
                if (di or dj) and other in parent:
                    ra, rb = find(c), find(other)
                    if ra != rb:
                        parent[max(ra, rb)] = min(ra, rb)
    groups: dict[Cell, list[Cell]] = {}
    for c in C.cells:
        groups.setdefault(find(c), []).append(c)
    return [CellCollection(groups[r]) for r in sorted(groups)]


def edge_sharing_pairs(C: CellCollection) -> list[tuple[Cell, Cell]]:
    """Pairs (A, B), A < B, of cells sharing an edge, in lexicographic order."""
    pairs = []
    for A in C.sorted_cells:
        for di, dj in ((0, 1), (1, 0)):
            B = A.shift(di, dj)
            if B in C.cells:
                pairs.append((A, B))
    pairs.sort()
    return pairs


def is_chessboard(C: CellCollection) -> bool:
    """True iff any two distinct cells of C meet in at most one vertex."""
    # two distinct unit cells share two or more vertices only across a common edge
    return not any(
        A.shift(di, dj) in C.cells
        for A in C.cells
        for di, dj in ((0, 1), (1, 0))
    )


def is_chessboard_bruteforce(C: CellCollection) -> bool:
    return all(len(shared_vertices(A, B)) <= 1 for A, B in combinations(C.cells, 2))


def minimal_bounding_rectangle(C: CellCollection) -> Interval:
    if not C.cells:
        raise ValueError("empty collection")
    vs = C.vertices
    return Interval(
        Point(min(v.i for v in vs), min(v.j for v in vs)),
        Point(max(v.i for v in vs), max(v.j for v in vs)),
    )
