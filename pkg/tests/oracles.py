"""Brute-force reference computations, independent of the code paths under test."""

from itertools import combinations, product

import sympy

from cellci.grid import Cell, CellCollection, Interval, Point


def inner_intervals_bruteforce(C: CellCollection) -> list[Interval]:
    """Every pair of vertices a < b, kept when all unit cells of the box are in C."""
    out = []
    for a, b in product(C.vertices, repeat=2):
        if a.i < b.i and a.j < b.j:
            if all(Cell(Point(r, s)) in C.cells for r in range(a.i, b.i) for s in range(a.j, b.j)):
                out.append(Interval(a, b))
    return sorted(out)


def components_bruteforce(C: CellCollection) -> list[frozenset]:
    """Breadth-first search on the 'shares a vertex' relation."""
    left = set(C.cells)
    comps = []
    while left:
        start = left.pop()
        comp, queue = {start}, [start]
        while queue:
            x = queue.pop()
            for y in list(left):
                if x.vertices & y.vertices:
                    left.discard(y)
                    comp.add(y)
                    queue.append(y)
        comps.append(frozenset(comp))
    return sorted(comps, key=min)


def sympy_rank(rows) -> int:
    if not rows:
        return 0
    return sympy.Matrix(rows).rank()


def rectangle_height(width: int, height: int) -> int:
    """Height of the 2-minor ideal of a (width+1) x (height+1) generic matrix."""
    return width * height


def share_count(A: Cell, B: Cell) -> int:
    return len(A.vertices & B.vertices)


def edge_pairs_bruteforce(C: CellCollection):
    return sorted(
        tuple(sorted((A, B))) for A, B in combinations(C.cells, 2) if share_count(A, B) == 2
    )
