"""Enumeration of weakly connected collections of cells up to translation.

Connectivity is through shared vertices (the 8 neighbours of a cell), so the
objects counted here are fixed polyplets rather than polyominoes.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator

from cellci.grid import Cell, CellCollection, Point, weakly_connected_components

CanonicalCollection = tuple[Point, ...]

NEIGHBOURS = tuple((di, dj) for di in (-1, 0, 1) for dj in (-1, 0, 1) if di or dj)


def _corners(C) -> list[Point]:
    if isinstance(C, CellCollection):
        return [c.lower_left for c in C.cells]
    return [c.lower_left if isinstance(c, Cell) else Point(*c) for c in C]


def canonical_form(C) -> CanonicalCollection:
    """Sorted lower-left corners, translated so the componentwise minimum is (0, 0)."""
    pts = set(_corners(C))
    if not pts:
        raise ValueError("empty collection")
    mi = min(p.i for p in pts)
    mj = min(p.j for p in pts)
    return tuple(sorted(Point(p.i - mi, p.j - mj) for p in pts))


def _d4_images(pts: Iterable[Point]) -> Iterator[list[Point]]:
    pts = list(pts)
    for _ in range(4):
        yield pts
        yield [Point(-p.i - 1, p.j) for p in pts]
        pts = [Point(-p.j - 1, p.i) for p in pts]


def d4_canonical_form(C) -> CanonicalCollection:
    """Canonical form up to translation, rotation and reflection."""
    return min(canonical_form(img) for img in _d4_images(_corners(C)))


def enumerate_with_parents(max_rank: int) -> Iterator[tuple[CanonicalCollection, CanonicalCollection | None, Point | None]]:
    """Yield (form, parent, attached) rank by rank.

    ``parent`` is the first emitted form of rank one less from which ``form``
    arises by attaching the cell ``attached`` (in the form's own coordinates).
    """
    if max_rank < 1:
        raise ValueError("max_rank must be at least 1")
    level = {(Point(0, 0),): (None, None)}
    for rank in range(1, max_rank + 1):
        forms = sorted(level)
        for form in forms:
            yield (form, *level[form])
        if rank == max_rank:
            return
        nxt: dict = {}
        for form in forms:
            occupied = set(form)
            frontier = sorted({
                p.shift(di, dj) for p in form for di, dj in NEIGHBOURS
            } - occupied)
            for q in frontier:
                child = canonical_form([*form, q])
                if child not in nxt:
                    mi = min(min(p.i for p in form), q.i)
                    mj = min(min(p.j for p in form), q.j)
                    nxt[child] = (form, Point(q.i - mi, q.j - mj))
        level = nxt


def enumerate_connected(max_rank: int, d4: bool = False) -> Iterator[CanonicalCollection]:
    """Every weakly connected collection of rank <= max_rank, once up to translation.

    With ``d4`` only one representative per rotation/reflection class is kept.
    """
    seen: set = set()
    for form, _, _ in enumerate_with_parents(max_rank):
        if d4:
            rep = d4_canonical_form(form)
            if rep in seen:
                continue
            seen.add(rep)
        yield form


def enumerate_by_subsets(rank: int) -> list[CanonicalCollection]:
    """Independent brute force: connected subsets of a rank x rank box touching both axes."""
    box = [Point(i, j) for j in range(rank) for i in range(rank)]
    out = []
    for subset in combinations(box, rank):
        if min(p.i for p in subset) or min(p.j for p in subset):
            continue
        if len(weakly_connected_components(CellCollection(subset))) == 1:
            out.append(tuple(sorted(subset)))
    return sorted(out)


def _touching(a: Iterable[Point], b: set[Point]) -> bool:
    return any(p.shift(di, dj) in b for p in a for di in (-1, 0, 1) for dj in (-1, 0, 1))


def enumerate_disconnected_pairs(max_piece_rank: int = 2, reach: int = 2) -> list[CanonicalCollection]:
    """Unions of two connected pieces with disjoint vertex sets.

    Pieces have rank <= max_piece_rank; the second piece is placed at every
    offset leaving a gap of at most ``reach`` empty rows or columns.
    """
    pieces = list(enumerate_connected(max_piece_rank))
    found: set = set()
    for P in pieces:
        pw = max(p.i for p in P) + 1
        ph = max(p.j for p in P) + 1
        pset = set(P)
        for Q in pieces:
            qw = max(p.i for p in Q) + 1
            qh = max(p.j for p in Q) + 1
            for dx in range(-qw - reach, pw + reach + 1):
                for dy in range(-qh - reach, ph + reach + 1):
                    moved = [p.shift(dx, dy) for p in Q]
                    if _touching(moved, pset):
                        continue
                    found.add(canonical_form([*P, *moved]))
    return sorted(found, key=lambda f: (len(f), f))


def enumerate_chessboards(max_rank: int, box: tuple[int, int] = (6, 6)) -> Iterator[CanonicalCollection]:
    """Chessboards (connected or not) of rank 1..max_rank fitting in a box of cells, up to translation.

    Forms touch both axes, so each translation class appears once.
    """
    w, h = box
    slots = [Point(i, j) for j in range(h) for i in range(w)]

    def extend(start: int, chosen: list[Point], blocked: set[Point]):
        if chosen and min(p.i for p in chosen) == 0 and min(p.j for p in chosen) == 0:
            yield tuple(sorted(chosen))
        if len(chosen) == max_rank:
            return
        for k in range(start, len(slots)):
            p = slots[k]
            if p in blocked:
                continue
            # the first cell sits in the bottom row, or nothing can reach j = 0 later
            if not chosen and p.j > 0:
                break
            added = {p.shift(di, dj) for di, dj in ((1, 0), (-1, 0), (0, 1), (0, -1))} | {p}
            chosen.append(p)
            yield from extend(k + 1, chosen, blocked | added)
            chosen.pop()

    yield from extend(0, [], set())
