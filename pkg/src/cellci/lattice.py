"""The lattice spanned by the cell vectors of a collection.

The lattice ideal L_C = I_adj(C) : (prod x_a)^inf is never materialised;
binomial membership questions are asked of the lattice instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Mapping, Sequence

from cellci._linalg import rank, solve_integer
from cellci.grid import Cell, CellCollection, Interval, is_inner_interval
from cellci.ideal import inner_minor
from cellci.order import snake_vertex_order


class IntegerVector:
    """Sparse integer vector indexed by vertices; zero entries are dropped."""

    __slots__ = ("entries",)

    def __init__(self, entries: Mapping[Hashable, int] = None):
        self.entries = {v: e for v, e in (entries or {}).items() if e}

    @property
    def positive(self) -> dict:
        return {v: e for v, e in self.entries.items() if e > 0}

    @property
    def negative(self) -> dict:
        """The part e^- with e = e^+ - e^-; entries are positive."""
        return {v: -e for v, e in self.entries.items() if e < 0}

    def __add__(self, other: IntegerVector) -> IntegerVector:
        acc = dict(self.entries)
        for v, e in other.entries.items():
            acc[v] = acc.get(v, 0) + e
        return IntegerVector(acc)

    def __mul__(self, k: int) -> IntegerVector:
        return IntegerVector({v: k * e for v, e in self.entries.items()})

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __getitem__(self, v) -> int:
        return self.entries.get(v, 0)

    def __eq__(self, other):
        return isinstance(other, IntegerVector) and self.entries == other.entries

    def __hash__(self):
        return hash(frozenset(self.entries.items()))

    def __repr__(self):
        return f"IntegerVector({self.entries!r})"

    def total(self) -> int:
        return sum(self.entries.values())

    def dense(self, vertices: Sequence) -> list[int]:
        return [self.entries.get(v, 0) for v in vertices]


def cell_vector(cell: Cell, ambient=None) -> IntegerVector:
    """+1 at the diagonal corners of the cell, -1 at the anti-diagonal ones."""
    iv = cell.interval
    if ambient is not None:
        missing = [p for p in iv.corners() if p not in ambient]
        if missing:
            raise ValueError(f"corner {missing[0]} of {cell} is not in the ambient vertex set")
    return IntegerVector({iv.a: 1, iv.b: 1, iv.c: -1, iv.d: -1})


def exponent_difference(interval: Interval) -> IntegerVector:
    """Exponent vector of the inner minor's plus term minus that of its minus term."""
    return IntegerVector(inner_minor(interval).exponent_difference())


@dataclass(frozen=True)
class LatticeBasis:
    cells: tuple[Cell, ...]
    vectors: tuple[IntegerVector, ...]
    vertices: tuple  # column order

    def matrix(self) -> list[list[int]]:
        return [v.dense(self.vertices) for v in self.vectors]

    @property
    def dimension(self) -> int:
        return len(self.vertices)

    def dump(self) -> str:
        """Rows are cells, columns are vertices in snake order."""
        head = "# columns: " + " ".join(f"{p[0]},{p[1]}" for p in self.vertices)
        rows = [
            f"{c.lower_left.i},{c.lower_left.j}: " + " ".join(f"{x:2d}" for x in row)
            for c, row in zip(self.cells, self.matrix())
        ]
        return "\n".join([head, *rows]) + "\n"


def lattice_basis(C: CellCollection) -> LatticeBasis:
    verts = snake_vertex_order(C).vertices if C.cells else ()
    cells = C.sorted_cells
    return LatticeBasis(cells, tuple(cell_vector(c, C.vertices) for c in cells), tuple(verts))


def lattice_rank(B: LatticeBasis) -> int:
    return rank(B.matrix())


def _check_ambient(B: LatticeBasis, e: IntegerVector):
    extra = set(e.entries) - set(B.vertices)
    if extra:
        raise ValueError(f"vector has coordinates outside the lattice's ambient space: {sorted(extra)}")


def lattice_coefficients(B: LatticeBasis, e: IntegerVector) -> list[int] | None:
    """Integer coefficients writing e in terms of B's vectors, or None."""
    _check_ambient(B, e)
    return solve_integer(B.matrix(), e.dense(B.vertices))


def lattice_contains(B: LatticeBasis, e: IntegerVector) -> bool:
    return lattice_coefficients(B, e) is not None


def interval_vector_decomposition(C: CellCollection, interval: Interval) -> list[tuple[Cell, int]]:
    """Cell-vector coefficients summing to the exponent difference of an inner interval's minor.

    The all-ones combination over the rectangle's cells telescopes to the
    answer for rectangles; it is verified before being returned, with a
    general integer solve as fallback.
    """
    if not is_inner_interval(C, interval):
        raise ValueError(f"{interval} is not an inner interval")
    target = exponent_difference(interval)
    cells = sorted(interval.cells())
    total = IntegerVector()
    for c in cells:
        total = total + cell_vector(c)
    if total == target:
        return [(c, 1) for c in cells]
    B = lattice_basis(C)
    coeffs = lattice_coefficients(B, target)
    if coeffs is None:
        raise ArithmeticError(f"minor of {interval} is not in the cell lattice")
    return [(c, k) for c, k in zip(B.cells, coeffs) if k]
