"""Vertex orders and the lexicographic monomial orders they induce.

Inside the Gröbner engine a monomial is a dense exponent tuple laid out from
the largest variable to the smallest, so lex comparison is tuple comparison.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Sequence

from cellci.grid import CellCollection, Point, minimal_bounding_rectangle
from cellci.ideal import Binomial, Monomial

LESS, EQUAL, GREATER = -1, 0, 1


@dataclass(frozen=True)
class VertexOrder:
    """Vertices listed from smallest to largest; position is rank."""

    vertices: tuple
    name: str = "custom"
    offset: tuple[int, int] = (0, 0)

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("vertex order lists a vertex twice")

    @cached_property
    def rank(self) -> dict:
        return {v: k for k, v in enumerate(self.vertices)}

    def less(self, p: Hashable, q: Hashable) -> bool:
        return self.rank[p] < self.rank[q]

    def __len__(self):
        return len(self.vertices)


def snake_key(p: Point) -> tuple[int, int]:
    """Rows bottom to top; even rows left to right, odd rows right to left."""
    i, j = p
    return (j, i if j % 2 == 0 else -i)


def snake_vertex_order(C: CellCollection) -> VertexOrder:
    """The snake order on V(C), with parities read after moving the bounding rectangle to the origin."""
    if not C.cells:
        raise ValueError("empty collection")
    a = minimal_bounding_rectangle(C).a
    di, dj = -a.i, -a.j
    verts = sorted(C.vertices, key=lambda p: snake_key(p.shift(di, dj)))
    return VertexOrder(tuple(verts), "snake", (di, dj))


def rowmajor_vertex_order(C: CellCollection) -> VertexOrder:
    """Rows bottom to top, each row left to right."""
    if not C.cells:
        raise ValueError("empty collection")
    return VertexOrder(tuple(sorted(C.vertices, key=lambda p: (p.j, p.i))), "rowmajor")


def vertex_order_for(C: CellCollection, name: str) -> VertexOrder:
    if name == "snake":
        return snake_vertex_order(C)
    if name == "rowmajor":
        return rowmajor_vertex_order(C)
    raise ValueError(f"unknown vertex order {name!r}")


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order induced by a vertex order.

    ``kind`` is ``"lex"`` (largest variable compared first) or ``"grevlex"``.
    """

    base: VertexOrder
    kind: str = "lex"
    _layout: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex"):
            raise ValueError(f"unknown monomial order kind {self.kind!r}")
        object.__setattr__(self, "_layout", tuple(reversed(self.base.vertices)))

    @property
    def variables(self) -> tuple:
        """Variables from largest to smallest."""
        return self._layout

    @cached_property
    def index(self) -> dict:
        return {v: k for k, v in enumerate(self._layout)}

    @property
    def nvars(self) -> int:
        return len(self._layout)

    def encode(self, m: Monomial) -> tuple[int, ...]:
        exps = [0] * len(self._layout)
        idx = self.index
        for v, e in m.items():
            exps[idx[v]] = e
        return tuple(exps)

    def decode(self, exps: Sequence[int]) -> Monomial:
        return Monomial((v, e) for v, e in zip(self._layout, exps) if e)

    def key(self, exps: tuple[int, ...]):
        if self.kind == "lex":
            return exps
        return (sum(exps), tuple(-e for e in reversed(exps)))

    def describe(self) -> str:
        return f"{self.kind}({self.base.name})"


def lex(base: VertexOrder) -> MonomialOrder:
    return MonomialOrder(base, "lex")


def compare_monomials(order: MonomialOrder, u: Monomial, v: Monomial) -> int:
    """-1, 0 or 1 as u is less than, equal to or greater than v."""
    ku, kv = order.key(order.encode(u)), order.key(order.encode(v))
    return (ku > kv) - (ku < kv)


def leading_term(order: MonomialOrder, f: Binomial) -> tuple[Monomial, bool]:
    """The larger term of f, and whether it is the plus term."""
    if compare_monomials(order, f.plus, f.minus) == GREATER:
        return f.plus, True
    return f.minus, False


def ordered_vertices(vertices: Iterable[Hashable]) -> VertexOrder:
    """Natural sort order on arbitrary sortable labels."""
    return VertexOrder(tuple(sorted(vertices)), "natural")
