"""Vertex-indexed monomials and binomials, and the inner 2-minor ideal of a collection."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping

from cellci._linalg import rank
from cellci.grid import CellCollection, Interval, inner_intervals


class Monomial:
    """A monomial as a sparse map from variable to positive exponent.

    Variables are arbitrary sortable hashables; for collections of cells they
    are grid points.
    """

    __slots__ = ("_exps", "_hash")

    def __init__(self, exponents: Mapping[Hashable, int] | Iterable[tuple[Hashable, int]] = ()):
        items = exponents.items() if isinstance(exponents, Mapping) else exponents
        acc: dict = {}
        for var, e in items:
            if e < 0:
                raise ValueError(f"negative exponent for {var!r}")
            if e:
                acc[var] = acc.get(var, 0) + e
        self._exps = tuple(sorted(acc.items()))
        self._hash = hash(self._exps)

    @classmethod
    def of(cls, *variables: Hashable) -> Monomial:
        """Product of the given variables, with repetition."""
        return cls((v, 1) for v in variables)

    @property
    def exponents(self) -> dict:
        return dict(self._exps)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self._exps)

    @property
    def support(self) -> frozenset:
        return frozenset(v for v, _ in self._exps)

    def items(self):
        return self._exps

    def __getitem__(self, var) -> int:
        return dict(self._exps).get(var, 0)

    def divides(self, other: Monomial) -> bool:
        theirs = dict(other._exps)
        return all(theirs.get(v, 0) >= e for v, e in self._exps)

    def gcd(self, other: Monomial) -> Monomial:
        theirs = dict(other._exps)
        return Monomial((v, min(e, theirs[v])) for v, e in self._exps if v in theirs)

    def lcm(self, other: Monomial) -> Monomial:
        acc = dict(self._exps)
        for v, e in other._exps:
            acc[v] = max(acc.get(v, 0), e)
        return Monomial(acc)

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial(self._exps + other._exps)

    def is_one(self) -> bool:
        return not self._exps

    def __eq__(self, other):
        return isinstance(other, Monomial) and self._exps == other._exps

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Monomial({dict(self._exps)!r})"

    def __str__(self):
        return format_monomial(self)


def variable_name(var) -> str:
    if isinstance(var, tuple) and len(var) == 2:
        return f"x_{var[0]}_{var[1]}"
    return str(var)


def format_monomial(m: Monomial) -> str:
    if m.is_one():
        return "1"
    parts = []
    for v, e in m.items():
        parts.append(variable_name(v) if e == 1 else f"{variable_name(v)}^{e}")
    return "*".join(parts)


@dataclass(frozen=True)
class Binomial:
    """plus - minus, with unit coefficients."""

    plus: Monomial
    minus: Monomial

    def __post_init__(self):
        if self.plus == self.minus:
            raise ValueError("binomial with equal terms is zero")

    @property
    def degree(self) -> int:
        return max(self.plus.degree, self.minus.degree)

    def variables(self) -> frozenset:
        return self.plus.support | self.minus.support

    def exponent_difference(self) -> dict:
        """The integer vector plus - minus, zero entries dropped."""
        diff = dict(self.plus.exponents)
        for v, e in self.minus.items():
            diff[v] = diff.get(v, 0) - e
        return {v: e for v, e in diff.items() if e}

    def __str__(self):
        return f"{self.plus} - {self.minus}"


@dataclass(frozen=True)
class IdealPresentation:
    generators: tuple[Binomial, ...]
    vertices: frozenset

    def __post_init__(self):
        for g in self.generators:
            if not g.variables() <= self.vertices:
                raise ValueError(f"generator {g} uses variables outside the ring")

    def __len__(self):
        return len(self.generators)


def inner_minor(interval: Interval) -> Binomial:
    """x_a x_b - x_c x_d for a proper interval with diagonal corners a, b."""
    if not interval.is_proper:
        raise ValueError(f"interval {interval} is not proper")
    return Binomial(
        Monomial.of(interval.a, interval.b),
        Monomial.of(interval.c, interval.d),
    )


def generators(C: CellCollection) -> IdealPresentation:
    """The inner 2-minors of C, one per inner interval, in canonical interval order."""
    return IdealPresentation(
        tuple(inner_minor(iv) for iv in inner_intervals(C)),
        C.vertices,
    )


def adjacent_minors(C: CellCollection) -> IdealPresentation:
    """The 2-minors of the cells of C alone."""
    return IdealPresentation(
        tuple(inner_minor(c.interval) for c in C.sorted_cells),
        C.vertices,
    )


def mu(C: CellCollection) -> int:
    """Minimal number of generators of the inner 2-minor ideal.

    The inner 2-minors are degree-2 quadrics whose diagonal terms are pairwise
    distinct and never occur as anti-diagonal terms, so they are linearly
    independent and the count of inner intervals is already minimal.
    """
    return len(inner_intervals(C))


def coefficient_matrix(presentation: IdealPresentation) -> list[list[int]]:
    """Rows: generators; columns: degree-2 monomials occurring in any generator."""
    basis: dict[Monomial, int] = {}
    for g in presentation.generators:
        for m in (g.plus, g.minus):
            basis.setdefault(m, len(basis))
    rows = []
    for g in presentation.generators:
        row = [0] * len(basis)
        row[basis[g.plus]] += 1
        row[basis[g.minus]] -= 1
        rows.append(row)
    return rows


def coefficient_rank(presentation: IdealPresentation) -> int:
    """Rank over Q of the generators viewed as vectors in the monomial basis."""
    return rank(coefficient_matrix(presentation))

